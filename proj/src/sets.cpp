#include "nchs/sets.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "nchs/assignment.hpp"
#include "nchs/numerics.hpp"

namespace nchs {

namespace {

std::vector<int> argsort_desc_abs(const Vec& z) {
  std::vector<int> idx(z.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](int i, int j) {
    return std::abs(z(i)) > std::abs(z(j));
  });
  return idx;
}

std::vector<int> argsort_desc(const Vec& z) {
  std::vector<int> idx(z.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](int i, int j) { return z(i) > z(j); });
  return idx;
}

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

// Orthonormal columns from a Gaussian draw (QR).
Mat random_orthonormal(int rows, int cols, Rng& rng) {
  Mat G(rows, rows);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < rows; ++j) G(i, j) = rng.normal();
  Eigen::HouseholderQR<Mat> qr(G);
  Mat Q = qr.householderQ();
  return Q.leftCols(cols);
}

void shuffle_indices(std::vector<int>& idx, Rng& rng) {
  for (int i = static_cast<int>(idx.size()) - 1; i > 0; --i) {
    const int j = static_cast<int>(rng.uniform_int(i + 1));
    std::swap(idx[i], idx[j]);
  }
}

Vec cycle_matrix_from_order(const std::vector<int>& order) {
  const int n = static_cast<int>(order.size());
  Mat Z = Mat::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    const int a = order[i], b = order[(i + 1) % n];
    Z(a, b) = 1.0;
    Z(b, a) = 1.0;
  }
  return flatten(Z);
}

// Quadratic set helpers: g(z) = z'Az + 2b'z; center c = -A^{-1}b;
// g(z) + c0 = (z-c)'A(z-c) with c0 = b'A^{-1}b.
struct QuadGeometry {
  SymEigDecomp eig;
  Vec center;
  double c0;
};

QuadGeometry quad_geometry(const SetInstance& set) {
  QuadGeometry g;
  g.eig = sym_eig(set.A);
  if (g.eig.eigenvalues.minCoeff() <= 0)
    throw std::invalid_argument("quadratic set: A must be positive definite");
  g.center = -g.eig.eigenvectors *
             (g.eig.eigenvectors.transpose() * set.bvec).cwiseQuotient(g.eig.eigenvalues);
  g.c0 = set.bvec.dot(-g.center);
  return g;
}

double quad_value(const SetInstance& set, const Vec& z) {
  return z.dot(set.A * z) + 2.0 * set.bvec.dot(z);
}

// Projection onto {g(x) = level} by bisection on the multiplier of
// x = (I + mu A)^{-1} (z - mu b), expressed in the eigenbasis of A.
Vec quad_boundary_project(const SetInstance& set, const QuadGeometry& geo, const Vec& z,
                          double level, bool outside) {
  const Vec lam = geo.eig.eigenvalues;
  const Mat& Q = geo.eig.eigenvectors;
  const Vec zt = Q.transpose() * z;
  const Vec bt = Q.transpose() * set.bvec;

  auto g_of = [&](double mu) {
    double g = 0.0;
    for (int i = 0; i < lam.size(); ++i) {
      const double xi = (zt(i) - mu * bt(i)) / (1.0 + mu * lam(i));
      g += lam(i) * xi * xi + 2.0 * bt(i) * xi;
    }
    return g;
  };

  double lo, hi;
  if (outside) {
    // g decreases from g(z) > level toward g(center) as mu grows.
    lo = 0.0;
    hi = 1.0;
    int guard = 0;
    while (g_of(hi) > level) {
      hi *= 2.0;
      if (++guard > 200) throw std::runtime_error("quadratic projection: bracket failed");
    }
  } else {
    // mu in (-1/lambda_max, 0]; g blows up toward the pole.
    const double pole = -1.0 / lam.maxCoeff();
    lo = 0.0;  // treat as "hi" side; swap below
    double t = 0.5;
    int guard = 0;
    while (g_of(pole * t) < level) {
      t = 0.5 * (1.0 + t);
      if (++guard > 200) {
        // z is (numerically) the center: no bracket along this ray.
        throw std::domain_error("quadratic projection: center-degenerate input");
      }
    }
    hi = pole * t;
  }

  double a = lo, c = hi;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (a + c);
    if ((g_of(mid) > level) == outside)
      a = mid;
    else
      c = mid;
  }
  const double mu = 0.5 * (a + c);
  Vec xt(lam.size());
  for (int i = 0; i < lam.size(); ++i) xt(i) = (zt(i) - mu * bt(i)) / (1.0 + mu * lam(i));
  return Q * xt;
}

// Index of the part whose projection is nearest; ties go to the first part.
int union_pick_part(const SetInstance& set, const Vec& z) {
  int best = 0;
  double best_dist = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < set.parts.size(); ++i) {
    const double d = (z - set.parts[i].project(z)).norm();
    if (d < best_dist) {
      best_dist = d;
      best = static_cast<int>(i);
    }
  }
  return best;
}

}  // namespace

Mat unflatten(const Vec& z, int rows, int cols) {
  Mat Z(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) Z(i, j) = z(i * cols + j);
  return Z;
}

Vec flatten(const Mat& Z) {
  Vec z(Z.rows() * Z.cols());
  for (int i = 0; i < Z.rows(); ++i)
    for (int j = 0; j < Z.cols(); ++j) z(i * Z.cols() + j) = Z(i, j);
  return z;
}

int SetInstance::dim() const {
  switch (kind) {
    case SetKind::boolean:
    case SetKind::integer:
    case SetKind::choose:
    case SetKind::card:
    case SetKind::quadratic:
    case SetKind::annulus:
    case SetKind::sphere:
    case SetKind::box_complement:
      return n;
    case SetKind::finite:
      return 1;
    case SetKind::bounded_sv:
    case SetKind::rank:
    case SetKind::assign:
      return m * n;
    case SetKind::sym_lowrank_psd:
    case SetKind::permute:
    case SetKind::cycle:
      return n * n;
    case SetKind::product: {
      int d = 0;
      for (const auto& p : parts) d += p.dim();
      return d;
    }
    case SetKind::set_union:
      return parts.front().dim();
  }
  return 0;
}

bool SetInstance::is_discrete() const {
  switch (kind) {
    case SetKind::boolean:
    case SetKind::finite:
    case SetKind::integer:
    case SetKind::choose:
    case SetKind::assign:
    case SetKind::permute:
    case SetKind::cycle:
      return true;
    case SetKind::product:
    case SetKind::set_union:
      return std::all_of(parts.begin(), parts.end(),
                         [](const SetInstance& p) { return p.is_discrete(); });
    default:
      return false;
  }
}

std::string SetInstance::name() const {
  switch (kind) {
    case SetKind::boolean: return "boolean";
    case SetKind::finite: return "finite";
    case SetKind::integer: return "integer";
    case SetKind::choose: return "choose";
    case SetKind::card: return "card";
    case SetKind::quadratic: return "quadratic";
    case SetKind::annulus: return "annulus";
    case SetKind::sphere: return "sphere";
    case SetKind::box_complement: return "box_complement";
    case SetKind::bounded_sv: return "bounded_sv";
    case SetKind::rank: return "rank";
    case SetKind::sym_lowrank_psd: return "sym_lowrank_psd";
    case SetKind::assign: return "assign";
    case SetKind::permute: return "permute";
    case SetKind::cycle: return "cycle";
    case SetKind::product: return "product";
    case SetKind::set_union: return "union";
  }
  return "?";
}

void SetInstance::validate() const {
  auto fail = [&](const std::string& msg) {
    throw std::invalid_argument(name() + " set: " + msg);
  };
  switch (kind) {
    case SetKind::boolean:
      if (n < 1) fail("n >= 1 required");
      break;
    case SetKind::finite:
      if (values.size() == 0) fail("needs at least one value");
      for (int i = 1; i < values.size(); ++i)
        if (values(i) <= values(i - 1)) fail("values must be strictly ascending");
      break;
    case SetKind::integer:
      if (n < 1 || M <= 0) fail("n >= 1 and M > 0 required");
      break;
    case SetKind::choose:
      if (n < 1 || k < 1 || k > n) fail("1 <= k <= n required");
      break;
    case SetKind::card:
      if (n < 1 || k < 1 || M <= 0) fail("n, k >= 1 and M > 0 required");
      break;
    case SetKind::quadratic: {
      if (A.rows() != n || A.cols() != n || bvec.size() != n) fail("dimension mismatch");
      const auto geo = quad_geometry(*this);
      if (beta < alpha || alpha < -geo.c0 - 1e-9) fail("need beta >= alpha >= -b'A^{-1}b");
      break;
    }
    case SetKind::annulus:
      if (n < 1 || r < 0 || R < r) fail("R >= r >= 0 required");
      break;
    case SetKind::sphere:
      if (n < 1 || r < 0) fail("r >= 0 required");
      break;
    case SetKind::box_complement:
      if (n < 1 || a < 0 || b < a) fail("b >= a >= 0 required");
      break;
    case SetKind::bounded_sv:
      if (m < 1 || n < 1 || alpha < 1) fail("alpha >= 1 required");
      break;
    case SetKind::rank:
      if (m < 1 || n < 1 || k < 1 || M <= 0) fail("k >= 1 and M > 0 required");
      break;
    case SetKind::sym_lowrank_psd:
      if (n < 1 || k < 1 || M <= 0) fail("k >= 1 and M > 0 required");
      break;
    case SetKind::assign:
      if (n < 1 || m < n) fail("m >= n >= 1 required");
      break;
    case SetKind::permute:
      if (n < 1) fail("n >= 1 required");
      break;
    case SetKind::cycle:
      if (n < 3) fail("n >= 3 required");
      break;
    case SetKind::product:
      if (parts.empty()) fail("needs at least one part");
      for (const auto& p : parts) p.validate();
      break;
    case SetKind::set_union: {
      if (parts.empty()) fail("needs at least one part");
      for (const auto& p : parts) p.validate();
      const int d = parts.front().dim();
      for (const auto& p : parts)
        if (p.dim() != d) fail("all parts must share one dimension");
      break;
    }
  }
}

double SetInstance::box_bound() const {
  switch (kind) {
    case SetKind::boolean:
    case SetKind::choose:
    case SetKind::assign:
    case SetKind::permute:
    case SetKind::cycle:
      return 1.0;
    case SetKind::finite:
      return values.cwiseAbs().maxCoeff();
    case SetKind::integer:
      return std::floor(M);
    case SetKind::card:
    case SetKind::rank:
    case SetKind::sym_lowrank_psd:
      return M;
    case SetKind::quadratic: {
      const auto geo = quad_geometry(*this);
      const Mat Ainv = geo.eig.eigenvectors *
                       geo.eig.eigenvalues.cwiseInverse().asDiagonal() *
                       geo.eig.eigenvectors.transpose();
      const double gamma = beta + geo.c0;
      double bound = 0.0;
      for (int i = 0; i < n; ++i)
        bound = std::max(bound, std::abs(geo.center(i)) + std::sqrt(std::max(0.0, gamma * Ainv(i, i))));
      return bound;
    }
    case SetKind::annulus:
      return R;
    case SetKind::sphere:
      return r;
    case SetKind::box_complement:
      return b;
    case SetKind::bounded_sv:
      return alpha;  // |Z_ij| <= ||Z||_2
    case SetKind::product:
    case SetKind::set_union: {
      double bound = 0.0;
      for (const auto& p : parts) bound = std::max(bound, p.box_bound());
      return bound;
    }
  }
  return 0.0;
}

Vec SetInstance::project(const Vec& z) const {
  switch (kind) {
    case SetKind::boolean: {
      Vec out(n);
      for (int i = 0; i < n; ++i) out(i) = z(i) > 0.5 ? 1.0 : 0.0;
      return out;
    }
    case SetKind::finite: {
      const double x = z(0);
      auto it = std::lower_bound(values.data(), values.data() + values.size(), x);
      double best;
      if (it == values.data()) {
        best = *it;
      } else if (it == values.data() + values.size()) {
        best = *(it - 1);
      } else {
        const double hi = *it, lo = *(it - 1);
        best = (x - lo <= hi - x) ? lo : hi;  // ties to the smaller element
      }
      Vec out(1);
      out(0) = best;
      return out;
    }
    case SetKind::integer: {
      const double Mf = std::floor(M);
      Vec out(n);
      for (int i = 0; i < n; ++i) {
        const double c = std::min(Mf, std::max(-Mf, z(i)));
        out(i) = std::round(c);  // half away from zero
      }
      return out;
    }
    case SetKind::choose: {
      const auto idx = argsort_desc(z);
      Vec out = Vec::Zero(n);
      for (int i = 0; i < k; ++i) out(idx[i]) = 1.0;
      return out;
    }
    case SetKind::card: {
      const auto idx = argsort_desc_abs(z);
      Vec out = Vec::Zero(n);
      for (int i = 0; i < std::min(k, n); ++i) {
        const int j = idx[i];
        out(j) = std::min(M, std::max(-M, z(j)));
      }
      return out;
    }
    case SetKind::quadratic: {
      const double g = quad_value(*this, z);
      if (g >= alpha && g <= beta) return z;
      const auto geo = quad_geometry(*this);
      const bool outside = g > beta;
      try {
        return quad_boundary_project(*this, geo, z, outside ? beta : alpha, outside);
      } catch (const std::domain_error&) {
        // z at the center: step to the nearest boundary point along the top
        // eigenvector, first nonzero component positive.
        const int last = n - 1;
        Vec dir = geo.eig.eigenvectors.col(last);
        for (int i = 0; i < n; ++i) {
          if (std::abs(dir(i)) > 1e-12) {
            if (dir(i) < 0) dir = -dir;
            break;
          }
        }
        const double t = std::sqrt((alpha + geo.c0) / geo.eig.eigenvalues(last));
        return geo.center + t * dir;
      }
    }
    case SetKind::annulus:
    case SetKind::sphere: {
      const double lo = (kind == SetKind::sphere) ? r : r;
      const double hi = (kind == SetKind::sphere) ? r : R;
      const double nz = z.norm();
      if (nz == 0.0) {
        Vec out = Vec::Zero(n);
        if (lo > 0) out(0) = lo;
        return out;
      }
      if (nz < lo) return (lo / nz) * z;
      if (nz > hi) return (hi / nz) * z;
      return z;
    }
    case SetKind::box_complement: {
      Vec out(n);
      for (int i = 0; i < n; ++i) out(i) = std::min(b, std::max(-b, z(i)));
      if (out.cwiseAbs().maxCoeff() < a) {
        int imax = 0;
        for (int i = 1; i < n; ++i)
          if (std::abs(z(i)) > std::abs(z(imax))) imax = i;
        out(imax) = z(imax) >= 0 ? a : -a;
      }
      return out;
    }
    case SetKind::bounded_sv: {
      const Mat Z = unflatten(z, m, n);
      const auto d = svd(Z);
      const int mn = std::min(m, n);
      Vec s(mn);
      for (int i = 0; i < mn; ++i) s(i) = std::min(alpha, std::max(1.0, d.singular_values(i)));
      return flatten(d.U.leftCols(mn) * s.asDiagonal() * d.V.leftCols(mn).transpose());
    }
    case SetKind::rank: {
      const Mat Z = unflatten(z, m, n);
      const auto d = svd(Z);
      const int mn = std::min(m, n);
      Vec s = Vec::Zero(mn);
      for (int i = 0; i < std::min(k, mn); ++i) s(i) = std::min(d.singular_values(i), M);
      return flatten(d.U.leftCols(mn) * s.asDiagonal() * d.V.leftCols(mn).transpose());
    }
    case SetKind::sym_lowrank_psd: {
      const Mat Z = unflatten(z, n, n);
      const auto d = sym_eig(0.5 * (Z + Z.transpose()));
      // eigenvalues ascending: keep the k largest, clipped into [0, M].
      Vec lam = Vec::Zero(n);
      for (int i = n - std::min(k, n); i < n; ++i)
        lam(i) = std::min(M, std::max(0.0, d.eigenvalues(i)));
      return flatten(d.eigenvectors * lam.asDiagonal() * d.eigenvectors.transpose());
    }
    case SetKind::assign:
    case SetKind::permute: {
      const int rows = (kind == SetKind::permute) ? n : m;
      const Mat Z = unflatten(z, rows, n);
      const auto col_to_row = max_weight_assignment(Z);
      Mat X = Mat::Zero(rows, n);
      for (int j = 0; j < n; ++j) X(col_to_row[j], j) = 1.0;
      return flatten(X);
    }
    case SetKind::cycle: {
      const Mat Zm = unflatten(z, n, n);
      const Mat W = 0.5 * (Zm + Zm.transpose());
      struct Edge {
        double w;
        int i, j;
      };
      std::vector<Edge> edges;
      edges.reserve(n * (n - 1) / 2);
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.push_back({W(i, j), i, j});
      std::stable_sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
        if (a.w != b.w) return a.w > b.w;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
      });
      std::vector<int> deg(n, 0);
      Dsu dsu(n);
      Mat X = Mat::Zero(n, n);
      int selected = 0;
      for (const auto& e : edges) {
        if (selected == n) break;
        if (deg[e.i] >= 2 || deg[e.j] >= 2) continue;
        if (dsu.find(e.i) == dsu.find(e.j) && selected != n - 1) continue;
        X(e.i, e.j) = X(e.j, e.i) = 1.0;
        ++deg[e.i];
        ++deg[e.j];
        dsu.unite(e.i, e.j);
        ++selected;
      }
      if (selected == n - 1) {
        // A single open path remains; close it.
        std::vector<int> ends;
        for (int i = 0; i < n; ++i)
          if (deg[i] < 2) ends.push_back(i);
        X(ends[0], ends[1]) = X(ends[1], ends[0]) = 1.0;
      }
      return flatten(X);
    }
    case SetKind::product: {
      Vec out(dim());
      int at = 0;
      for (const auto& p : parts) {
        out.segment(at, p.dim()) = p.project(z.segment(at, p.dim()));
        at += p.dim();
      }
      return out;
    }
    case SetKind::set_union:
      return parts[union_pick_part(*this, z)].project(z);
  }
  return z;
}

LocalConstraints SetInstance::relax() const {
  const int d = dim();
  LocalConstraints out;
  auto box_rows = [&](double bound, int width) {
    Mat A2(2 * d, width);
    A2.setZero();
    Vec b2(2 * d);
    for (int i = 0; i < d; ++i) {
      A2(2 * i, i) = 1.0;
      b2(2 * i) = bound;
      A2(2 * i + 1, i) = -1.0;
      b2(2 * i + 1) = bound;
    }
    out.blocks.push_back(leq_block(std::move(A2), std::move(b2)));
  };

  switch (kind) {
    case SetKind::boolean:
    case SetKind::choose: {
      Mat A2(2 * d, d);
      A2.setZero();
      Vec b2(2 * d);
      for (int i = 0; i < d; ++i) {
        A2(2 * i, i) = 1.0;
        b2(2 * i) = 1.0;
        A2(2 * i + 1, i) = -1.0;
        b2(2 * i + 1) = 0.0;
      }
      out.blocks.push_back(leq_block(std::move(A2), std::move(b2)));
      if (kind == SetKind::choose) {
        Mat Ae = Mat::Ones(1, d);
        Vec be(1);
        be(0) = static_cast<double>(k);
        out.blocks.push_back(eq_block(std::move(Ae), std::move(be)));
      }
      break;
    }
    case SetKind::finite: {
      Mat A2(2, 1);
      A2 << 1, -1;
      Vec b2(2);
      b2 << values(values.size() - 1), -values(0);
      out.blocks.push_back(leq_block(std::move(A2), std::move(b2)));
      break;
    }
    case SetKind::integer:
      box_rows(std::floor(M), d);
      break;
    case SetKind::card: {
      const double l1 = static_cast<double>(k) * M;
      if (n <= 2) {
        // Sign enumeration is no larger than the auxiliary encoding here.
        box_rows(M, d);
        const int combos = 1 << n;
        Mat A1(combos, d);
        Vec b1 = Vec::Constant(combos, l1);
        for (int c = 0; c < combos; ++c)
          for (int i = 0; i < n; ++i) A1(c, i) = (c >> i) & 1 ? 1.0 : -1.0;
        out.blocks.push_back(leq_block(std::move(A1), std::move(b1)));
      } else {
        // aux t_i >= |z_i|, sum t <= kM
        out.num_aux = n;
        box_rows(M, d + n);
        Mat A1(2 * n + 1, d + n);
        A1.setZero();
        Vec b1 = Vec::Zero(2 * n + 1);
        for (int i = 0; i < n; ++i) {
          A1(2 * i, i) = 1.0;
          A1(2 * i, d + i) = -1.0;
          A1(2 * i + 1, i) = -1.0;
          A1(2 * i + 1, d + i) = -1.0;
        }
        A1.row(2 * n).segment(d, n).setOnes();
        b1(2 * n) = l1;
        out.blocks.push_back(leq_block(std::move(A1), std::move(b1)));
      }
      break;
    }
    case SetKind::quadratic: {
      const auto geo = quad_geometry(*this);
      const Eigen::LLT<Mat> llt(A);
      const Mat L = llt.matrixL();
      const Vec g = L.triangularView<Eigen::Lower>().solve(bvec);
      out.blocks.push_back(
          soc_block(L.transpose(), g, Vec::Zero(n), std::sqrt(std::max(0.0, beta + geo.c0))));
      break;
    }
    case SetKind::annulus:
      out.blocks.push_back(soc_block(Mat::Identity(n, n), Vec::Zero(n), Vec::Zero(n), R));
      break;
    case SetKind::sphere:
      out.blocks.push_back(soc_block(Mat::Identity(n, n), Vec::Zero(n), Vec::Zero(n), r));
      break;
    case SetKind::box_complement:
      box_rows(b, d);
      break;
    case SetKind::bounded_sv: {
      box_rows(alpha, d);
      const double fro = alpha * std::sqrt(static_cast<double>(std::min(m, n)));
      out.blocks.push_back(soc_block(Mat::Identity(d, d), Vec::Zero(d), Vec::Zero(d), fro));
      break;
    }
    case SetKind::rank: {
      box_rows(M, d);
      const double fro = M * std::sqrt(static_cast<double>(std::min({k, m, n})));
      out.blocks.push_back(soc_block(Mat::Identity(d, d), Vec::Zero(d), Vec::Zero(d), fro));
      break;
    }
    case SetKind::sym_lowrank_psd: {
      // 0 <= diag <= M, |off-diag| <= M, symmetry, ||Z||_F <= M sqrt(k)
      box_rows(M, d);
      Mat Ad(n, d);
      Ad.setZero();
      Vec bd = Vec::Zero(n);
      for (int i = 0; i < n; ++i) Ad(i, i * n + i) = -1.0;
      out.blocks.push_back(leq_block(std::move(Ad), std::move(bd)));
      Mat As(n * (n - 1) / 2, d);
      As.setZero();
      Vec bs = Vec::Zero(As.rows());
      int row = 0;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++row) {
          As(row, i * n + j) = 1.0;
          As(row, j * n + i) = -1.0;
        }
      out.blocks.push_back(eq_block(std::move(As), std::move(bs)));
      const double fro = M * std::sqrt(static_cast<double>(std::min(k, n)));
      out.blocks.push_back(soc_block(Mat::Identity(d, d), Vec::Zero(d), Vec::Zero(d), fro));
      break;
    }
    case SetKind::assign:
    case SetKind::permute: {
      const int rows = (kind == SetKind::permute) ? n : m;
      Mat A2(2 * d, d);
      A2.setZero();
      Vec b2(2 * d);
      for (int i = 0; i < d; ++i) {
        A2(2 * i, i) = 1.0;
        b2(2 * i) = 1.0;
        A2(2 * i + 1, i) = -1.0;
        b2(2 * i + 1) = 0.0;
      }
      out.blocks.push_back(leq_block(std::move(A2), std::move(b2)));
      // column sums = 1
      Mat Ac(n, d);
      Ac.setZero();
      for (int j = 0; j < n; ++j)
        for (int i = 0; i < rows; ++i) Ac(j, i * n + j) = 1.0;
      out.blocks.push_back(eq_block(std::move(Ac), Vec::Ones(n)));
      // row sums: = 1 for permutations, <= 1 for assignments
      Mat Ar(rows, d);
      Ar.setZero();
      for (int i = 0; i < rows; ++i)
        for (int j = 0; j < n; ++j) Ar(i, i * n + j) = 1.0;
      if (kind == SetKind::permute)
        out.blocks.push_back(eq_block(std::move(Ar), Vec::Ones(rows)));
      else
        out.blocks.push_back(leq_block(std::move(Ar), Vec::Ones(rows)));
      break;
    }
    case SetKind::cycle: {
      Mat A2(2 * d, d);
      A2.setZero();
      Vec b2(2 * d);
      for (int i = 0; i < d; ++i) {
        A2(2 * i, i) = 1.0;
        b2(2 * i) = 1.0;
        A2(2 * i + 1, i) = -1.0;
        b2(2 * i + 1) = 0.0;
      }
      out.blocks.push_back(leq_block(std::move(A2), std::move(b2)));
      Mat As(n * (n - 1) / 2, d);
      As.setZero();
      Vec bs = Vec::Zero(As.rows());
      int row = 0;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++row) {
          As(row, i * n + j) = 1.0;
          As(row, j * n + i) = -1.0;
        }
      out.blocks.push_back(eq_block(std::move(As), std::move(bs)));
      Mat Ar(n, d);
      Ar.setZero();
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) Ar(i, i * n + j) = 1.0;
      out.blocks.push_back(eq_block(std::move(Ar), Vec::Constant(n, 2.0)));
      Mat Adg(n, d);
      Adg.setZero();
      for (int i = 0; i < n; ++i) Adg(i, i * n + i) = 1.0;
      out.blocks.push_back(eq_block(std::move(Adg), Vec::Zero(n)));
      break;
    }
    case SetKind::product: {
      std::vector<LocalConstraints> subs;
      int total_aux = 0;
      for (const auto& p : parts) {
        subs.push_back(p.relax());
        total_aux += subs.back().num_aux;
      }
      out.num_aux = total_aux;
      const int width = d + total_aux;
      int coord_at = 0;
      int aux_at = d;
      for (std::size_t i = 0; i < parts.size(); ++i) {
        const int pd = parts[i].dim();
        for (const auto& blk : subs[i].blocks) {
          Mat A2 = Mat::Zero(blk.rows(), width);
          A2.middleCols(coord_at, pd) = blk.A.leftCols(pd);
          if (subs[i].num_aux > 0)
            A2.middleCols(aux_at, subs[i].num_aux) = blk.A.rightCols(subs[i].num_aux);
          out.blocks.push_back({blk.tag, std::move(A2), blk.b});
        }
        coord_at += pd;
        aux_at += subs[i].num_aux;
      }
      break;
    }
    case SetKind::set_union: {
      // Disjunctive relaxation: z = sum_i x_i, sum s_i = 1, each part's
      // relaxation homogenized by its selector s_i, plus ||x_i||_inf <= B_i s_i.
      const int kparts = static_cast<int>(parts.size());
      std::vector<LocalConstraints> subs;
      subs.reserve(kparts);
      int aux = kparts * d + kparts;  // x_i then s
      for (const auto& p : parts) {
        subs.push_back(p.relax());
        aux += subs.back().num_aux;
      }
      out.num_aux = aux;
      const int width = d + aux;
      const int s_at = d + kparts * d;
      auto x_at = [&](int i) { return d + i * d; };

      Mat Asum = Mat::Zero(d, width);
      Asum.leftCols(d) = Mat::Identity(d, d);
      for (int i = 0; i < kparts; ++i) Asum.middleCols(x_at(i), d) = -Mat::Identity(d, d);
      out.blocks.push_back(eq_block(std::move(Asum), Vec::Zero(d)));

      Mat Aone = Mat::Zero(1, width);
      Aone.middleCols(s_at, kparts).setOnes();
      out.blocks.push_back(eq_block(std::move(Aone), Vec::Ones(1)));

      Mat Abox = Mat::Zero(2 * kparts, width);
      Vec bbox(2 * kparts);
      for (int i = 0; i < kparts; ++i) {
        Abox(2 * i, s_at + i) = 1.0;
        bbox(2 * i) = 1.0;
        Abox(2 * i + 1, s_at + i) = -1.0;
        bbox(2 * i + 1) = 0.0;
      }
      out.blocks.push_back(leq_block(std::move(Abox), std::move(bbox)));

      int part_aux_at = d + kparts * d + kparts;
      for (int i = 0; i < kparts; ++i) {
        const double Bi = parts[i].box_bound();
        Mat Am = Mat::Zero(2 * d, width);
        Vec bm = Vec::Zero(2 * d);
        for (int j = 0; j < d; ++j) {
          Am(2 * j, x_at(i) + j) = 1.0;
          Am(2 * j, s_at + i) = -Bi;
          Am(2 * j + 1, x_at(i) + j) = -1.0;
          Am(2 * j + 1, s_at + i) = -Bi;
        }
        out.blocks.push_back(leq_block(std::move(Am), std::move(bm)));

        for (const auto& blk : subs[i].blocks) {
          Mat A2 = Mat::Zero(blk.rows(), width);
          A2.middleCols(x_at(i), d) = blk.A.leftCols(d);
          if (subs[i].num_aux > 0)
            A2.middleCols(part_aux_at, subs[i].num_aux) = blk.A.rightCols(subs[i].num_aux);
          // homogenize: the constant scales with the selector
          A2.col(s_at + i) -= blk.b;
          out.blocks.push_back({blk.tag, std::move(A2), Vec::Zero(blk.rows())});
        }
        part_aux_at += subs[i].num_aux;
      }
      break;
    }
  }
  return out;
}

Vec SetInstance::relax_witness(const Vec& z) const {
  switch (kind) {
    case SetKind::card: {
      if (n <= 2) return Vec();
      return z.cwiseAbs();
    }
    case SetKind::product: {
      std::vector<Vec> ws;
      int at = 0;
      int total = 0;
      for (const auto& p : parts) {
        ws.push_back(p.relax_witness(z.segment(at, p.dim())));
        total += static_cast<int>(ws.back().size());
        at += p.dim();
      }
      Vec out(total);
      int w_at = 0;
      for (const auto& w : ws) {
        out.segment(w_at, w.size()) = w;
        w_at += static_cast<int>(w.size());
      }
      return out;
    }
    case SetKind::set_union: {
      const int kparts = static_cast<int>(parts.size());
      const int d = dim();
      const int pick = union_pick_part(*this, z);
      int part_aux = 0;
      for (const auto& p : parts) part_aux += p.relax().num_aux;
      Vec out = Vec::Zero(kparts * d + kparts + part_aux);
      out.segment(pick * d, d) = z;
      out(kparts * d + pick) = 1.0;
      int aux_at = kparts * d + kparts;
      for (int i = 0; i < kparts; ++i) {
        const int na = parts[i].relax().num_aux;
        if (i == pick && na > 0) out.segment(aux_at, na) = parts[i].relax_witness(z);
        aux_at += na;
      }
      return out;
    }
    default:
      return Vec();
  }
}

Restriction SetInstance::restrict_at(const Vec& anchor_in) const {
  Vec anchor = contains(anchor_in, 1e-6) ? anchor_in : project(anchor_in);
  const int d = dim();
  Restriction out;
  auto singleton = [&]() {
    out.blocks.push_back(eq_block(Mat::Identity(d, d), anchor));
  };

  switch (kind) {
    case SetKind::boolean:
    case SetKind::finite:
    case SetKind::integer:
    case SetKind::choose:
    case SetKind::assign:
    case SetKind::permute:
    case SetKind::cycle:
      singleton();
      break;
    case SetKind::card: {
      std::vector<int> off;
      std::vector<int> on;
      for (int i = 0; i < n; ++i) (anchor(i) != 0.0 ? on : off).push_back(i);
      if (!off.empty()) {
        Mat Az = Mat::Zero(off.size(), d);
        for (std::size_t r = 0; r < off.size(); ++r) Az(r, off[r]) = 1.0;
        out.blocks.push_back(eq_block(std::move(Az), Vec::Zero(off.size())));
      }
      if (!on.empty()) {
        Mat Ab = Mat::Zero(2 * on.size(), d);
        Vec bb = Vec::Constant(2 * on.size(), M);
        for (std::size_t r = 0; r < on.size(); ++r) {
          Ab(2 * r, on[r]) = 1.0;
          Ab(2 * r + 1, on[r]) = -1.0;
        }
        out.blocks.push_back(leq_block(std::move(Ab), std::move(bb)));
      }
      break;
    }
    case SetKind::quadratic: {
      const auto geo = quad_geometry(*this);
      const double gamma = quad_value(*this, anchor) + geo.c0;
      if (gamma <= 1e-12) {
        singleton();  // anchor at the center: the paper's display divides by zero
        break;
      }
      // x'(A z~ + b) >= sqrt(gamma) sqrt(alpha + c0) - b'z~ - c0
      Mat Al(1, d);
      Al.row(0) = -(A * anchor + bvec).transpose();
      Vec bl(1);
      bl(0) = -(std::sqrt(gamma) * std::sqrt(std::max(0.0, alpha + geo.c0)) -
                bvec.dot(anchor) - geo.c0);
      out.blocks.push_back(leq_block(std::move(Al), std::move(bl)));
      const Eigen::LLT<Mat> llt(A);
      const Mat L = llt.matrixL();
      const Vec g = L.triangularView<Eigen::Lower>().solve(bvec);
      out.blocks.push_back(
          soc_block(L.transpose(), g, Vec::Zero(n), std::sqrt(std::max(0.0, beta + geo.c0))));
      break;
    }
    case SetKind::annulus:
    case SetKind::sphere: {
      const double lo = r;
      const double hi = (kind == SetKind::sphere) ? r : R;
      Mat Al(1, d);
      Al.row(0) = -anchor.transpose();
      Vec bl(1);
      bl(0) = -lo * anchor.norm();
      out.blocks.push_back(leq_block(std::move(Al), std::move(bl)));
      out.blocks.push_back(soc_block(Mat::Identity(n, n), Vec::Zero(n), Vec::Zero(n), hi));
      break;
    }
    case SetKind::box_complement: {
      int kidx = 0;
      double best = std::numeric_limits<double>::infinity();
      for (int i = 0; i < n; ++i) {
        const double v = std::max(std::abs(anchor(i)), a);
        if (v < best) {
          best = v;
          kidx = i;
        }
      }
      Mat Al(1, d);
      Al.setZero();
      Vec bl(1);
      if (anchor(kidx) >= 0) {
        Al(0, kidx) = -1.0;
        bl(0) = -a;
      } else {
        Al(0, kidx) = 1.0;
        bl(0) = -a;
      }
      out.blocks.push_back(leq_block(std::move(Al), std::move(bl)));
      Mat Ab(2 * n, d);
      Ab.setZero();
      Vec bb = Vec::Constant(2 * n, b);
      for (int i = 0; i < n; ++i) {
        Ab(2 * i, i) = 1.0;
        Ab(2 * i + 1, i) = -1.0;
      }
      out.blocks.push_back(leq_block(std::move(Ab), std::move(bb)));
      break;
    }
    case SetKind::bounded_sv:
      // The paper's restriction needs a PSD cone; the singleton keeps the
      // solver conic-quadratic.
      singleton();
      break;
    case SetKind::rank: {
      const Mat Z = unflatten(anchor, m, n);
      const auto dcmp = svd(Z);
      const int kk = std::min({k, m, n});
      // z = sum_l s_l vec(u_l v_l'), |s_l| <= M
      out.num_aux = kk;
      Mat Ae = Mat::Zero(d, d + kk);
      Ae.leftCols(d) = Mat::Identity(d, d);
      for (int l = 0; l < kk; ++l) {
        const Mat basis = dcmp.U.col(l) * dcmp.V.col(l).transpose();
        Ae.col(d + l) = -flatten(basis);
      }
      out.blocks.push_back(eq_block(std::move(Ae), Vec::Zero(d)));
      Mat Ab = Mat::Zero(2 * kk, d + kk);
      Vec bb = Vec::Constant(2 * kk, M);
      for (int l = 0; l < kk; ++l) {
        Ab(2 * l, d + l) = 1.0;
        Ab(2 * l + 1, d + l) = -1.0;
      }
      out.blocks.push_back(leq_block(std::move(Ab), std::move(bb)));
      break;
    }
    case SetKind::sym_lowrank_psd: {
      const Mat Z = unflatten(anchor, n, n);
      const auto dcmp = sym_eig(0.5 * (Z + Z.transpose()));
      const int kk = std::min(k, n);
      out.num_aux = kk;
      Mat Ae = Mat::Zero(d, d + kk);
      Ae.leftCols(d) = Mat::Identity(d, d);
      for (int l = 0; l < kk; ++l) {
        const Vec q = dcmp.eigenvectors.col(n - 1 - l);
        Ae.col(d + l) = -flatten(Mat(q * q.transpose()));
      }
      out.blocks.push_back(eq_block(std::move(Ae), Vec::Zero(d)));
      Mat Ab = Mat::Zero(2 * kk, d + kk);
      Vec bb(2 * kk);
      for (int l = 0; l < kk; ++l) {
        Ab(2 * l, d + l) = 1.0;
        bb(2 * l) = M;
        Ab(2 * l + 1, d + l) = -1.0;
        bb(2 * l + 1) = 0.0;
      }
      out.blocks.push_back(leq_block(std::move(Ab), std::move(bb)));
      break;
    }
    case SetKind::product: {
      int coord_at = 0;
      std::vector<Restriction> subs;
      int total_aux = 0;
      for (const auto& p : parts) {
        subs.push_back(p.restrict_at(anchor.segment(coord_at, p.dim())));
        total_aux += subs.back().num_aux;
        coord_at += p.dim();
      }
      out.num_aux = total_aux;
      const int width = d + total_aux;
      coord_at = 0;
      int aux_at = d;
      for (std::size_t i = 0; i < parts.size(); ++i) {
        for (const auto& blk : subs[i].blocks) {
          Mat A2 = Mat::Zero(blk.rows(), width);
          A2.middleCols(coord_at, parts[i].dim()) = blk.A.leftCols(parts[i].dim());
          if (subs[i].num_aux > 0)
            A2.middleCols(aux_at, subs[i].num_aux) = blk.A.rightCols(subs[i].num_aux);
          out.blocks.push_back({blk.tag, std::move(A2), blk.b});
        }
        coord_at += parts[i].dim();
        aux_at += subs[i].num_aux;
      }
      break;
    }
    case SetKind::set_union:
      return parts[union_pick_part(*this, anchor)].restrict_at(anchor);
  }
  return out;
}

std::vector<Vec> SetInstance::neighbors(const Vec& z) const {
  std::vector<Vec> out;
  switch (kind) {
    case SetKind::boolean:
      for (int i = 0; i < n; ++i) {
        Vec w = z;
        w(i) = 1.0 - w(i);
        out.push_back(w);
      }
      break;
    case SetKind::finite: {
      int idx = 0;
      double best = std::numeric_limits<double>::infinity();
      for (int i = 0; i < values.size(); ++i)
        if (std::abs(values(i) - z(0)) < best) {
          best = std::abs(values(i) - z(0));
          idx = i;
        }
      if (idx > 0) out.push_back(values.segment(idx - 1, 1));
      if (idx + 1 < values.size()) out.push_back(values.segment(idx + 1, 1));
      break;
    }
    case SetKind::integer: {
      const double Mf = std::floor(M);
      for (int i = 0; i < n; ++i)
        for (double step : {-1.0, 1.0}) {
          if (std::abs(z(i) + step) > Mf) continue;
          Vec w = z;
          w(i) += step;
          out.push_back(w);
        }
      break;
    }
    case SetKind::choose:
      for (int i = 0; i + 1 < n; ++i) {
        if (z(i) == z(i + 1)) continue;
        Vec w = z;
        std::swap(w(i), w(i + 1));
        out.push_back(w);
      }
      break;
    case SetKind::card:
      for (int i = 0; i + 1 < n; ++i) {
        const bool pi = z(i) != 0.0, pj = z(i + 1) != 0.0;
        if (pi == pj) continue;
        Vec w = z;
        std::swap(w(i), w(i + 1));
        out.push_back(w);
      }
      break;
    case SetKind::assign:
    case SetKind::permute: {
      const int rows = (kind == SetKind::permute) ? n : m;
      const Mat Z = unflatten(z, rows, n);
      std::vector<Vec> cand;
      for (int i = 0; i + 1 < rows; ++i) {
        Mat W = Z;
        W.row(i).swap(W.row(i + 1));
        cand.push_back(flatten(W));
      }
      for (int j = 0; j + 1 < n; ++j) {
        Mat W = Z;
        W.col(j).swap(W.col(j + 1));
        cand.push_back(flatten(W));
      }
      for (const auto& w : cand) {
        if ((w - z).cwiseAbs().maxCoeff() == 0.0) continue;
        bool dup = false;
        for (const auto& seen : out)
          if ((w - seen).cwiseAbs().maxCoeff() == 0.0) {
            dup = true;
            break;
          }
        if (!dup) out.push_back(w);
      }
      break;
    }
    case SetKind::cycle: {
      const Mat Z = unflatten(z, n, n);
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          if (Z(i, j) != 1.0) continue;
          Mat W = Z;
          W.row(i).swap(W.row(j));
          W.col(i).swap(W.col(j));
          const Vec w = flatten(W);
          if ((w - z).cwiseAbs().maxCoeff() == 0.0) continue;
          bool dup = false;
          for (const auto& seen : out)
            if ((w - seen).cwiseAbs().maxCoeff() == 0.0) {
              dup = true;
              break;
            }
          if (!dup) out.push_back(w);
        }
      break;
    }
    case SetKind::product: {
      int at = 0;
      for (const auto& p : parts) {
        for (const auto& sub : p.neighbors(z.segment(at, p.dim()))) {
          Vec w = z;
          w.segment(at, p.dim()) = sub;
          out.push_back(w);
        }
        at += p.dim();
      }
      break;
    }
    case SetKind::set_union: {
      for (const auto& p : parts) {
        if (p.contains(z, 1e-9)) {
          out = p.neighbors(z);
          break;
        }
      }
      break;
    }
    default:
      break;  // continuous sets have no discrete neighbors
  }
  return out;
}

bool SetInstance::contains(const Vec& z, double tol) const {
  return (z - project(z)).norm() <= tol;
}

Vec SetInstance::sample_member(Rng& rng) const {
  switch (kind) {
    case SetKind::boolean: {
      Vec z(n);
      for (int i = 0; i < n; ++i) z(i) = rng.uniform() < 0.5 ? 0.0 : 1.0;
      return z;
    }
    case SetKind::finite:
      return values.segment(rng.uniform_int(values.size()), 1);
    case SetKind::integer: {
      const int Mf = static_cast<int>(std::floor(M));
      Vec z(n);
      for (int i = 0; i < n; ++i)
        z(i) = static_cast<double>(rng.uniform_int(2 * Mf + 1) - Mf);
      return z;
    }
    case SetKind::choose: {
      std::vector<int> idx(n);
      std::iota(idx.begin(), idx.end(), 0);
      shuffle_indices(idx, rng);
      Vec z = Vec::Zero(n);
      for (int i = 0; i < k; ++i) z(idx[i]) = 1.0;
      return z;
    }
    case SetKind::card: {
      std::vector<int> idx(n);
      std::iota(idx.begin(), idx.end(), 0);
      shuffle_indices(idx, rng);
      Vec z = Vec::Zero(n);
      for (int i = 0; i < std::min(k, n); ++i) z(idx[i]) = rng.uniform(-M, M);
      return z;
    }
    case SetKind::quadratic: {
      const auto geo = quad_geometry(*this);
      Vec u(n);
      for (int i = 0; i < n; ++i) u(i) = rng.normal();
      u.normalize();
      const double lam_u = u.dot(A * u);
      const double tlo = std::sqrt(std::max(0.0, alpha + geo.c0) / lam_u);
      const double thi = std::sqrt(std::max(0.0, beta + geo.c0) / lam_u);
      return geo.center + rng.uniform(tlo, thi) * u;
    }
    case SetKind::annulus:
    case SetKind::sphere: {
      Vec u(n);
      for (int i = 0; i < n; ++i) u(i) = rng.normal();
      u.normalize();
      const double hi = (kind == SetKind::sphere) ? r : R;
      return rng.uniform(r, hi) * u;
    }
    case SetKind::box_complement: {
      Vec z(n);
      for (int i = 0; i < n; ++i) z(i) = rng.uniform(-b, b);
      const int pin = static_cast<int>(rng.uniform_int(n));
      const double sign = rng.uniform() < 0.5 ? -1.0 : 1.0;
      z(pin) = sign * rng.uniform(a, b);
      return z;
    }
    case SetKind::bounded_sv: {
      const int mn = std::min(m, n);
      const Mat U = random_orthonormal(m, mn, rng);
      const Mat V = random_orthonormal(n, mn, rng);
      Vec s(mn);
      for (int i = 0; i < mn; ++i) s(i) = rng.uniform(1.0, alpha);
      return flatten(U * s.asDiagonal() * V.transpose());
    }
    case SetKind::rank: {
      const int kk = std::min({k, m, n});
      const Mat U = random_orthonormal(m, kk, rng);
      const Mat V = random_orthonormal(n, kk, rng);
      Vec s(kk);
      for (int i = 0; i < kk; ++i) s(i) = rng.uniform(0.0, M);
      return flatten(U * s.asDiagonal() * V.transpose());
    }
    case SetKind::sym_lowrank_psd: {
      const int kk = std::min(k, n);
      const Mat Q = random_orthonormal(n, kk, rng);
      Vec lam(kk);
      for (int i = 0; i < kk; ++i) lam(i) = rng.uniform(0.0, M);
      return flatten(Q * lam.asDiagonal() * Q.transpose());
    }
    case SetKind::assign:
    case SetKind::permute: {
      const int rows = (kind == SetKind::permute) ? n : m;
      std::vector<int> idx(rows);
      std::iota(idx.begin(), idx.end(), 0);
      shuffle_indices(idx, rng);
      Mat Z = Mat::Zero(rows, n);
      for (int j = 0; j < n; ++j) Z(idx[j], j) = 1.0;
      return flatten(Z);
    }
    case SetKind::cycle: {
      std::vector<int> order(n);
      std::iota(order.begin(), order.end(), 0);
      shuffle_indices(order, rng);
      return cycle_matrix_from_order(order);
    }
    case SetKind::product: {
      Vec z(dim());
      int at = 0;
      for (const auto& p : parts) {
        z.segment(at, p.dim()) = p.sample_member(rng);
        at += p.dim();
      }
      return z;
    }
    case SetKind::set_union:
      return parts[rng.uniform_int(parts.size())].sample_member(rng);
  }
  return Vec();
}

SetInstance boolean_set(int n) {
  SetInstance s;
  s.kind = SetKind::boolean;
  s.n = n;
  s.validate();
  return s;
}

SetInstance finite_set(Vec values) {
  SetInstance s;
  s.kind = SetKind::finite;
  s.values = std::move(values);
  s.n = 1;
  s.validate();
  return s;
}

SetInstance integer_set(int n, double M) {
  SetInstance s;
  s.kind = SetKind::integer;
  s.n = n;
  s.M = M;
  s.validate();
  return s;
}

SetInstance choose_set(int n, int k) {
  SetInstance s;
  s.kind = SetKind::choose;
  s.n = n;
  s.k = k;
  s.validate();
  return s;
}

SetInstance card_set(int n, int k, double M) {
  SetInstance s;
  s.kind = SetKind::card;
  s.n = n;
  s.k = k;
  s.M = M;
  s.validate();
  return s;
}

SetInstance quadratic_set(Mat A, Vec b, double alpha, double beta) {
  SetInstance s;
  s.kind = SetKind::quadratic;
  s.n = static_cast<int>(A.rows());
  s.A = std::move(A);
  s.bvec = std::move(b);
  s.alpha = alpha;
  s.beta = beta;
  s.validate();
  return s;
}

SetInstance annulus_set(int n, double r, double R) {
  SetInstance s;
  s.kind = SetKind::annulus;
  s.n = n;
  s.r = r;
  s.R = R;
  s.validate();
  return s;
}

SetInstance sphere_set(int n, double r) {
  SetInstance s;
  s.kind = SetKind::sphere;
  s.n = n;
  s.r = r;
  s.R = r;
  s.validate();
  return s;
}

SetInstance box_complement_set(int n, double a, double b) {
  SetInstance s;
  s.kind = SetKind::box_complement;
  s.n = n;
  s.a = a;
  s.b = b;
  s.validate();
  return s;
}

SetInstance bounded_sv_set(int m, int n, double alpha) {
  SetInstance s;
  s.kind = SetKind::bounded_sv;
  s.m = m;
  s.n = n;
  s.alpha = alpha;
  s.validate();
  return s;
}

SetInstance rank_set(int m, int n, int k, double M) {
  SetInstance s;
  s.kind = SetKind::rank;
  s.m = m;
  s.n = n;
  s.k = k;
  s.M = M;
  s.validate();
  return s;
}

SetInstance sym_lowrank_psd_set(int n, int k, double M) {
  SetInstance s;
  s.kind = SetKind::sym_lowrank_psd;
  s.n = n;
  s.k = k;
  s.M = M;
  s.validate();
  return s;
}

SetInstance assign_set(int m, int n) {
  SetInstance s;
  s.kind = SetKind::assign;
  s.m = m;
  s.n = n;
  s.validate();
  return s;
}

SetInstance permute_set(int n) {
  SetInstance s;
  s.kind = SetKind::permute;
  s.n = n;
  s.validate();
  return s;
}

SetInstance cycle_set(int n) {
  SetInstance s;
  s.kind = SetKind::cycle;
  s.n = n;
  s.validate();
  return s;
}

SetInstance product_set(std::vector<SetInstance> parts) {
  SetInstance s;
  s.kind = SetKind::product;
  s.parts = std::move(parts);
  s.validate();
  return s;
}

SetInstance union_set(std::vector<SetInstance> parts) {
  SetInstance s;
  s.kind = SetKind::set_union;
  s.parts = std::move(parts);
  s.validate();
  return s;
}

}  // namespace nchs
