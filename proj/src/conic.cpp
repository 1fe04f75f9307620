#include "nchs/conic.hpp"

#include <Eigen/Cholesky>
#include <Eigen/LU>
#include <cmath>
#include <stdexcept>

#include "nchs/numerics.hpp"

namespace nchs {

namespace {

double inf_norm(const Vec& v) { return v.size() ? v.cwiseAbs().maxCoeff() : 0.0; }

constexpr double kEqRhoScale = 1e3;
constexpr double kRhoMin = 1e-6;
constexpr double kRhoMax = 1e6;
constexpr int kRhoInterval = 50;
constexpr double kCertTol = 1e-6;

}  // namespace

void ConeProgram::validate() const {
  if (P.rows() != cols() || P.cols() != cols()) throw std::invalid_argument("cone program: P shape");
  if (A.rows() != rows() || (rows() > 0 && A.cols() != cols()))
    throw std::invalid_argument("cone program: A shape");
  if (cone_rows(layout) != rows()) throw std::invalid_argument("cone program: layout rows");
  if (!P.allFinite() || !q.allFinite() || !A.allFinite() || !b.allFinite())
    throw std::invalid_argument("cone program: non-finite data");
}

std::string to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::optimal: return "optimal";
    case SolveStatus::infeasible: return "infeasible";
    case SolveStatus::unbounded: return "unbounded";
    case SolveStatus::max_iters: return "max_iters";
  }
  return "?";
}

KktResiduals check_kkt(const ConeProgram& cp, const Vec& v, const Vec& y) {
  KktResiduals res;
  const Vec slack = cp.b - cp.A * v;
  res.primal = cone_distance_inf(cp.layout, slack);
  res.dual = inf_norm(cp.P * v + cp.q + cp.A.transpose() * y);
  const double pobj = 0.5 * v.dot(cp.P * v) + cp.q.dot(v);
  const double dobj = -0.5 * v.dot(cp.P * v) - cp.b.dot(y);
  res.gap = std::abs(pobj - dobj) / std::max({1.0, std::abs(pobj), std::abs(dobj)});
  return res;
}

struct ConeQpSolver::Impl {
  ConeProgram cp;
  SolverOptions opts;

  Vec rho;         // per-row penalty
  double rho_bar;  // scalar the per-row values derive from
  Mat M;           // P + sigma I + A' diag(rho) A
  Eigen::LLT<Mat> llt;

  Vec x, z, y;
  bool have_state = false;

  explicit Impl(ConeProgram prog, SolverOptions o) : cp(std::move(prog)), opts(o) {
    cp.validate();
    rho_bar = opts.rho0;
    refactor();
  }

  void set_rho_rows() {
    rho.resize(cp.rows());
    int at = 0;
    for (const auto& span : cp.layout) {
      const double val = span.tag == ConeTag::zero ? rho_bar * kEqRhoScale : rho_bar;
      rho.segment(at, span.dim).setConstant(val);
      at += span.dim;
    }
  }

  void refactor() {
    set_rho_rows();
    M = cp.P;
    M.diagonal().array() += opts.sigma;
    if (cp.rows() > 0) M.noalias() += cp.A.transpose() * (rho.asDiagonal() * cp.A);
    llt.compute(M);
    if (llt.info() != Eigen::Success) {
      M.diagonal().array() += 1e-8;
      llt.compute(M);
      if (llt.info() != Eigen::Success)
        throw std::runtime_error("cone solver: factorization failed");
    }
  }

  // z = Pi_C(t) where C = { w : b - w in K }.
  Vec project_onto_c(const Vec& t) const {
    return cp.b - cone_project(cp.layout, cp.b - t);
  }

  bool infeasibility_certificate(const Vec& dy, Vec& cert) const {
    const double ny = inf_norm(dy);
    if (ny <= 1e-12) return false;
    const Vec d = dy / ny;
    const double ascale = std::max(1.0, cp.A.size() ? cp.A.cwiseAbs().maxCoeff() : 0.0);
    const double bscale = std::max(1.0, inf_norm(cp.b));
    if (inf_norm(cp.A.transpose() * d) > kCertTol * ascale) return false;
    if (dual_cone_violation(cp.layout, d) > kCertTol) return false;
    if (cp.b.dot(d) > -kCertTol * bscale) return false;
    cert = d;
    return true;
  }

  bool unbounded_certificate(const Vec& dx) const {
    const double nx = inf_norm(dx);
    if (nx <= 1e-12) return false;
    const Vec d = dx / nx;
    const double pscale = std::max(1.0, cp.P.size() ? cp.P.cwiseAbs().maxCoeff() : 0.0);
    const double qscale = std::max(1.0, inf_norm(cp.q));
    if (inf_norm(cp.P * d) > kCertTol * pscale) return false;
    if (cp.q.dot(d) > -kCertTol * qscale) return false;
    if (cp.rows() > 0) {
      // A d must be a recession direction of C, i.e. -A d in K.
      const Vec ad = -(cp.A * d);
      if (cone_distance_inf(cp.layout, ad) > kCertTol * std::max(1.0, inf_norm(ad))) return false;
    }
    return true;
  }

  // Equality-constrained KKT solve on the detected active set, second-order
  // cone duals held fixed.
  void try_polish(ConicSolution& sol) const {
    const int n = cp.cols();
    std::vector<int> act;
    Vec q_eff = cp.q;
    const Vec slack = cp.b - cp.A * sol.v;
    int at = 0;
    for (const auto& span : cp.layout) {
      if (span.tag == ConeTag::zero) {
        for (int i = 0; i < span.dim; ++i) act.push_back(at + i);
      } else if (span.tag == ConeTag::nonneg) {
        for (int i = 0; i < span.dim; ++i)
          if (sol.y(at + i) > std::max(1e-9, slack(at + i))) act.push_back(at + i);
      } else {
        q_eff.noalias() += cp.A.middleRows(at, span.dim).transpose() * sol.y.segment(at, span.dim);
      }
      at += span.dim;
    }

    const int ma = static_cast<int>(act.size());
    Mat G(ma, n);
    Vec h(ma);
    for (int i = 0; i < ma; ++i) {
      G.row(i) = cp.A.row(act[i]);
      h(i) = cp.b(act[i]);
    }

    const double delta = 1e-9;
    Mat K = Mat::Zero(n + ma, n + ma);
    K.topLeftCorner(n, n) = cp.P;
    K.topLeftCorner(n, n).diagonal().array() += delta;
    K.topRightCorner(n, ma) = G.transpose();
    K.bottomLeftCorner(ma, n) = G;
    K.bottomRightCorner(ma, ma).diagonal().array() -= delta;
    Vec rhs(n + ma);
    rhs.head(n) = -q_eff;
    rhs.tail(ma) = h;

    Eigen::PartialPivLU<Mat> lu(K);
    Vec sol_kkt = lu.solve(rhs);
    for (int refine = 0; refine < 2; ++refine)
      sol_kkt += lu.solve(rhs - K * sol_kkt);

    Vec v_new = sol_kkt.head(n);
    Vec y_new = sol.y;
    at = 0;
    for (const auto& span : cp.layout) {
      if (span.tag != ConeTag::soc)
        for (int i = 0; i < span.dim; ++i) y_new(at + i) = 0.0;
      at += span.dim;
    }
    for (int i = 0; i < ma; ++i) y_new(act[i]) = sol_kkt(n + i);

    const auto before = check_kkt(cp, sol.v, sol.y);
    const auto after = check_kkt(cp, v_new, y_new);
    if (std::max(after.primal, after.dual) <= std::max(before.primal, before.dual)) {
      sol.v = std::move(v_new);
      sol.y = std::move(y_new);
    }
  }

  ConicSolution run(const std::optional<WarmStart>& warm) {
    const int n = cp.cols();
    const int m = cp.rows();

    if (warm.has_value()) {
      if (warm->v.size() != n || warm->y.size() != m)
        throw std::invalid_argument("cone solver: warm start size");
      x = warm->v;
      y = warm->y;
      z = project_onto_c(cp.A * x + y.cwiseQuotient(rho));
      have_state = true;
    } else if (!have_state) {
      x = Vec::Zero(n);
      y = Vec::Zero(m);
      z = project_onto_c(Vec::Zero(m));
      have_state = true;
    }

    ConicSolution sol;
    sol.status = SolveStatus::max_iters;

    Vec y_prev_window = y;
    Vec x_prev_window = x;

    const double alpha = opts.over_relax;
    int it = 0;
    for (it = 1; it <= opts.max_iters; ++it) {
      Vec rhs = opts.sigma * x - cp.q;
      if (m > 0) rhs.noalias() += cp.A.transpose() * (rho.cwiseProduct(z) - y);
      const Vec xt = llt.solve(rhs);
      const Vec x_next = alpha * xt + (1.0 - alpha) * x;
      if (m > 0) {
        const Vec zeta = cp.A * xt;
        const Vec zbar = alpha * zeta + (1.0 - alpha) * z;
        const Vec t = zbar + y.cwiseQuotient(rho);
        const Vec z_next = project_onto_c(t);
        y += rho.cwiseProduct(zbar - z_next);
        z = z_next;
      }
      x = x_next;

      // termination
      const Vec ax = m > 0 ? Vec(cp.A * x) : Vec();
      const double rp = m > 0 ? inf_norm(ax - z) : 0.0;
      const Vec px = cp.P * x;
      const Vec aty = m > 0 ? Vec(cp.A.transpose() * y) : Vec::Zero(n);
      const double rd = inf_norm(px + cp.q + aty);
      const double eps_p = opts.eps_abs +
                           opts.eps_rel * std::max(m > 0 ? inf_norm(ax) : 0.0, inf_norm(z));
      const double eps_d =
          opts.eps_abs +
          opts.eps_rel * std::max({inf_norm(px), inf_norm(cp.q), inf_norm(aty)});
      if (rp <= eps_p && rd <= eps_d) break;

      if (it % opts.check_every == 0) {
        Vec cert;
        if (m > 0 && infeasibility_certificate(y - y_prev_window, cert)) {
          sol.status = SolveStatus::infeasible;
          sol.certificate = cert;
          sol.v = x;
          sol.y = y;
          sol.iterations = it;
          return sol;
        }
        if (unbounded_certificate(x - x_prev_window)) {
          sol.status = SolveStatus::unbounded;
          sol.v = x;
          sol.y = y;
          sol.iterations = it;
          return sol;
        }
        y_prev_window = y;
        x_prev_window = x;
      }

      if (it % kRhoInterval == 0 && m > 0) {
        const double prim_scale = std::max({1e-12, inf_norm(ax), inf_norm(z)});
        const double dual_scale =
            std::max({1e-12, inf_norm(px), inf_norm(cp.q), inf_norm(aty)});
        const double ratio = std::sqrt((rp / prim_scale) / std::max(rd / dual_scale, 1e-12));
        if (ratio > 5.0 || ratio < 0.2) {
          rho_bar = std::min(kRhoMax, std::max(kRhoMin, rho_bar * ratio));
          refactor();
        }
      }
    }

    sol.v = x;
    sol.y = y;
    sol.iterations = std::min(it, opts.max_iters);
    try_polish(sol);
    x = sol.v;
    y = sol.y;

    const auto res = check_kkt(cp, sol.v, sol.y);
    sol.primal_res = res.primal;
    sol.dual_res = res.dual;
    sol.gap = res.gap;
    if (res.primal <= 1e-6 && res.dual <= 1e-6 && res.gap <= 1e-6)
      sol.status = SolveStatus::optimal;
    else
      sol.status = SolveStatus::max_iters;
    return sol;
  }
};

ConeQpSolver::ConeQpSolver(ConeProgram cp, SolverOptions opts)
    : impl_(std::make_unique<Impl>(std::move(cp), opts)) {}
ConeQpSolver::~ConeQpSolver() = default;
ConeQpSolver::ConeQpSolver(ConeQpSolver&&) noexcept = default;
ConeQpSolver& ConeQpSolver::operator=(ConeQpSolver&&) noexcept = default;

void ConeQpSolver::set_q(const Vec& q) {
  if (q.size() != impl_->cp.q.size()) throw std::invalid_argument("set_q: size mismatch");
  if (!q.allFinite()) throw std::invalid_argument("set_q: non-finite");
  impl_->cp.q = q;
}

void ConeQpSolver::set_b(const Vec& b) {
  if (b.size() != impl_->cp.b.size()) throw std::invalid_argument("set_b: size mismatch");
  if (!b.allFinite()) throw std::invalid_argument("set_b: non-finite");
  impl_->cp.b = b;
}

const ConeProgram& ConeQpSolver::program() const { return impl_->cp; }

ConicSolution ConeQpSolver::solve(const std::optional<WarmStart>& warm) {
  return impl_->run(warm);
}

ConicSolution solve_cone_qp(const ConeProgram& cp, const std::optional<WarmStart>& warm,
                            const SolverOptions& opts) {
  ConeQpSolver solver(cp, opts);
  return solver.solve(warm);
}

std::optional<Vec> detect_infeasibility(const ConeProgram& cp, const SolverOptions& opts) {
  ConeProgram feas = cp;
  feas.P.setZero();
  feas.q.setZero();
  const auto sol = solve_cone_qp(feas, {}, opts);
  if (sol.status == SolveStatus::infeasible) return sol.certificate;
  return std::nullopt;
}

}  // namespace nchs
