#include "nchs/model.hpp"

#include <set>
#include <stdexcept>

namespace nchs {

Vec block_violations(const ConicBlock& blk, const Vec& v) {
  const Vec resid = blk.A * v - blk.b;
  switch (blk.tag) {
    case ConeTag::zero:
      return resid.cwiseAbs();
    case ConeTag::nonneg:
      return resid.cwiseMax(0.0);
    case ConeTag::soc: {
      const Vec s = -resid;  // s = b - Av, required in the cone
      Vec out(1);
      out(0) = std::max(0.0, s.tail(s.size() - 1).norm() - s(0));
      return out;
    }
  }
  return Vec();
}

double block_violation_sum(const ConicBlock& blk, const Vec& v) {
  return block_violations(blk, v).sum();
}

double max_violation(const std::vector<ConicBlock>& blocks, const Vec& v) {
  double worst = 0.0;
  for (const auto& blk : blocks) {
    const Vec viol = block_violations(blk, v);
    if (viol.size()) worst = std::max(worst, viol.maxCoeff());
  }
  return worst;
}

void Problem::validate() const {
  if (num_vars < 1) throw std::invalid_argument("problem: num_vars >= 1 required");
  if (objective.P.rows() != num_vars || objective.P.cols() != num_vars ||
      objective.q.size() != num_vars)
    throw std::invalid_argument("problem: objective shape mismatch");
  if (!objective.P.allFinite() || !objective.q.allFinite())
    throw std::invalid_argument("problem: non-finite objective");
  const double scale = std::max(1.0, objective.P.cwiseAbs().maxCoeff());
  if ((objective.P - objective.P.transpose()).cwiseAbs().maxCoeff() > 1e-8 * scale)
    throw std::invalid_argument("problem: objective P not symmetric");
  Eigen::SelfAdjointEigenSolver<Mat> es(objective.P);
  if (es.eigenvalues().minCoeff() < -1e-8 * scale)
    throw std::invalid_argument("problem: objective P not positive semidefinite");

  for (const auto& blk : constraints) {
    if (blk.cols() != num_vars || blk.A.rows() != blk.b.size())
      throw std::invalid_argument("problem: constraint block shape mismatch");
    if (!blk.A.allFinite() || !blk.b.allFinite())
      throw std::invalid_argument("problem: non-finite constraint");
  }

  std::set<int> used;
  for (const auto& atom : atoms) {
    atom.set.validate();
    if (static_cast<int>(atom.indices.size()) != atom.set.dim())
      throw std::invalid_argument("problem: atom dimension mismatch");
    for (int idx : atom.indices) {
      if (idx < 0 || idx >= num_vars) throw std::invalid_argument("problem: atom index range");
      if (!used.insert(idx).second)
        throw std::invalid_argument("problem: atoms must use disjoint coordinates");
    }
  }
}

double objective_eval(const Problem& p, const Vec& v) { return p.objective.eval(v); }

double residual_eval(const Problem& p, const Vec& v) {
  if (v.size() != p.num_vars) throw std::invalid_argument("residual_eval: size mismatch");
  if (!v.allFinite()) throw std::invalid_argument("residual_eval: non-finite point");
  double total = 0.0;
  for (const auto& blk : p.constraints) total += block_violation_sum(blk, v);
  return total;
}

double merit_eval(const Problem& p, const Vec& v, double lambda) {
  if (lambda <= 0) throw std::invalid_argument("merit_eval: lambda must be positive");
  return objective_eval(p, v) + lambda * residual_eval(p, v);
}

Candidate make_candidate(const Problem& p, const Vec& v, double lambda) {
  Candidate c;
  c.v = v;
  c.objective = objective_eval(p, v);
  c.residual = residual_eval(p, v);
  c.merit = c.objective + lambda * c.residual;
  return c;
}

Vec gather_atoms(const Problem& p, const Vec& v) {
  Vec out(p.atom_dim());
  int at = 0;
  for (const auto& atom : p.atoms)
    for (int idx : atom.indices) out(at++) = v(idx);
  return out;
}

void scatter_atoms(const Problem& p, const Vec& stacked, Vec& v) {
  int at = 0;
  for (const auto& atom : p.atoms)
    for (int idx : atom.indices) v(idx) = stacked(at++);
}

Vec project_atoms(const Problem& p, const Vec& stacked) {
  Vec out(stacked.size());
  int at = 0;
  for (const auto& atom : p.atoms) {
    const int d = atom.set.dim();
    out.segment(at, d) = atom.set.project(stacked.segment(at, d));
    at += d;
  }
  return out;
}

ConeProgram compile(const Problem& p, bool drop_atoms, const std::vector<ConicBlock>& extras,
                    const std::optional<QuadraticForm>& extra_objective) {
  for (const auto& blk : extras)
    if (blk.cols() != p.num_vars || blk.A.rows() != blk.b.size())
      throw std::invalid_argument("compile: extra block shape mismatch");
  if (extra_objective &&
      (extra_objective->P.rows() != p.num_vars || extra_objective->P.cols() != p.num_vars ||
       extra_objective->q.size() != p.num_vars))
    throw std::invalid_argument("compile: extra objective shape mismatch");

  std::vector<LocalConstraints> relaxations;
  int total_aux = 0;
  if (drop_atoms) {
    for (const auto& atom : p.atoms) {
      relaxations.push_back(atom.set.relax());
      total_aux += relaxations.back().num_aux;
    }
  }

  const int cols = p.num_vars + total_aux;
  int rows = 0;
  for (const auto& blk : p.constraints) rows += blk.rows();
  for (const auto& sub : relaxations)
    for (const auto& blk : sub.blocks) rows += blk.rows();
  for (const auto& blk : extras) rows += blk.rows();

  ConeProgram cp;
  cp.P = Mat::Zero(cols, cols);
  cp.P.topLeftCorner(p.num_vars, p.num_vars) = p.objective.P;
  cp.q = Vec::Zero(cols);
  cp.q.head(p.num_vars) = p.objective.q;
  if (extra_objective) {
    cp.P.topLeftCorner(p.num_vars, p.num_vars) += extra_objective->P;
    cp.q.head(p.num_vars) += extra_objective->q;
  }
  cp.A = Mat::Zero(rows, cols);
  cp.b = Vec::Zero(rows);

  int row_at = 0;
  auto emit = [&](const ConicBlock& blk, const std::vector<int>& col_map) {
    for (int c = 0; c < blk.cols(); ++c) cp.A.block(row_at, col_map[c], blk.rows(), 1) = blk.A.col(c);
    cp.b.segment(row_at, blk.rows()) = blk.b;
    cp.layout.push_back({blk.tag, blk.rows()});
    row_at += blk.rows();
  };

  std::vector<int> identity_map(p.num_vars);
  for (int i = 0; i < p.num_vars; ++i) identity_map[i] = i;

  for (const auto& blk : p.constraints) emit(blk, identity_map);

  int aux_at = p.num_vars;
  for (std::size_t ai = 0; ai < relaxations.size(); ++ai) {
    const auto& atom = p.atoms[ai];
    const auto& sub = relaxations[ai];
    std::vector<int> col_map = atom.indices;
    for (int j = 0; j < sub.num_aux; ++j) col_map.push_back(aux_at + j);
    for (const auto& blk : sub.blocks) emit(blk, col_map);
    aux_at += sub.num_aux;
  }

  for (const auto& blk : extras) emit(blk, identity_map);

  return cp;
}

}  // namespace nchs
