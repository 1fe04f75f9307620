#pragma once

#include <memory>
#include <optional>
#include <string>

#include "nchs/cones.hpp"
#include "nchs/types.hpp"

namespace nchs {

/// minimize 1/2 v'Pv + q'v  subject to  Av + s = b, s in K,
/// with K the product of the cones in `layout` (row order).
struct ConeProgram {
  Mat P;
  Vec q;
  Mat A;
  Vec b;
  ConeLayout layout;

  int cols() const { return static_cast<int>(q.size()); }
  int rows() const { return static_cast<int>(b.size()); }
  void validate() const;
};

enum class SolveStatus { optimal, infeasible, unbounded, max_iters };

std::string to_string(SolveStatus s);

struct ConicSolution {
  SolveStatus status = SolveStatus::max_iters;
  Vec v;            // primal point
  Vec y;            // dual point, one entry per row, in K*
  double primal_res = 0.0;
  double dual_res = 0.0;
  double gap = 0.0;
  int iterations = 0;
  Vec certificate;  // infeasibility: y with A'y ~ 0, y in K*, b'y < 0
};

struct WarmStart {
  Vec v;
  Vec y;
};

struct SolverOptions {
  double eps_abs = 1e-7;
  double eps_rel = 1e-7;
  int max_iters = 50000;
  double sigma = 1e-6;      // static regularization on the v block
  double over_relax = 1.6;  // ADMM over-relaxation
  double rho0 = 0.1;
  int check_every = 25;
};

struct KktResiduals {
  double primal = 0.0;
  double dual = 0.0;
  double gap = 0.0;
};

/// Recomputes residuals from scratch at (v, y):
///   primal: || (b - Av) - Pi_K(b - Av) ||_inf
///   dual:   || Pv + q + A'y ||_inf
///   gap:    | v'Pv + q'v + b'y | / max(1, |obj|)
KktResiduals check_kkt(const ConeProgram& cp, const Vec& v, const Vec& y);

/// Reusable solver: the constraint structure is factored once; q and b may
/// be swapped between solves (proximal iterations reuse the factorization).
/// One instance belongs to one thread.
class ConeQpSolver {
 public:
  explicit ConeQpSolver(ConeProgram cp, SolverOptions opts = {});
  ~ConeQpSolver();
  ConeQpSolver(ConeQpSolver&&) noexcept;
  ConeQpSolver& operator=(ConeQpSolver&&) noexcept;

  void set_q(const Vec& q);
  void set_b(const Vec& b);
  const ConeProgram& program() const;

  ConicSolution solve(const std::optional<WarmStart>& warm = {});

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// One-shot convenience wrapper. Throws std::invalid_argument on non-finite
/// or inconsistent inputs.
ConicSolution solve_cone_qp(const ConeProgram& cp, const std::optional<WarmStart>& warm = {},
                            const SolverOptions& opts = {});

/// Runs the solver on the feasibility problem; returns a certificate vector
/// when primal infeasibility is detected (absence proves nothing).
std::optional<Vec> detect_infeasibility(const ConeProgram& cp, const SolverOptions& opts = {});

}  // namespace nchs
