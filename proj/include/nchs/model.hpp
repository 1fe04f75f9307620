#pragma once

#include <optional>
#include <vector>

#include "nchs/conic.hpp"
#include "nchs/constraints.hpp"
#include "nchs/sets.hpp"
#include "nchs/types.hpp"

namespace nchs {

/// One nonconvex variable: a slice of the flat variable vector constrained
/// to a catalog set.
struct NonconvexAtom {
  SetInstance set;
  std::vector<int> indices;  // into the problem variable vector, in order
};

/// Convex quadratic objective plus cone-representable constraints plus
/// nonconvex atoms. Coordinates not claimed by any atom play the role of
/// the free convex variables.
struct Problem {
  int num_vars = 0;
  QuadraticForm objective;
  std::vector<ConicBlock> constraints;  // blocks over all num_vars coordinates
  std::vector<NonconvexAtom> atoms;

  /// Throws std::invalid_argument on inconsistent shapes, non-PSD objective,
  /// or overlapping atoms.
  void validate() const;

  int atom_dim() const {
    int d = 0;
    for (const auto& a : atoms) d += a.set.dim();
    return d;
  }
};

/// A scored point: objective, constraint residual, and the merit that ranks
/// candidates.
struct Candidate {
  Vec v;
  double objective = 0.0;
  double residual = 0.0;
  double merit = 0.0;
};

double objective_eval(const Problem& p, const Vec& v);

/// Total violation: sum of positive parts over inequality rows, absolute
/// values over equality rows, and (||u|| - t)+ per second-order block.
double residual_eval(const Problem& p, const Vec& v);

double merit_eval(const Problem& p, const Vec& v, double lambda);

Candidate make_candidate(const Problem& p, const Vec& v, double lambda);

/// Stacks the atom coordinates of v (atom order, slice order within each).
Vec gather_atoms(const Problem& p, const Vec& v);

/// Writes an atom-stacked vector back into the matching coordinates of v.
void scatter_atoms(const Problem& p, const Vec& stacked, Vec& v);

/// Projects an atom-stacked vector set-by-set.
Vec project_atoms(const Problem& p, const Vec& stacked);

/// Builds the cone program for the convex part. With drop_atoms each atom is
/// replaced by its convex relaxation (extra aux columns are appended after
/// the problem variables). extras are additional blocks over num_vars
/// columns; extra_objective (if any) is added to the quadratic objective.
/// Compilation order is fixed, so equal inputs give identical programs.
ConeProgram compile(const Problem& p, bool drop_atoms,
                    const std::vector<ConicBlock>& extras = {},
                    const std::optional<QuadraticForm>& extra_objective = {});

}  // namespace nchs
