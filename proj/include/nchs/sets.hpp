#pragma once

#include <string>
#include <vector>

#include "nchs/constraints.hpp"
#include "nchs/rng.hpp"
#include "nchs/types.hpp"

namespace nchs {

enum class SetKind {
  boolean,
  finite,
  integer,
  choose,
  card,
  quadratic,
  annulus,
  sphere,
  box_complement,
  bounded_sv,
  rank,
  sym_lowrank_psd,
  assign,
  permute,
  cycle,
  product,
  set_union,
};

/// A convex subset of one nonconvex set, anchored at a member point; blocks
/// may use trailing auxiliary coordinates.
using Restriction = LocalConstraints;

/// One catalog set with its parameters. Matrix-valued sets bind their atom
/// coordinates in row-major order.
struct SetInstance {
  SetKind kind;
  int n = 0;      // vector length / matrix cols (rows for square sets)
  int m = 0;      // matrix rows
  int k = 0;      // cardinality / rank bound
  double M = 0;   // infinity-norm / spectral bound
  double r = 0;   // inner radius
  double R = 0;   // outer radius
  double a = 0;   // box-complement inner bound
  double b = 0;   // box-complement outer bound
  double alpha = 0;
  double beta = 0;
  Mat A;          // quadratic-set matrix
  Vec bvec;       // quadratic-set linear term
  Vec values;     // finite-set elements, ascending
  std::vector<SetInstance> parts;

  /// Number of coordinates a variable in this set occupies.
  int dim() const;

  /// True when the member list is finite (neighbors exist, oracle can
  /// enumerate).
  bool is_discrete() const;

  /// Throws std::invalid_argument when parameters are out of range.
  void validate() const;

  /// Smallest known bound B with ||z||_inf <= B for every member.
  double box_bound() const;

  /// Euclidean projection (approximate for cycle sets: members are fixed,
  /// non-members map to a greedy nearby cycle).
  Vec project(const Vec& z) const;

  /// Convex constraints every member satisfies.
  LocalConstraints relax() const;

  /// Auxiliary coordinate values witnessing that member z satisfies relax().
  Vec relax_witness(const Vec& z) const;

  /// Convex restriction at anchor (projected into the set first if needed).
  Restriction restrict_at(const Vec& anchor) const;

  /// Members at discrete distance one; empty for continuous sets.
  std::vector<Vec> neighbors(const Vec& z) const;

  bool contains(const Vec& z, double tol) const;

  /// Random member (projection-exactness and relaxation-soundness checks).
  Vec sample_member(Rng& rng) const;

  std::string name() const;
};

SetInstance boolean_set(int n);
SetInstance finite_set(Vec values);
SetInstance integer_set(int n, double M);
SetInstance choose_set(int n, int k);
SetInstance card_set(int n, int k, double M);
SetInstance quadratic_set(Mat A, Vec b, double alpha, double beta);
SetInstance annulus_set(int n, double r, double R);
SetInstance sphere_set(int n, double r);
SetInstance box_complement_set(int n, double a, double b);
SetInstance bounded_sv_set(int m, int n, double alpha);
SetInstance rank_set(int m, int n, int k, double M);
SetInstance sym_lowrank_psd_set(int n, int k, double M);
SetInstance assign_set(int m, int n);
SetInstance permute_set(int n);
SetInstance cycle_set(int n);
SetInstance product_set(std::vector<SetInstance> parts);
SetInstance union_set(std::vector<SetInstance> parts);

/// Row-major reshape helpers for matrix-valued sets.
Mat unflatten(const Vec& z, int rows, int cols);
Vec flatten(const Mat& Z);

}  // namespace nchs
