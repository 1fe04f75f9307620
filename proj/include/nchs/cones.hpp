#pragma once

#include <vector>

#include "nchs/types.hpp"

namespace nchs {

/// Cone tags for rows of a conic constraint A v + s = b, s in K.
///   zero:   s = 0                (equality rows)
///   nonneg: s >= 0               (inequality rows, A v <= b)
///   soc:    s = (t, u), ||u|| <= t
enum class ConeTag { zero, nonneg, soc };

struct ConeSpan {
  ConeTag tag;
  int dim;
};

using ConeLayout = std::vector<ConeSpan>;

inline int cone_rows(const ConeLayout& layout) {
  int n = 0;
  for (const auto& span : layout) n += span.dim;
  return n;
}

/// Euclidean projection of s onto the product cone K.
Vec cone_project(const ConeLayout& layout, const Vec& s);

/// Infinity-norm distance from s to K, i.e. ||s - Pi_K(s)||_inf.
double cone_distance_inf(const ConeLayout& layout, const Vec& s);

/// Infinity-norm violation of membership in the dual cone K*.
/// (zero rows are free in the dual; nonneg and soc are self-dual.)
double dual_cone_violation(const ConeLayout& layout, const Vec& y);

}  // namespace nchs
