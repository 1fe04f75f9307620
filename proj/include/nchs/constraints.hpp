#pragma once

#include <vector>

#include "nchs/cones.hpp"
#include "nchs/types.hpp"

namespace nchs {

/// 1/2 v'Pv + q'v + r0.
struct QuadraticForm {
  Mat P;
  Vec q;
  double r0 = 0.0;

  double eval(const Vec& v) const { return 0.5 * v.dot(P * v) + q.dot(v) + r0; }
};

/// One block of conic rows: A v + s = b with s in the tagged cone.
///   zero:   A v  = b
///   nonneg: A v <= b
///   soc:    ||b_tail - A_tail v|| <= b_0 - a_0'v   (first row is the t row)
struct ConicBlock {
  ConeTag tag;
  Mat A;
  Vec b;

  int rows() const { return static_cast<int>(b.size()); }
  int cols() const { return static_cast<int>(A.cols()); }
};

/// A v <= b.
inline ConicBlock leq_block(Mat A, Vec b) { return {ConeTag::nonneg, std::move(A), std::move(b)}; }

/// A v = b.
inline ConicBlock eq_block(Mat A, Vec b) { return {ConeTag::zero, std::move(A), std::move(b)}; }

/// ||F v + g||_2 <= h'v + t0.
inline ConicBlock soc_block(const Mat& F, const Vec& g, const Vec& h, double t0) {
  ConicBlock blk;
  blk.tag = ConeTag::soc;
  blk.A.resize(F.rows() + 1, F.cols());
  blk.A.row(0) = -h.transpose();
  blk.A.bottomRows(F.rows()) = -F;
  blk.b.resize(F.rows() + 1);
  blk.b(0) = t0;
  blk.b.tail(F.rows()) = g;
  return blk;
}

/// Conic constraints over a block of local coordinates, optionally using
/// trailing auxiliary coordinates: each block's A has dim + num_aux columns.
struct LocalConstraints {
  int num_aux = 0;
  std::vector<ConicBlock> blocks;
};

/// Signed violations of one block at point v (zero rows: |Av-b| per row;
/// nonneg rows: (Av-b)+ per row; soc: single entry (||u||-t)+).
Vec block_violations(const ConicBlock& blk, const Vec& v);

/// Sum of block_violations entries.
double block_violation_sum(const ConicBlock& blk, const Vec& v);

/// Max entry of block_violations over a list of blocks (0 if empty).
double max_violation(const std::vector<ConicBlock>& blocks, const Vec& v);

}  // namespace nchs
