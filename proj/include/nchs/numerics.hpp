#pragma once

#include <utility>

#include "nchs/types.hpp"

namespace nchs {

/// Eigendecomposition of a symmetric matrix, eigenvalues ascending and
/// eigenvector columns matching that order.
struct SymEigDecomp {
  Vec eigenvalues;
  Mat eigenvectors;

  Mat reconstruct() const {
    return eigenvectors * eigenvalues.asDiagonal() * eigenvectors.transpose();
  }
};

/// Full SVD, singular values descending. U is m x m, V is n x n.
struct SvdDecomp {
  Mat U;
  Vec singular_values;
  Mat V;

  Mat reconstruct() const {
    const int r = static_cast<int>(singular_values.size());
    return U.leftCols(r) * singular_values.asDiagonal() * V.leftCols(r).transpose();
  }
};

/// Throws std::invalid_argument on non-finite entries or asymmetry beyond
/// 1e-9 * max(1, ||A||_inf).
SymEigDecomp sym_eig(const Mat& A);

/// Throws std::invalid_argument on non-finite entries.
SvdDecomp svd(const Mat& Z);

/// Euclidean projection of (v, t) onto the second-order cone
/// {(u, s) : ||u||_2 <= s}.
std::pair<Vec, double> soc_project(const Vec& v, double t);

}  // namespace nchs
