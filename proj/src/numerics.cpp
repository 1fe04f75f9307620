#include "nchs/numerics.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <stdexcept>

#include "nchs/cones.hpp"

namespace nchs {

namespace {

void require_finite(const Mat& A, const char* who) {
  if (!A.allFinite()) throw std::invalid_argument(std::string(who) + ": non-finite entries");
}

}  // namespace

SymEigDecomp sym_eig(const Mat& A) {
  require_finite(A, "sym_eig");
  if (A.rows() != A.cols()) throw std::invalid_argument("sym_eig: matrix not square");
  const double scale = std::max(1.0, A.cwiseAbs().maxCoeff());
  if ((A - A.transpose()).cwiseAbs().maxCoeff() > 1e-9 * scale)
    throw std::invalid_argument("sym_eig: matrix not symmetric");

  Eigen::SelfAdjointEigenSolver<Mat> es(0.5 * (A + A.transpose()));
  if (es.info() != Eigen::Success) throw std::runtime_error("sym_eig: decomposition failed");
  return SymEigDecomp{es.eigenvalues(), es.eigenvectors()};
}

SvdDecomp svd(const Mat& Z) {
  require_finite(Z, "svd");
  Eigen::JacobiSVD<Mat> d(Z, Eigen::ComputeFullU | Eigen::ComputeFullV);
  return SvdDecomp{d.matrixU(), d.singularValues(), d.matrixV()};
}

std::pair<Vec, double> soc_project(const Vec& v, double t) {
  const double nv = v.norm();
  if (nv <= t) return {v, t};
  if (nv <= -t) return {Vec::Zero(v.size()), 0.0};
  const double s = 0.5 * (nv + t);
  return {(s / nv) * v, s};
}

Vec cone_project(const ConeLayout& layout, const Vec& s) {
  Vec out(s.size());
  int at = 0;
  for (const auto& span : layout) {
    switch (span.tag) {
      case ConeTag::zero:
        out.segment(at, span.dim).setZero();
        break;
      case ConeTag::nonneg:
        out.segment(at, span.dim) = s.segment(at, span.dim).cwiseMax(0.0);
        break;
      case ConeTag::soc: {
        auto [u, tt] = soc_project(s.segment(at + 1, span.dim - 1), s(at));
        out(at) = tt;
        out.segment(at + 1, span.dim - 1) = u;
        break;
      }
    }
    at += span.dim;
  }
  return out;
}

double cone_distance_inf(const ConeLayout& layout, const Vec& s) {
  if (s.size() == 0) return 0.0;
  return (s - cone_project(layout, s)).cwiseAbs().maxCoeff();
}

double dual_cone_violation(const ConeLayout& layout, const Vec& y) {
  double worst = 0.0;
  int at = 0;
  for (const auto& span : layout) {
    switch (span.tag) {
      case ConeTag::zero:
        break;  // dual is all of R^dim
      case ConeTag::nonneg:
        worst = std::max(worst, (-y.segment(at, span.dim)).maxCoeff());
        break;
      case ConeTag::soc:
        worst = std::max(worst, y.segment(at + 1, span.dim - 1).norm() - y(at));
        break;
    }
    at += span.dim;
  }
  return std::max(worst, 0.0);
}

}  // namespace nchs
