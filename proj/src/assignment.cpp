#include "nchs/assignment.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace nchs {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Kuhn-Munkres with potentials; cost is n x m with n <= m, minimizes.
// Returns for each row a distinct assigned column.
std::vector<int> hungarian_min(const Mat& cost) {
  const int n = static_cast<int>(cost.rows());
  const int m = static_cast<int>(cost.cols());
  std::vector<double> u(n + 1, 0.0), v(m + 1, 0.0), minv(m + 1);
  std::vector<int> p(m + 1, 0), way(m + 1, 0);
  std::vector<char> used(m + 1);

  for (int i = 1; i <= n; ++i) {
    p[0] = i;
    int j0 = 0;
    std::fill(minv.begin(), minv.end(), kInf);
    std::fill(used.begin(), used.end(), 0);
    do {
      used[j0] = 1;
      const int i0 = p[j0];
      int j1 = 0;
      double delta = kInf;
      for (int j = 1; j <= m; ++j) {
        if (used[j]) continue;
        const double cur = cost(i0 - 1, j - 1) - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= m; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const int j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0);
  }

  std::vector<int> row_to_col(n, -1);
  for (int j = 1; j <= m; ++j)
    if (p[j]) row_to_col[p[j] - 1] = j - 1;
  return row_to_col;
}

// Best assignment weight for columns cols of Z restricted to rows where
// row_free holds.
double best_weight(const Mat& Z, const std::vector<int>& cols, const std::vector<char>& row_free) {
  if (cols.empty()) return 0.0;
  std::vector<int> rows;
  for (int r = 0; r < Z.rows(); ++r)
    if (row_free[r]) rows.push_back(r);
  Mat cost(cols.size(), rows.size());
  for (std::size_t a = 0; a < cols.size(); ++a)
    for (std::size_t b = 0; b < rows.size(); ++b) cost(a, b) = -Z(rows[b], cols[a]);
  const auto sol = hungarian_min(cost);
  double w = 0.0;
  for (std::size_t a = 0; a < cols.size(); ++a) w += Z(rows[sol[a]], cols[a]);
  return w;
}

}  // namespace

std::vector<int> max_weight_assignment(const Mat& Z) {
  const int m = static_cast<int>(Z.rows());
  const int n = static_cast<int>(Z.cols());
  if (m < n) throw std::invalid_argument("max_weight_assignment: need rows >= cols");

  std::vector<char> row_free(m, 1);
  std::vector<int> remaining;
  for (int j = 0; j < n; ++j) remaining.push_back(j);

  const double scale = std::max(1.0, Z.cwiseAbs().maxCoeff() * n);
  const double tol = 1e-9 * scale;

  double target = best_weight(Z, remaining, row_free);
  std::vector<int> col_to_row(n, -1);

  // Fix columns left to right to the smallest row that keeps the optimum;
  // this pins the tie-break to the lexicographically smallest map.
  for (int j = 0; j < n; ++j) {
    remaining.erase(remaining.begin());
    for (int r = 0; r < m; ++r) {
      if (!row_free[r]) continue;
      row_free[r] = 0;
      const double rest = best_weight(Z, remaining, row_free);
      if (Z(r, j) + rest >= target - tol) {
        col_to_row[j] = r;
        target = rest;
        break;
      }
      row_free[r] = 1;
    }
    if (col_to_row[j] < 0) throw std::runtime_error("max_weight_assignment: forcing pass failed");
  }
  return col_to_row;
}

}  // namespace nchs
