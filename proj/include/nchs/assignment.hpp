#pragma once

#include <vector>

#include "nchs/types.hpp"

namespace nchs {

/// Maximum-weight assignment of the n columns of Z (m x n, m >= n) to
/// distinct rows: maximizes sum_j Z(row_of[j], j). Among maximizers returns
/// the lexicographically smallest column-to-row map.
std::vector<int> max_weight_assignment(const Mat& Z);

}  // namespace nchs
