#pragma once

#include <Eigen/Dense>

namespace nchs {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

}  // namespace nchs
