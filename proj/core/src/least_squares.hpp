// Copyright 2026 The qchan Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QCHAN_SRC_LEAST_SQUARES_HPP
#define QCHAN_SRC_LEAST_SQUARES_HPP

#include <functional>

#include <Eigen/Dense>

namespace qchan::detail {

using Residual = std::function<void(const Eigen::VectorXd &x, Eigen::VectorXd &r)>;

/// Levenberg-Marquardt with central-difference Jacobian. Residual vectors shorter than the
/// parameter vector are zero padded (MINPACK requires m >= n). Returns the final residual norm.
double minimize_least_squares(const Residual &residual, int num_residuals, Eigen::VectorXd &x, int max_evals = 4000);

}  // namespace qchan::detail

#endif  // QCHAN_SRC_LEAST_SQUARES_HPP
