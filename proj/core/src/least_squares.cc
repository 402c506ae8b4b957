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

#include "least_squares.hpp"

#include <algorithm>

#include <unsupported/Eigen/NonLinearOptimization>
#include <unsupported/Eigen/NumericalDiff>

namespace qchan::detail {

namespace {

struct Functor {
    using Scalar = double;
    enum { InputsAtCompileTime = Eigen::Dynamic, ValuesAtCompileTime = Eigen::Dynamic };
    using InputType = Eigen::VectorXd;
    using ValueType = Eigen::VectorXd;
    using JacobianType = Eigen::MatrixXd;

    const Residual *residual = nullptr;
    int num_inputs = 0;
    int num_residuals = 0;
    int num_values = 0;

    int inputs() const {
        return num_inputs;
    }
    int values() const {
        return num_values;
    }
    int operator()(const Eigen::VectorXd &x, Eigen::VectorXd &f) const {
        Eigen::VectorXd r(num_residuals);
        (*residual)(x, r);
        f.setZero(num_values);
        f.head(num_residuals) = r;
        return 0;
    }
};

}  // namespace

double minimize_least_squares(const Residual &residual, int num_residuals, Eigen::VectorXd &x, int max_evals) {
    Functor functor;
    functor.residual = &residual;
    functor.num_inputs = static_cast<int>(x.size());
    functor.num_residuals = num_residuals;
    functor.num_values = std::max(num_residuals, functor.num_inputs);

    Eigen::NumericalDiff<Functor, Eigen::Central> diff(functor);
    Eigen::LevenbergMarquardt<Eigen::NumericalDiff<Functor, Eigen::Central>, double> lm(diff);
    lm.parameters.maxfev = max_evals;
    lm.parameters.ftol = 1e-30;
    lm.parameters.xtol = 1e-30;
    lm.parameters.gtol = 0;
    lm.minimize(x);

    Eigen::VectorXd r(num_residuals);
    residual(x, r);
    return r.norm();
}

}  // namespace qchan::detail
