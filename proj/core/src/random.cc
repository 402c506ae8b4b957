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

#include "qchan/random.hpp"

#include "qchan/error.hpp"

namespace qchan {

Eigen::MatrixXcd haar_unitary(int dim, std::mt19937_64 &rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    Eigen::MatrixXcd z(dim, dim);
    for (int i = 0; i < dim; i++) {
        for (int j = 0; j < dim; j++) {
            double re = normal(rng);
            double im = normal(rng);
            z(i, j) = Complex(re, im);
        }
    }
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(z);
    Eigen::MatrixXcd q = qr.householderQ();
    Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int j = 0; j < dim; j++) {
        Complex d = r(j, j);
        double mag = std::abs(d);
        if (mag > 0) {
            q.col(j) *= d / mag;
        }
    }
    return q;
}

DensityMatrix random_density_matrix(std::mt19937_64 &rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    Vec3 b;
    for (int i = 0; i < 3; i++) {
        b[i] = normal(rng);
    }
    b = b.normalized() * unit(rng);
    return DensityMatrix::from_bloch(BlochVector(b));
}

KrausChannel dilation_channel(const Eigen::MatrixXcd &u) {
    const auto dim = u.rows();
    if (dim != u.cols() || dim < 2 || dim % 2 != 0) {
        throw ValidationError("dilation unitary must be square with even dimension");
    }
    const auto env = dim / 2;
    std::vector<Mat2> ops;
    for (Eigen::Index i = 0; i < env; i++) {
        Mat2 k;
        for (int a = 0; a < 2; a++) {
            for (int b = 0; b < 2; b++) {
                k(a, b) = u(a * env + i, b * env);
            }
        }
        ops.push_back(k);
    }
    return KrausChannel(std::move(ops));
}

KrausChannel random_channel(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return dilation_channel(haar_unitary(8, rng));
}

}  // namespace qchan
