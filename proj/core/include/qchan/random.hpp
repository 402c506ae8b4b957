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

#ifndef QCHAN_RANDOM_HPP
#define QCHAN_RANDOM_HPP

#include <cstdint>
#include <random>

#include "qchan/channel.hpp"

namespace qchan {

/// Haar-distributed dim x dim unitary (QR of a complex Ginibre matrix with the phase fix).
Eigen::MatrixXcd haar_unitary(int dim, std::mt19937_64 &rng);

/// Uniformly distributed pure state on the Bloch sphere mixed with a uniform radius.
DensityMatrix random_density_matrix(std::mt19937_64 &rng);

/// Channel obtained from a Haar-random unitary U on system (x) two-qubit environment,
/// with Kraus operators K_i = <i|U|0> on the environment (generic Kraus rank 4).
KrausChannel random_channel(std::uint64_t seed);

/// Channel of tr_E[U (rho (x) |0><0|) U^dagger] for U acting on system (x) environment
/// (system is the most significant factor; dim must be 2 * environment dimension).
KrausChannel dilation_channel(const Eigen::MatrixXcd &u);

}  // namespace qchan

#endif  // QCHAN_RANDOM_HPP
