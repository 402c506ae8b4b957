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

#ifndef QCHAN_SIMULATOR_HPP
#define QCHAN_SIMULATOR_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "qchan/circuit.hpp"

namespace qchan {

/// Exact output: both measurement outcomes are kept and summed after tracing out the ancilla.
DensityMatrix simulate_deterministic(const CircuitProgram &prog, const DensityMatrix &rho);
DensityMatrix simulate_deterministic(const BranchedProgram &prog, const DensityMatrix &rho);

struct ShotRecord {
    DensityMatrix state = DensityMatrix::maximally_mixed();
    /// Sampled branch (1 or 2) for branched programs.
    std::optional<int> branch;
    std::vector<int> outcomes;
};

/// One sampled execution. The branch and every measurement are drawn from `seed`.
ShotRecord simulate_shot(const CircuitProgram &prog, const DensityMatrix &rho, std::uint64_t seed);
ShotRecord simulate_shot(const BranchedProgram &prog, const DensityMatrix &rho, std::uint64_t seed);

/// Affine map realized by the program, reconstructed from its action on 1/2 I and 1/2 (I + sigma_j).
AffineChannel channel_of_program(const CircuitProgram &prog);
AffineChannel channel_of_program(const BranchedProgram &prog);

}  // namespace qchan

#endif  // QCHAN_SIMULATOR_HPP
