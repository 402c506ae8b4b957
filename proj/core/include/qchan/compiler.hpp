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

#ifndef QCHAN_COMPILER_HPP
#define QCHAN_COMPILER_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "qchan/lookup_db.hpp"
#include "qchan/simulator.hpp"

namespace qchan {

enum class CompileMode { Exact, GateSet };

struct CompileRequest {
    AffineChannel channel;
    double epsilon = 1e-8;
    CompileMode mode = CompileMode::Exact;
    /// Required in gate-set mode; not owned.
    const LookupDatabase *db = nullptr;
    std::uint64_t seed = 0;
    int max_depth = 6;
};

struct UnitaryReport {
    int branch = 1;
    std::string role;
    double distance = 0;
    int depth = 0;
    int word_length = 0;
    bool fallback = false;
};

struct VerificationReport {
    /// Binding check: channel_distance(channel_of_program(program), target).
    double channel_distance = 0;
    double epsilon = 0;
    double eps_half = 0;
    double eps_eighth = 0;
    bool within_epsilon = false;
    /// Every synthesized unitary met eps / 8.
    bool budget_met = true;
    double p = 1;
    std::uint64_t seed = 0;
    int cnot_count = 0;
    int single_qubit_count = 0;
    int total_word_length = 0;
    std::vector<UnitaryReport> unitaries;
};

struct CompileResult {
    BranchedProgram program;
    VerificationReport report;
};

/// Decomposes, builds the branched circuit and, in gate-set mode, lowers each of the five
/// unitaries per branch (pre, two Ry, post and post * X) to words within eps / 8.
/// Throws ValidationError for bad requests or non-CP channels and BudgetError when the
/// measured distance exceeds eps.
CompileResult compile(const CompileRequest &req);

/// Recomputes channel_of_program and the distance to `target`.
VerificationReport verify(const BranchedProgram &program, const AffineChannel &target, double epsilon);

const char *mode_name(CompileMode mode);

}  // namespace qchan

#endif  // QCHAN_COMPILER_HPP
