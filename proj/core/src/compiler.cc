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

#include "qchan/compiler.hpp"

#include <algorithm>
#include <cmath>

#include "qchan/error.hpp"
#include "qchan/solovay_kitaev.hpp"

namespace qchan {

namespace {

constexpr double kExactTolerance = 1e-8;

UnitaryReport lower(GateOp &op, bool alternative, int branch, double target, const CompileRequest &req) {
    const Mat2 &m = alternative ? *op.matrix_if_one : op.matrix;
    SkResult r = synthesize(Unitary2::nearest(m), target, *req.db, req.max_depth);
    UnitaryReport rep;
    rep.branch = branch;
    rep.role = op.name + (alternative ? "*X" : "");
    rep.distance = r.distance;
    rep.depth = r.depth;
    rep.word_length = static_cast<int>(r.word.size());
    rep.fallback = r.fallback;
    op.gate_set = req.db->gate_set().id();
    if (alternative) {
        op.matrix_if_one = r.product.matrix();
        op.word_if_one = r.word;
    } else {
        op.matrix = r.product.matrix();
        op.word = r.word;
    }
    return rep;
}

void fill_counts(const BranchedProgram &program, VerificationReport &rep) {
    rep.p = program.p;
    rep.cnot_count = program.branch1.cnot_count() + program.branch2.cnot_count();
    rep.single_qubit_count = program.branch1.single_qubit_count() + program.branch2.single_qubit_count();
    rep.total_word_length = program.branch1.word_length() + program.branch2.word_length();
}

}  // namespace

const char *mode_name(CompileMode mode) {
    return mode == CompileMode::Exact ? "exact" : "gateset";
}

VerificationReport verify(const BranchedProgram &program, const AffineChannel &target, double epsilon) {
    VerificationReport rep;
    rep.epsilon = epsilon;
    rep.eps_half = epsilon / 2;
    rep.eps_eighth = epsilon / 8;
    rep.channel_distance = channel_distance(channel_of_program(program), target);
    rep.within_epsilon = rep.channel_distance <= epsilon;
    fill_counts(program, rep);
    return rep;
}

CompileResult compile(const CompileRequest &req) {
    if (!(req.epsilon > 0 && req.epsilon <= 2)) {
        throw ValidationError("epsilon must lie in (0, 2]");
    }
    if (req.mode == CompileMode::GateSet && !req.db) {
        throw ValidationError("gate-set mode requires a lookup database");
    }
    if (req.max_depth < 0) {
        throw ValidationError("max_depth must be non-negative");
    }

    DecomposeOptions opts;
    opts.seed = req.seed;
    ChannelDecomposition d = decompose_channel(req.channel, opts);

    CompileResult out;
    out.program = build_program(d);
    std::vector<UnitaryReport> unitaries;
    bool budget_met = true;
    if (req.mode == CompileMode::GateSet) {
        double target = req.epsilon / 8;
        int branch = 1;
        for (CircuitProgram *prog : {&out.program.branch1, &out.program.branch2}) {
            for (auto &ins : prog->instructions) {
                auto *g = std::get_if<GateOp>(&ins);
                if (!g) {
                    continue;
                }
                unitaries.push_back(lower(*g, false, branch, target, req));
                if (g->matrix_if_one) {
                    unitaries.push_back(lower(*g, true, branch, target, req));
                }
            }
            ++branch;
        }
        for (const auto &u : unitaries) {
            budget_met = budget_met && u.distance <= target;
        }
    }

    double bound = req.mode == CompileMode::Exact ? std::min(req.epsilon, kExactTolerance) : req.epsilon;
    out.report = verify(out.program, req.channel, req.epsilon);
    out.report.seed = req.seed;
    out.report.budget_met = budget_met;
    out.report.unitaries = std::move(unitaries);
    if (out.report.channel_distance > bound) {
        double worst = 0;
        for (const auto &u : out.report.unitaries) {
            worst = std::max(worst, u.distance);
        }
        double achievable = std::max(out.report.channel_distance, 8 * worst);
        throw BudgetError("compiled channel distance " + std::to_string(out.report.channel_distance) +
                              " exceeds the requested bound " + std::to_string(bound),
                          achievable);
    }
    return out;
}

}  // namespace qchan
