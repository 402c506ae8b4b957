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

#include "qchan/circuit.hpp"

#include <cmath>

#include "qchan/error.hpp"

namespace qchan {

namespace {

void check_unitary(const Mat2 &m, const std::string &what) {
    double err = (m.adjoint() * m - Mat2::Identity()).cwiseAbs().maxCoeff();
    if (!(err <= 1e-8)) {
        throw ValidationError(what + " is not unitary (residual " + std::to_string(err) + ")");
    }
}

}  // namespace

void CircuitProgram::validate() const {
    bool measured = false;
    for (size_t i = 0; i < instructions.size(); ++i) {
        std::string where = "instruction " + std::to_string(i);
        const Instruction &ins = instructions[i];
        if (const auto *g = std::get_if<GateOp>(&ins)) {
            check_unitary(g->matrix, where);
            if (g->matrix_if_one) {
                check_unitary(*g->matrix_if_one, where);
                if (!measured) {
                    throw ValidationError(where + ": classically selected gate before any measurement");
                }
            }
        } else if (std::holds_alternative<MeasureOp>(ins)) {
            measured = true;
        } else if (std::holds_alternative<ClassicalXOp>(ins) && !measured) {
            throw ValidationError(where + ": classically controlled X before any measurement");
        }
    }
}

int CircuitProgram::cnot_count() const {
    int n = 0;
    for (const auto &ins : instructions) {
        n += std::holds_alternative<CnotOp>(ins) ? 1 : 0;
    }
    return n;
}

int CircuitProgram::single_qubit_count() const {
    int n = 0;
    for (const auto &ins : instructions) {
        n += std::holds_alternative<GateOp>(ins) ? 1 : 0;
    }
    return n;
}

int CircuitProgram::word_length() const {
    int n = 0;
    for (const auto &ins : instructions) {
        if (const auto *g = std::get_if<GateOp>(&ins)) {
            n += g->word ? static_cast<int>(g->word->size()) : 0;
            n += g->word_if_one ? static_cast<int>(g->word_if_one->size()) : 0;
        }
    }
    return n;
}

void BranchedProgram::validate() const {
    if (!(p >= 0 && p <= 1)) {
        throw ValidationError("branch probability must lie in [0, 1]");
    }
    branch1.validate();
    branch2.validate();
}

Mat2 ry(double angle) {
    double c = std::cos(angle / 2);
    double s = std::sin(angle / 2);
    Mat2 m;
    m << c, -s, s, c;
    return m;
}

CircuitProgram build_qe_circuit(const QuasiExtremeChannel &qe) {
    double two_gamma1 = kPi / 2 - qe.nu;
    double two_gamma2 = qe.mu - kPi / 2;

    GateOp pre;
    pre.name = "U_pre";
    pre.matrix = qe.pre.matrix();

    GateOp r1;
    r1.wire = Wire::Ancilla;
    r1.name = "Ry";
    r1.angle = two_gamma1;
    r1.matrix = ry(two_gamma1);

    GateOp r2 = r1;
    r2.angle = two_gamma2;
    r2.matrix = ry(two_gamma2);

    GateOp post;
    post.name = "U_post";
    post.matrix = qe.post.matrix();
    post.matrix_if_one = qe.post.matrix() * pauli(1);
    post.merged_x = true;

    CircuitProgram prog;
    prog.instructions = {pre, r1, CnotOp{}, r2, MeasureOp{}, post};
    return prog;
}

BranchedProgram build_program(const ChannelDecomposition &d) {
    return {d.p, build_qe_circuit(d.first), build_qe_circuit(d.second)};
}

}  // namespace qchan
