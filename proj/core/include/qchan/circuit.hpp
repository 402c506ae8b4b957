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

#ifndef QCHAN_CIRCUIT_HPP
#define QCHAN_CIRCUIT_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qchan/gate_set.hpp"
#include "qchan/qe_decompose.hpp"

namespace qchan {

enum class Wire { System, Ancilla };

/// Single-qubit gate. With `matrix_if_one` set, the gate is classically selected by the
/// measured bit: `matrix` when the bit is 0, `matrix_if_one` when it is 1.
struct GateOp {
    Wire wire = Wire::System;
    std::string name = "U";
    Mat2 matrix = Mat2::Identity();
    std::optional<Mat2> matrix_if_one;
    /// The bit-1 alternative is the bit-0 unitary followed by the X correction.
    bool merged_x = false;
    /// Rotation angle for named rotations such as Ry.
    std::optional<double> angle;
    /// Gate-set lowering, when present: matrix (resp. matrix_if_one) is the word product.
    std::string gate_set;
    std::optional<GateWord> word;
    std::optional<GateWord> word_if_one;
};
/// Control system, target ancilla.
struct CnotOp {};
/// Computational-basis measurement of the ancilla into the classical bit.
struct MeasureOp {};
/// X on the system when the classical bit is 1.
struct ClassicalXOp {};
struct ResetOp {};

using Instruction = std::variant<GateOp, CnotOp, MeasureOp, ClassicalXOp, ResetOp>;

struct CircuitProgram {
    std::vector<Instruction> instructions;

    /// Throws ValidationError for non-unitary matrices or classical control before a measurement.
    void validate() const;
    int cnot_count() const;
    int single_qubit_count() const;
    /// Total letters over all lowered words, counting both alternatives of selected gates.
    int word_length() const;
};

struct BranchedProgram {
    double p = 1;
    CircuitProgram branch1;
    CircuitProgram branch2;

    void validate() const;
};

Mat2 ry(double angle);

/// pre on system; Ry(pi/2 - nu) on ancilla; CNOT; Ry(mu - pi/2) on ancilla; measure;
/// post on system, or post * X when the bit is 1.
CircuitProgram build_qe_circuit(const QuasiExtremeChannel &qe);

BranchedProgram build_program(const ChannelDecomposition &d);

}  // namespace qchan

#endif  // QCHAN_CIRCUIT_HPP
