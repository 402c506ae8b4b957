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

#include "qchan/simulator.hpp"

#include <functional>
#include <random>

#include "qchan/error.hpp"

namespace qchan {

namespace {

// Joint basis index 2 * s + a: system is the high bit.
struct Branch {
    Mat4 rho;
    int bit = -1;
};

Mat4 on_wire(const Mat2 &u, Wire w) {
    Mat4 out = Mat4::Zero();
    for (int s = 0; s < 2; ++s) {
        for (int a = 0; a < 2; ++a) {
            for (int s2 = 0; s2 < 2; ++s2) {
                for (int a2 = 0; a2 < 2; ++a2) {
                    Complex v = w == Wire::System ? (a == a2 ? u(s, s2) : Complex(0)) : (s == s2 ? u(a, a2) : Complex(0));
                    out(2 * s + a, 2 * s2 + a2) = v;
                }
            }
        }
    }
    return out;
}

Mat4 cnot_matrix() {
    Mat4 m = Mat4::Zero();
    m(0, 0) = 1;
    m(1, 1) = 1;
    m(2, 3) = 1;
    m(3, 2) = 1;
    return m;
}

Mat4 ancilla_projector(int outcome) {
    Mat4 p = Mat4::Zero();
    p(outcome, outcome) = 1;
    p(2 + outcome, 2 + outcome) = 1;
    return p;
}

Mat4 reset_ancilla(const Mat4 &rho) {
    Mat4 out = Mat4::Zero();
    for (int a = 0; a < 2; ++a) {
        Mat4 k = Mat4::Zero();
        k(0, a) = 1;
        k(2, 2 + a) = 1;
        out += k * rho * k.adjoint();
    }
    return out;
}

Mat4 embed(const Mat2 &rho) {
    Mat4 out = Mat4::Zero();
    for (int s = 0; s < 2; ++s) {
        for (int s2 = 0; s2 < 2; ++s2) {
            out(2 * s, 2 * s2) = rho(s, s2);
        }
    }
    return out;
}

Mat2 trace_ancilla(const Mat4 &rho) {
    Mat2 out;
    for (int s = 0; s < 2; ++s) {
        for (int s2 = 0; s2 < 2; ++s2) {
            out(s, s2) = rho(2 * s, 2 * s2) + rho(2 * s + 1, 2 * s2 + 1);
        }
    }
    return out;
}

// Applies one instruction to every branch. Measurement splits each branch in two when
// `sampler` is null; otherwise it draws one outcome per branch and renormalizes.
void apply(const Instruction &ins, std::vector<Branch> &branches, std::mt19937_64 *sampler,
           std::vector<int> *outcomes) {
    static const Mat4 kCnot = cnot_matrix();
    static const Mat4 kClassicalX = on_wire(pauli(1), Wire::System);
    if (const auto *g = std::get_if<GateOp>(&ins)) {
        Mat4 u0 = on_wire(g->matrix, g->wire);
        Mat4 u1 = g->matrix_if_one ? on_wire(*g->matrix_if_one, g->wire) : u0;
        for (auto &b : branches) {
            const Mat4 &u = b.bit == 1 ? u1 : u0;
            b.rho = u * b.rho * u.adjoint();
        }
    } else if (std::holds_alternative<CnotOp>(ins)) {
        for (auto &b : branches) {
            b.rho = kCnot * b.rho * kCnot;
        }
    } else if (std::holds_alternative<ClassicalXOp>(ins)) {
        for (auto &b : branches) {
            if (b.bit == 1) {
                b.rho = kClassicalX * b.rho * kClassicalX;
            }
        }
    } else if (std::holds_alternative<ResetOp>(ins)) {
        for (auto &b : branches) {
            b.rho = reset_ancilla(b.rho);
        }
    } else if (std::holds_alternative<MeasureOp>(ins)) {
        std::vector<Branch> next;
        for (const auto &b : branches) {
            Mat4 p0 = ancilla_projector(0);
            Mat4 p1 = ancilla_projector(1);
            Mat4 r0 = p0 * b.rho * p0;
            Mat4 r1 = p1 * b.rho * p1;
            if (!sampler) {
                next.push_back({r0, 0});
                next.push_back({r1, 1});
                continue;
            }
            double w0 = r0.trace().real();
            double w1 = r1.trace().real();
            double prob1 = w1 / (w0 + w1);
            int outcome = std::uniform_real_distribution<double>(0, 1)(*sampler) < prob1 ? 1 : 0;
            outcomes->push_back(outcome);
            next.push_back(outcome ? Branch{r1 / w1, 1} : Branch{r0 / w0, 0});
        }
        branches = std::move(next);
    }
}

Mat2 run(const CircuitProgram &prog, const Mat2 &rho, std::mt19937_64 *sampler, std::vector<int> *outcomes) {
    std::vector<Branch> branches{{embed(rho), -1}};
    for (const auto &ins : prog.instructions) {
        apply(ins, branches, sampler, outcomes);
    }
    Mat2 out = Mat2::Zero();
    for (const auto &b : branches) {
        out += trace_ancilla(b.rho);
    }
    return out;
}

DensityMatrix finish(const Mat2 &m) {
    // Hermitize away rounding so the validated constructor sees a clean state.
    return DensityMatrix(0.5 * (m + m.adjoint()), 1e-9);
}

AffineChannel reconstruct(const std::function<Mat2(const Mat2 &)> &f) {
    AffineChannel ch;
    auto bloch_of = [](const Mat2 &m) {
        return Vec3(m(0, 1).real() + m(1, 0).real(), (m(1, 0) - m(0, 1)).imag(), (m(0, 0) - m(1, 1)).real());
    };
    ch.t = bloch_of(f(0.5 * Mat2::Identity()));
    for (int j = 0; j < 3; ++j) {
        Mat2 in = 0.5 * (Mat2::Identity() + pauli(j + 1));
        ch.T.col(j) = bloch_of(f(in)) - ch.t;
    }
    return ch;
}

}  // namespace

DensityMatrix simulate_deterministic(const CircuitProgram &prog, const DensityMatrix &rho) {
    prog.validate();
    return finish(run(prog, rho.matrix(), nullptr, nullptr));
}

DensityMatrix simulate_deterministic(const BranchedProgram &prog, const DensityMatrix &rho) {
    prog.validate();
    Mat2 out = prog.p * run(prog.branch1, rho.matrix(), nullptr, nullptr) +
               (1 - prog.p) * run(prog.branch2, rho.matrix(), nullptr, nullptr);
    return finish(out);
}

ShotRecord simulate_shot(const CircuitProgram &prog, const DensityMatrix &rho, std::uint64_t seed) {
    prog.validate();
    std::mt19937_64 rng(seed);
    ShotRecord rec;
    rec.state = finish(run(prog, rho.matrix(), &rng, &rec.outcomes));
    return rec;
}

ShotRecord simulate_shot(const BranchedProgram &prog, const DensityMatrix &rho, std::uint64_t seed) {
    prog.validate();
    std::mt19937_64 rng(seed);
    ShotRecord rec;
    bool first = std::uniform_real_distribution<double>(0, 1)(rng) < prog.p;
    rec.branch = first ? 1 : 2;
    rec.state = finish(run(first ? prog.branch1 : prog.branch2, rho.matrix(), &rng, &rec.outcomes));
    return rec;
}

AffineChannel channel_of_program(const CircuitProgram &prog) {
    prog.validate();
    return reconstruct([&](const Mat2 &rho) { return run(prog, rho, nullptr, nullptr); });
}

AffineChannel channel_of_program(const BranchedProgram &prog) {
    prog.validate();
    return mix(prog.p, channel_of_program(prog.branch1), channel_of_program(prog.branch2));
}

}  // namespace qchan
