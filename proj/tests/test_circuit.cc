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

#include "gtest/gtest.h"

#include "oracles.hpp"
#include "qchan/error.hpp"

using namespace qchan;

namespace {

QuasiExtremeChannel qe_of(double mu, double nu) {
    QuasiExtremeChannel qe;
    qe.mu = mu;
    qe.nu = nu;
    return qe;
}

const GateOp &gate_at(const CircuitProgram &p, size_t i) {
    return std::get<GateOp>(p.instructions.at(i));
}

Mat2 ket(int k) {
    Mat2 m = Mat2::Zero();
    m(k, k) = 1;
    return m;
}

}  // namespace

TEST(build_qe_circuit, angles) {
    CircuitProgram p = build_qe_circuit(qe_of(kPi / 2, 0));
    ASSERT_NEAR(*gate_at(p, 1).angle, kPi / 2, 1e-15);
    ASSERT_NEAR(*gate_at(p, 3).angle, 0, 1e-15);

    p = build_qe_circuit(qe_of(0, 0));
    ASSERT_NEAR(*gate_at(p, 1).angle, kPi / 2, 1e-15);
    ASSERT_NEAR(*gate_at(p, 3).angle, -kPi / 2, 1e-15);
    ASSERT_LT(channel_of_program(p).max_abs_diff(AffineChannel::identity()), 1e-15);
}

TEST(build_qe_circuit, shape) {
    std::mt19937_64 rng(1);
    CircuitProgram p = build_qe_circuit(oracle::random_qe(rng));
    ASSERT_EQ(p.instructions.size(), 6u);
    ASSERT_EQ(p.cnot_count(), 1);
    ASSERT_EQ(p.single_qubit_count(), 4);
    ASSERT_EQ(gate_at(p, 0).wire, Wire::System);
    ASSERT_EQ(gate_at(p, 1).wire, Wire::Ancilla);
    ASSERT_TRUE(std::holds_alternative<CnotOp>(p.instructions[2]));
    ASSERT_EQ(gate_at(p, 3).wire, Wire::Ancilla);
    ASSERT_TRUE(std::holds_alternative<MeasureOp>(p.instructions[4]));
    const GateOp &last = gate_at(p, 5);
    ASSERT_TRUE(last.merged_x);
    ASSERT_LT((*last.matrix_if_one - last.matrix * pauli(1)).norm(), 1e-15);
}

TEST(build_qe_circuit, realizes_descriptor) {
    std::mt19937_64 rng(2);
    for (int i = 0; i < 1000; ++i) {
        QuasiExtremeChannel qe = oracle::random_qe(rng);
        AffineChannel expected = oracle::compose_by_action(
            unitary_channel(qe.post.matrix()),
            oracle::compose_by_action(qe_affine(qe.mu, qe.nu), unitary_channel(qe.pre.matrix())));
        ASSERT_LT(channel_of_program(build_qe_circuit(qe)).max_abs_diff(expected), 1e-10);
    }
}

TEST(build_qe_circuit, unmerged_correction_is_equivalent) {
    std::mt19937_64 rng(3);
    QuasiExtremeChannel qe = oracle::random_qe(rng);
    CircuitProgram merged = build_qe_circuit(qe);
    CircuitProgram split = merged;
    GateOp post = gate_at(merged, 5);
    post.matrix_if_one.reset();
    post.merged_x = false;
    split.instructions.pop_back();
    split.instructions.push_back(ClassicalXOp{});
    split.instructions.push_back(post);
    ASSERT_LT(channel_of_program(split).max_abs_diff(channel_of_program(merged)), 1e-14);
}

TEST(simulate_deterministic, examples) {
    std::mt19937_64 rng(4);
    DensityMatrix rho = random_density_matrix(rng);
    DensityMatrix out = simulate_deterministic(CircuitProgram{}, rho);
    ASSERT_LT((out.matrix() - rho.matrix()).norm(), 1e-15);

    out = simulate_deterministic(build_qe_circuit(qe_of(kPi / 2, kPi / 2)), DensityMatrix(ket(1)));
    ASSERT_LT((out.matrix() - ket(0)).norm(), 1e-15);

    double mu = std::asin(std::sqrt(0.3));
    out = simulate_deterministic(build_qe_circuit(qe_of(mu, mu)), DensityMatrix::maximally_mixed());
    DensityMatrix expected = kraus_apply(KrausChannel(oracle::amplitude_damping_kraus(0.3)),
                                         DensityMatrix::maximally_mixed());
    ASSERT_LT((out.matrix() - expected.matrix()).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(simulate_deterministic, branched_mixture_and_validity) {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 100; ++i) {
        QuasiExtremeChannel a = oracle::random_qe(rng);
        QuasiExtremeChannel b = oracle::random_qe(rng);
        BranchedProgram prog{0.35, build_qe_circuit(a), build_qe_circuit(b)};
        DensityMatrix rho = random_density_matrix(rng);
        Mat2 out = simulate_deterministic(prog, rho).matrix();
        Mat2 expected = 0.35 * oracle::apply_kraus(a.kraus().ops(), rho.matrix()) +
                        0.65 * oracle::apply_kraus(b.kraus().ops(), rho.matrix());
        ASSERT_LT((out - expected).cwiseAbs().maxCoeff(), 1e-12);
        ASSERT_NEAR(out.trace().real(), 1, 1e-10);
        ASSERT_GE(Eigen::SelfAdjointEigenSolver<Mat2>(out).eigenvalues()(0), -1e-10);
    }
}

TEST(simulate_deterministic, rejects_malformed_programs) {
    CircuitProgram p;
    p.instructions.push_back(ClassicalXOp{});
    ASSERT_THROW(simulate_deterministic(p, DensityMatrix::maximally_mixed()), ValidationError);

    GateOp g;
    g.matrix_if_one = pauli(1);
    p.instructions = {g};
    ASSERT_THROW(simulate_deterministic(p, DensityMatrix::maximally_mixed()), ValidationError);

    g = GateOp{};
    g.matrix = 2 * Mat2::Identity();
    p.instructions = {g};
    ASSERT_THROW(channel_of_program(p), ValidationError);

    BranchedProgram bp;
    bp.p = 1.5;
    ASSERT_THROW(channel_of_program(bp), ValidationError);
}

TEST(simulate_shot, deterministic_program) {
    std::mt19937_64 rng(6);
    GateOp g;
    g.matrix = oracle::random_unitary(rng);
    CircuitProgram p;
    p.instructions = {g};
    DensityMatrix rho = random_density_matrix(rng);
    ShotRecord rec = simulate_shot(p, rho, 17);
    ASSERT_TRUE(rec.outcomes.empty());
    ASSERT_FALSE(rec.branch.has_value());
    ASSERT_LT((rec.state.matrix() - simulate_deterministic(p, rho).matrix()).norm(), 1e-15);
}

TEST(simulate_shot, full_damping_always_fires) {
    CircuitProgram p = build_qe_circuit(qe_of(kPi / 2, kPi / 2));
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        ShotRecord rec = simulate_shot(p, DensityMatrix(ket(1)), seed);
        ASSERT_EQ(rec.outcomes, std::vector<int>{1});
        ASSERT_LT((rec.state.matrix() - ket(0)).norm(), 1e-14);
    }
}

TEST(simulate_shot, outcome_frequency_is_binomial) {
    double mu = std::asin(std::sqrt(0.5));
    CircuitProgram p = build_qe_circuit(qe_of(mu, mu));
    int ones = 0;
    const int n = 100000;
    for (int seed = 0; seed < n; ++seed) {
        ones += simulate_shot(p, DensityMatrix(ket(1)), seed).outcomes.at(0);
    }
    ASSERT_NEAR(static_cast<double>(ones) / n, 0.5, 0.01);
}

TEST(simulate_shot, average_converges_to_deterministic) {
    std::mt19937_64 rng(7);
    BranchedProgram prog{0.4, build_qe_circuit(oracle::random_qe(rng)), build_qe_circuit(oracle::random_qe(rng))};
    DensityMatrix rho = random_density_matrix(rng);
    const int n = 20000;
    Mat2 avg = Mat2::Zero();
    for (int seed = 0; seed < n; ++seed) {
        avg += simulate_shot(prog, rho, seed).state.matrix();
    }
    avg /= n;
    Mat2 exact = simulate_deterministic(prog, rho).matrix();
    // Each Bloch component of a shot lies in [-1, 1], so 5 sigma <= 5 / sqrt(n).
    ASSERT_LT((oracle::bloch(avg) - oracle::bloch(exact)).cwiseAbs().maxCoeff(), 5 / std::sqrt(double(n)));
}

TEST(simulate_shot, outcomes_select_kraus_operators) {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 50; ++trial) {
        QuasiExtremeChannel qe = oracle::random_qe(rng);
        DensityMatrix rho = random_density_matrix(rng);
        double a = (qe.mu + qe.nu) / 2;
        double b = (qe.mu - qe.nu) / 2;
        Mat2 k0;
        k0 << std::cos(b), 0, 0, std::cos(a);
        Mat2 k1;
        k1 << 0, std::sin(a), std::sin(b), 0;
        Mat2 k1_pre;
        k1_pre << std::sin(b), 0, 0, std::sin(a);
        const Mat2 &pre = qe.pre.matrix();
        const Mat2 &post = qe.post.matrix();
        auto normalized = [](const Mat2 &m) { return Mat2(m / m.trace()); };

        CircuitProgram full = build_qe_circuit(qe);
        CircuitProgram truncated = full;
        truncated.instructions.pop_back();
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            ShotRecord rec = simulate_shot(full, rho, seed);
            const Mat2 &k = rec.outcomes.at(0) == 0 ? k0 : k1;
            Mat2 expected = normalized(post * k * pre * rho.matrix() * pre.adjoint() * k.adjoint() * post.adjoint());
            ASSERT_LT((rec.state.matrix() - expected).cwiseAbs().maxCoeff(), 1e-10);

            rec = simulate_shot(truncated, rho, seed);
            const Mat2 &kp = rec.outcomes.at(0) == 0 ? k0 : k1_pre;
            expected = normalized(kp * pre * rho.matrix() * pre.adjoint() * kp.adjoint());
            ASSERT_LT((rec.state.matrix() - expected).cwiseAbs().maxCoeff(), 1e-10);
        }
    }
}

TEST(channel_of_program, examples) {
    ASSERT_LT(channel_of_program(CircuitProgram{}).max_abs_diff(AffineChannel::identity()), 1e-15);
    std::mt19937_64 rng(9);
    Mat2 u = oracle::random_unitary(rng);
    GateOp g;
    g.matrix = u;
    CircuitProgram p;
    p.instructions = {g};
    AffineChannel ch = channel_of_program(p);
    ASSERT_LT(ch.t.norm(), 1e-15);
    ASSERT_LT((ch.T - oracle::conjugation_rotation(u)).norm(), 1e-14);
}

TEST(channel_of_program, reset_and_ancilla_gates) {
    // Ancilla-only gates followed by a reset leave the system untouched.
    std::mt19937_64 rng(10);
    GateOp g;
    g.wire = Wire::Ancilla;
    g.matrix = oracle::random_unitary(rng);
    CircuitProgram p;
    p.instructions = {g, CnotOp{}, ResetOp{}, CnotOp{}};
    AffineChannel ch = channel_of_program(p);
    // CNOT with a random ancilla state dephases the system along z.
    ASSERT_LT(std::abs(ch.T(2, 2) - 1), 1e-14);
    ASSERT_LT(ch.t.norm(), 1e-14);
}
