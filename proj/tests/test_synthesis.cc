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

#include <map>

#include "gtest/gtest.h"

#include "oracles.hpp"
#include "qchan/error.hpp"
#include "qchan/solovay_kitaev.hpp"

using namespace qchan;

namespace {

const LookupDatabase &desk_db() {
    static const LookupDatabase db = LookupDatabase::build(GateSet::from_names("H,T"), 0.35, 16);
    return db;
}

Mat2 su2(const Vec3 &theta) {
    double a = theta.norm();
    Mat2 m = std::cos(a) * Mat2::Identity();
    if (a > 0) {
        Vec3 n = theta / a;
        m -= Complex(0, std::sin(a)) * (n(0) * pauli(1) + n(1) * pauli(2) + n(2) * pauli(3));
    }
    return m;
}

double projective(const Mat2 &a, const Mat2 &b) {
    return unitary_distance(a, b, PhaseMode::Projective);
}

Vec3 random_theta(std::mt19937_64 &rng, double radius) {
    std::normal_distribution<double> normal(0, 1);
    std::uniform_real_distribution<double> unit(0, 1);
    Vec3 v(normal(rng), normal(rng), normal(rng));
    return v.normalized() * radius * std::cbrt(unit(rng));
}

}  // namespace

TEST(to_coord, examples) {
    RotationCoord c = to_coord(Unitary2());
    ASSERT_EQ(c.theta, Vec3::Zero());
    ASSERT_EQ(c.phase, 0);

    GateSet gs = GateSet::from_names("H,T");
    c = to_coord(Unitary2(gs.generators()[1].matrix));
    ASSERT_LT((c.theta - Vec3(0, 0, kPi / 8)).norm(), 1e-15);
    ASSERT_NEAR(c.phase, kPi / 8, 1e-15);

    c = to_coord(Unitary2(gs.generators()[0].matrix));
    ASSERT_LT((c.theta - (kPi / 2) * Vec3(1, 0, 1) / std::sqrt(2.0)).norm(), 1e-15);
    ASSERT_NEAR(c.phase, kPi / 2, 1e-15);
    ASSERT_NEAR(c.theta.norm(), kPi / 2, 1e-15);
}

TEST(to_coord, reassembles_and_stays_in_ball) {
    std::mt19937_64 rng(1);
    for (int i = 0; i < 1000; ++i) {
        Mat2 u = oracle::random_unitary(rng);
        RotationCoord c = to_coord(Unitary2(u));
        ASSERT_LE(c.theta.norm(), kPi / 2 + 1e-12);
        Mat2 rebuilt = std::exp(Complex(0, c.phase)) * su2(c.theta);
        ASSERT_LT((rebuilt - u).cwiseAbs().maxCoeff(), 1e-12);
        ASSERT_LT((from_coord(c).matrix() - u).cwiseAbs().maxCoeff(), 1e-12);
    }
}

TEST(from_coord, round_trip_and_antipodes) {
    ASSERT_EQ(from_coord(RotationCoord{}).matrix(), Mat2::Identity());
    std::mt19937_64 rng(2);
    for (int i = 0; i < 1000; ++i) {
        RotationCoord c{random_theta(rng, kPi / 2), 0.3};
        RotationCoord back = to_coord(from_coord(c));
        ASSERT_LT(projective(from_coord(back).matrix(), from_coord(c).matrix()), 1e-12);
        ASSERT_LT((back.theta - c.theta).norm(), 1e-9);
        RotationCoord other{antipode(c.theta), 0};
        ASSERT_LT(projective(from_coord(other).matrix(), from_coord(c).matrix()), 1e-12);
    }
}

TEST(from_coord, projective_distance_bounded_by_coordinates) {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 10000; ++i) {
        Vec3 a = random_theta(rng, kPi / 2);
        Vec3 b = i % 2 ? random_theta(rng, kPi / 2) : a + random_theta(rng, 0.1);
        double d = projective(from_coord({a, 0}).matrix(), from_coord({b, 0}).matrix());
        ASSERT_LE(d, (a - b).norm() + 1e-9);
    }
}

TEST(cell_index, examples) {
    double side = 1 / (32 * std::sqrt(3.0));
    ASSERT_EQ(cell_index(Vec3::Zero(), 0.35), (CellIndex{0, 0, 0}));
    ASSERT_EQ(cell_index(Vec3::Zero(), side), (CellIndex{0, 0, 0}));
    ASSERT_EQ(cell_index(Vec3(0.05, 0, 0), side), (CellIndex{2, 0, 0}));
    ASSERT_EQ(cell_index(Vec3(-0.01, 0, 0), side), (CellIndex{-1, 0, 0}));

    std::mt19937_64 rng(4);
    for (int i = 0; i < 1000; ++i) {
        Vec3 v = random_theta(rng, 1).normalized() * (kPi / 2);
        ASSERT_TRUE(cell_intersects_ball(cell_index(v, side), side));
    }
    ASSERT_FALSE(cell_intersects_ball({100, 0, 0}, side));
}

TEST(GateSet, orders_and_inverses) {
    GateSet gs = GateSet::from_names("H,T,Tdg,S");
    ASSERT_EQ(gs.id(), "H,T,Tdg,S");
    ASSERT_EQ(gs.generators()[0].order, 2);
    ASSERT_EQ(gs.generators()[1].order, 8);
    ASSERT_EQ(gs.generators()[3].order, 4);
    ASSERT_EQ(gs.generators()[1].inverse, 2);
    ASSERT_EQ(gs.generators()[0].inverse, 0);
    ASSERT_THROW(GateSet::from_names("H,Q"), ValidationError);
    ASSERT_THROW(GateSet::from_names(""), ValidationError);
}

TEST(GateSet, word_to_unitary_examples) {
    GateSet gs = GateSet::from_names("H,T");
    ASSERT_EQ(gs.word_to_unitary({}).matrix(), Mat2::Identity());
    ASSERT_LT((gs.word_to_unitary(gs.parse("H H")).matrix() - Mat2::Identity()).norm(), 1e-15);
    Mat2 t8 = gs.word_to_unitary(GateWord(8, 1)).matrix();
    ASSERT_LT((t8 - Mat2::Identity()).norm(), 1e-14);
    ASSERT_LT(projective(t8, std::exp(Complex(0, kPi)) * Mat2::Identity()), 1e-14);
    // Left-to-right matrix product.
    Mat2 ht = gs.generators()[0].matrix * gs.generators()[1].matrix;
    ASSERT_LT((gs.word_to_unitary(gs.parse("H T")).matrix() - ht).norm(), 1e-15);
    ASSERT_THROW(gs.parse("H X"), ValidationError);
    ASSERT_EQ(gs.format(gs.parse(" T  H T ")), "T H T");
}

TEST(GateSet, reduction_preserves_products) {
    GateSet gs = GateSet::from_names("H,T,Tdg");
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> letter(0, gs.size() - 1);
    for (int i = 0; i < 500; ++i) {
        GateWord w(1 + i % 40);
        for (auto &l : w) {
            l = static_cast<std::uint8_t>(letter(rng));
        }
        GateWord r = gs.reduce(w);
        ASSERT_LE(r.size(), w.size());
        ASSERT_EQ(gs.reduce(r), r);
        ASSERT_LT(projective(gs.word_to_unitary(w).matrix(), gs.word_to_unitary(r).matrix()), 1e-12);
        GateWord inv = gs.inverse(w);
        Mat2 prod = gs.word_to_unitary(w).matrix() * gs.word_to_unitary(inv).matrix();
        ASSERT_LT(projective(prod, Mat2::Identity()), 1e-12);
    }
    ASSERT_EQ(gs.reduce(gs.parse("T Tdg H H T")), gs.parse("T"));
}

TEST(GateSet, inverse_via_order_rules) {
    GateSet gs = GateSet::from_names("H,T");
    ASSERT_EQ(gs.inverse(gs.parse("T")), gs.parse("T T T T T T T"));
    ASSERT_EQ(gs.inverse(gs.parse("H T")), gs.parse("T T T T T T T H"));
    ASSERT_TRUE(gs.invertible());
}

TEST(LookupDatabase, trivial_side) {
    LookupDatabase db = LookupDatabase::build(GateSet::from_names("H,T"), kPi, 10);
    AuditReport a = db.audit();
    ASSERT_EQ(a.covered_cells, a.ball_cells);
    ASSERT_EQ(db.cells().at({0, 0, 0}).word, GateWord{});
    ASSERT_TRUE(a.sound);
}

TEST(LookupDatabase, matches_exhaustive_enumeration) {
    // Oracle: every word over {H, T} up to length 16, no reductions or deduplication.
    GateSet gs = GateSet::from_names("H,T");
    const int max_len = 16;
    const double side = 0.35;
    std::map<CellIndex, size_t> shortest;
    std::vector<std::pair<GateWord, Mat2>> layer{{{}, Mat2::Identity()}};
    shortest[cell_index(to_coord(Unitary2()), side)] = 0;
    for (int len = 1; len <= max_len; ++len) {
        std::vector<std::pair<GateWord, Mat2>> next;
        for (const auto &[w, m] : layer) {
            for (int g = 0; g < 2; ++g) {
                GateWord c{static_cast<std::uint8_t>(g)};
                c.insert(c.end(), w.begin(), w.end());
                Mat2 cm = gs.generators()[g].matrix * m;
                CellIndex cell = cell_index(to_coord(Unitary2::nearest(cm)), side);
                shortest.emplace(cell, c.size());
                next.push_back({c, cm});
            }
        }
        layer = std::move(next);
    }
    LookupDatabase db = LookupDatabase::build(gs, side, max_len);
    ASSERT_EQ(db.cells().size(), shortest.size());
    for (const auto &[cell, entry] : db.cells()) {
        ASSERT_TRUE(shortest.count(cell));
        ASSERT_EQ(entry.word.size(), shortest.at(cell));
    }
    long in_ball = 0;
    for (const auto &[cell, len] : shortest) {
        in_ball += cell_intersects_ball(cell, side) ? 1 : 0;
    }
    ASSERT_EQ(in_ball, 459);
}

TEST(LookupDatabase, desk_build_is_sound) {
    AuditReport a = desk_db().audit();
    ASSERT_TRUE(a.sound);
    ASSERT_EQ(a.ball_cells, 624);
    ASSERT_LE(a.max_word_length, 16);
    // Frozen from the exhaustive-enumeration oracle above: 165 cells stay empty at length 16.
    ASSERT_EQ(a.covered_cells, 459);
}

TEST(LookupDatabase, coverage_monotone_in_length) {
    GateSet gs = GateSet::from_names("H,T");
    double last = 0;
    for (int len = 0; len <= 16; len += 2) {
        double cov = LookupDatabase::build(gs, 0.35, len).audit().coverage;
        ASSERT_GE(cov, last);
        last = cov;
    }
}

TEST(LookupDatabase, lookup_examples) {
    const LookupDatabase &db = desk_db();
    const GateSet &gs = db.gate_set();
    int checked = 0;
    for (const auto &[cell, entry] : db.cells()) {
        if (++checked > 50) {
            break;
        }
        LookupResult r = db.lookup(gs.word_to_unitary(entry.word));
        ASSERT_EQ(r.word, entry.word);
        ASSERT_FALSE(r.fallback);
        ASSERT_LT(r.coord_distance, 1e-12);
    }
    LookupResult h = db.lookup(Unitary2(gs.generators()[0].matrix));
    ASSERT_TRUE(cell_intersects_ball(h.cell, db.cell_side()));
    ASSERT_LT(projective(h.product.matrix(), gs.generators()[0].matrix), 1e-12);

    LookupDatabase empty(gs, 0.35, 0);
    ASSERT_THROW(empty.lookup(Unitary2()), ValidationError);
}

TEST(LookupDatabase, own_cell_hits_meet_diagonal_bound) {
    const LookupDatabase &db = desk_db();
    std::mt19937_64 rng(6);
    double bound = db.cell_side() * std::sqrt(3.0) * (1 + 1e-9);
    int hits = 0;
    for (int i = 0; i < 2000; ++i) {
        Mat2 u = oracle::random_unitary(rng);
        LookupResult r = db.lookup(Unitary2(u));
        double d = projective(u, r.product.matrix());
        ASSERT_LE(d, r.coord_distance + 1e-9);
        if (!r.fallback) {
            ++hits;
            ASSERT_LE(d, bound);
        }
    }
    ASSERT_GT(hits, 0);
}

TEST(gc_factor, examples) {
    GroupCommutator gc = gc_factor(Unitary2());
    ASSERT_EQ(gc.v.matrix(), Mat2::Identity());
    ASSERT_EQ(gc.w.matrix(), Mat2::Identity());

    Unitary2 delta(su2(Vec3(0, 0, 0.005)));
    gc = gc_factor(delta);
    const Mat2 &v = gc.v.matrix();
    const Mat2 &w = gc.w.matrix();
    ASSERT_LT(projective(v * w * v.adjoint() * w.adjoint(), delta.matrix()), 1e-10);

    ASSERT_THROW(gc_factor(Unitary2(pauli(1))), ValidationError);
}

TEST(gc_factor, balanced_over_random_deltas) {
    std::mt19937_64 rng(7);
    double c_gc = 0;
    for (int i = 0; i < 1000; ++i) {
        Unitary2 delta(su2(random_theta(rng, 0.5)));
        GroupCommutator gc = gc_factor(delta);
        const Mat2 &v = gc.v.matrix();
        const Mat2 &w = gc.w.matrix();
        ASSERT_LT(projective(v * w * v.adjoint() * w.adjoint(), delta.matrix()), 1e-10);
        double d = projective(delta.matrix(), Mat2::Identity());
        double dv = projective(v, Mat2::Identity());
        double dw = projective(w, Mat2::Identity());
        c_gc = std::max({c_gc, dv / std::sqrt(d), dw / std::sqrt(d)});
    }
    RecordProperty("c_gc", std::to_string(c_gc));
    ASSERT_LT(c_gc, 2);
}

TEST(sk_decompose, stored_word_is_fixed_point) {
    const LookupDatabase &db = desk_db();
    const DbEntry &e = std::next(db.cells().begin(), 7)->second;
    Unitary2 u = db.gate_set().word_to_unitary(e.word);
    for (int depth = 0; depth <= 3; ++depth) {
        SkResult r = sk_decompose(u, depth, db);
        ASSERT_EQ(r.word, e.word);
        ASSERT_LT(r.distance, 1e-12);
    }
}

TEST(sk_decompose, contraction_and_length) {
    const LookupDatabase &db = desk_db();
    int l0 = std::max(db.audit().max_word_length, db.audit().max_inverse_length);
    std::mt19937_64 rng(8);
    std::array<std::vector<double>, 3> errs;
    for (int i = 0; i < 100; ++i) {
        Unitary2 u(oracle::random_unitary(rng));
        for (int depth = 0; depth < 3; ++depth) {
            SkResult r = sk_decompose(u, depth, db);
            ASSERT_LE(static_cast<double>(r.word.size()), std::pow(5, depth) * l0);
            ASSERT_LT(projective(db.gate_set().word_to_unitary(r.word).matrix(), r.product.matrix()), 1e-12);
            errs[depth].push_back(r.distance);
        }
    }
    for (auto &e : errs) {
        std::sort(e.begin(), e.end());
    }
    ASSERT_LT(errs[1][50], errs[0][50]);
    ASSERT_LT(errs[2][50], errs[1][50]);
}

TEST(sk_decompose, rejects_non_invertible_gate_sets) {
    // Rz(1) has infinite order, and the set lists no inverse for it.
    Mat2 rz = Mat2::Zero();
    rz(0, 0) = std::exp(Complex(0, -0.5));
    rz(1, 1) = std::exp(Complex(0, 0.5));
    GateSet gs = GateSet::from_generators({{"H", GateSet::from_names("H").generators()[0].matrix}, {"Rz1", rz}});
    ASSERT_FALSE(gs.invertible());
    ASSERT_EQ(gs.generators()[1].order, 0);
    ASSERT_THROW(gs.inverse(gs.parse("Rz1")), UnsupportedError);
    LookupDatabase db = LookupDatabase::build(gs, 0.35, 8);
    Unitary2 u(su2(Vec3(0.1, 0.2, 0.3)));
    ASSERT_NO_THROW(sk_decompose(u, 0, db));
    ASSERT_THROW(sk_decompose(u, 1, db), UnsupportedError);
    ASSERT_THROW(sk_decompose(u, -1, db), ValidationError);
}

TEST(synthesize, reaches_target_adaptively) {
    const LookupDatabase &db = desk_db();
    std::mt19937_64 rng(9);
    for (int i = 0; i < 10; ++i) {
        Unitary2 u(oracle::random_unitary(rng));
        SkResult r = synthesize(u, 0.05, db, 6);
        ASSERT_LE(r.distance, 0.05);
        ASSERT_NEAR(r.distance, projective(u.matrix(), db.gate_set().word_to_unitary(r.word).matrix()), 1e-12);
    }
}
