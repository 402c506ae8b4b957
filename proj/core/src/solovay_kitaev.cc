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

#include "qchan/solovay_kitaev.hpp"

#include <cmath>

#include <Eigen/Geometry>

#include "qchan/error.hpp"

namespace qchan {

namespace {

Mat2 su2_rotation(double half_angle, const Vec3 &axis) {
    return std::cos(half_angle) * Mat2::Identity() -
           kI * std::sin(half_angle) * (axis(0) * pauli(1) + axis(1) * pauli(2) + axis(2) * pauli(3));
}

Mat2 su2_of_quaternion(const Eigen::Quaterniond &q) {
    return q.w() * Mat2::Identity() - kI * (q.x() * pauli(1) + q.y() * pauli(2) + q.z() * pauli(3));
}

GroupCommutator balanced_commutator(const Unitary2 &delta) {
    RotationCoord c = to_coord(delta);
    double half = c.theta.norm();
    if (half < 1e-15) {
        return {};
    }
    Vec3 n = c.theta / half;
    // SO(3) angle theta = 2 * half; sin(theta / 2) = 2 s sqrt(1 - s^2) with s = sin^2(phi / 2).
    double st = std::sin(half);
    double s = std::sqrt((1 - std::sqrt(std::max(0.0, 1 - st * st))) / 2);
    double phi = 2 * std::asin(std::sqrt(s));

    Mat2 v = su2_rotation(phi / 2, Vec3::UnitX());
    Mat2 w = su2_rotation(phi / 2, Vec3::UnitY());
    Mat2 comm = v * w * v.adjoint() * w.adjoint();
    RotationCoord cc = to_coord(Unitary2::nearest(comm));
    Vec3 m = cc.theta.normalized();

    Mat2 sm = su2_of_quaternion(Eigen::Quaterniond::FromTwoVectors(m, n));
    return {Unitary2::nearest(sm * v * sm.adjoint()), Unitary2::nearest(sm * w * sm.adjoint())};
}

GateWord concat(std::initializer_list<const GateWord *> parts) {
    GateWord out;
    for (const GateWord *p : parts) {
        out.insert(out.end(), p->begin(), p->end());
    }
    return out;
}

SkResult recurse(const Unitary2 &u, int depth, const LookupDatabase &db) {
    if (depth == 0) {
        LookupResult hit = db.lookup(u);
        SkResult r;
        r.word = hit.word;
        r.product = hit.product;
        r.fallback = hit.fallback;
        return r;
    }
    SkResult prev = recurse(u, depth - 1, db);
    Unitary2 delta = Unitary2::nearest(u.matrix() * prev.product.matrix().adjoint());
    if (unitary_distance(delta.matrix(), Mat2::Identity(), PhaseMode::Projective) < 1e-12) {
        return prev;
    }
    GroupCommutator gc = balanced_commutator(delta);
    SkResult v = recurse(gc.v, depth - 1, db);
    SkResult w = recurse(gc.w, depth - 1, db);
    const GateSet &gs = db.gate_set();
    GateWord v_inv = gs.inverse(v.word);
    GateWord w_inv = gs.inverse(w.word);

    SkResult r;
    r.word = gs.reduce(concat({&v.word, &w.word, &v_inv, &w_inv, &prev.word}));
    r.product = Unitary2::nearest(v.product.matrix() * w.product.matrix() * v.product.matrix().adjoint() *
                                  w.product.matrix().adjoint() * prev.product.matrix());
    r.fallback = prev.fallback || v.fallback || w.fallback;
    return r;
}

}  // namespace

GroupCommutator gc_factor(const Unitary2 &delta) {
    double d = unitary_distance(delta.matrix(), Mat2::Identity(), PhaseMode::Projective);
    if (!(d < 1)) {
        throw ValidationError("gc_factor: delta too far from identity (projective distance " + std::to_string(d) + ")");
    }
    return balanced_commutator(delta);
}

SkResult sk_decompose(const Unitary2 &u, int depth, const LookupDatabase &db) {
    if (depth < 0) {
        throw ValidationError("sk_decompose: negative depth");
    }
    if (depth > 0 && !db.gate_set().invertible()) {
        throw UnsupportedError("sk_decompose: gate set " + db.gate_set().id() + " has no inverse expressions");
    }
    SkResult r = recurse(u, depth, db);
    r.depth = depth;
    r.product = db.gate_set().word_to_unitary(r.word);
    r.distance = unitary_distance(u.matrix(), r.product.matrix(), PhaseMode::Projective);
    return r;
}

SkResult synthesize(const Unitary2 &u, double target, const LookupDatabase &db, int max_depth) {
    SkResult best;
    best.distance = INFINITY;
    for (int depth = 0; depth <= max_depth; ++depth) {
        if (depth > 0 && !db.gate_set().invertible()) {
            break;
        }
        SkResult r = sk_decompose(u, depth, db);
        if (r.distance < best.distance) {
            best = r;
        }
        if (r.distance <= target) {
            return r;
        }
    }
    return best;
}

}  // namespace qchan
