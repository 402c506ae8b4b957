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

#include "qchan/rotation_coord.hpp"

#include <algorithm>
#include <cmath>

namespace qchan {

namespace {

double wrap_phase(double a) {
    a = std::remainder(a, 2 * kPi);
    if (a <= -kPi) {
        a += 2 * kPi;
    }
    return a;
}

}  // namespace

RotationCoord to_coord(const Unitary2 &u) {
    const Mat2 &m = u.matrix();
    double phase = std::arg(m.determinant()) / 2;
    Mat2 s = m * std::exp(-kI * phase);
    // s = a I - i (b . sigma) with real a, b.
    double a = 0.5 * (s(0, 0) + s(1, 1)).real();
    Vec3 b(-0.5 * (s(0, 1) + s(1, 0)).imag(), 0.5 * (s(1, 0) - s(0, 1)).real(), -0.5 * (s(0, 0) - s(1, 1)).imag());

    bool flip = a < 0;
    if (std::abs(a) < 1e-14) {
        // Boundary of the ball: pick the lexicographically positive axis.
        flip = false;
        for (int i = 0; i < 3; ++i) {
            if (std::abs(b(i)) > 1e-14) {
                flip = b(i) < 0;
                break;
            }
        }
    }
    if (flip) {
        a = -a;
        b = -b;
        phase += kPi;
    }
    RotationCoord c;
    c.phase = wrap_phase(phase);
    double nb = b.norm();
    if (nb > 0) {
        c.theta = b / nb * std::atan2(nb, a);
    }
    return c;
}

Unitary2 from_coord(const RotationCoord &c) {
    double angle = c.theta.norm();
    Mat2 s = std::cos(angle) * Mat2::Identity();
    if (angle > 0) {
        Vec3 n = c.theta / angle;
        s -= kI * std::sin(angle) * (n(0) * pauli(1) + n(1) * pauli(2) + n(2) * pauli(3));
    }
    return Unitary2(std::exp(kI * c.phase) * s);
}

Vec3 antipode(const Vec3 &theta) {
    double n = theta.norm();
    if (n == 0) {
        return theta;
    }
    return theta * (1 - kPi / n);
}

CellIndex cell_index(const Vec3 &theta, double side) {
    CellIndex out;
    for (int i = 0; i < 3; ++i) {
        double q = theta(i) / side;
        // Rounding noise must not split equal unitaries across a face.
        double r = std::round(q);
        if (std::abs(q - r) < 1e-9) {
            q = r;
        }
        out[i] = static_cast<int>(std::floor(q));
    }
    return out;
}

bool cell_intersects_ball(const CellIndex &cell, double side, double radius) {
    double sq = 0;
    for (int i = 0; i < 3; ++i) {
        double lo = cell[i] * side;
        double hi = lo + side;
        double nearest = std::clamp(0.0, lo, hi);
        sq += nearest * nearest;
    }
    return sq <= radius * radius * (1 + 1e-12);
}

}  // namespace qchan
