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

#ifndef QCHAN_ROTATION_COORD_HPP
#define QCHAN_ROTATION_COORD_HPP

#include <array>

#include "qchan/channel.hpp"

namespace qchan {

/// u = exp(i phase) * exp(-i theta . sigma) with |theta| <= pi/2.
struct RotationCoord {
    Vec3 theta = Vec3::Zero();
    double phase = 0;
};

using CellIndex = std::array<int, 3>;

RotationCoord to_coord(const Unitary2 &u);
Unitary2 from_coord(const RotationCoord &c);

/// The other representative theta (1 - pi / |theta|) of the same projective unitary.
Vec3 antipode(const Vec3 &theta);

/// Componentwise floor(theta / side); coordinates within 1e-9 cells of a face count as on it.
CellIndex cell_index(const Vec3 &theta, double side);
inline CellIndex cell_index(const RotationCoord &c, double side) {
    return cell_index(c.theta, side);
}

/// Whether the closed cube of the cell meets the closed ball of the given radius.
bool cell_intersects_ball(const CellIndex &cell, double side, double radius = kPi / 2);

}  // namespace qchan

#endif  // QCHAN_ROTATION_COORD_HPP
