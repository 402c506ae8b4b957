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

#ifndef QCHAN_SOLOVAY_KITAEV_HPP
#define QCHAN_SOLOVAY_KITAEV_HPP

#include "qchan/lookup_db.hpp"

namespace qchan {

/// Balanced group commutator: v w v^dagger w^dagger equals delta up to phase.
struct GroupCommutator {
    Unitary2 v;
    Unitary2 w;
};

/// Throws ValidationError unless the projective distance from delta to I is below 1.
GroupCommutator gc_factor(const Unitary2 &delta);

struct SkResult {
    GateWord word;
    Unitary2 product;
    /// Projective distance from the target to word's product.
    double distance = 0;
    int depth = 0;
    /// Some lookup along the recursion used a neighbor cell.
    bool fallback = false;
};

/// Depth-n Solovay-Kitaev approximation. Depth 0 is a database lookup; every level
/// multiplies the word length by at most 5. Depth >= 1 throws UnsupportedError for gate
/// sets without inverse expressions.
SkResult sk_decompose(const Unitary2 &u, int depth, const LookupDatabase &db);

/// Shallowest depth in [0, max_depth] reaching projective distance <= target; when none
/// does, the closest result found.
SkResult synthesize(const Unitary2 &u, double target, const LookupDatabase &db, int max_depth = 6);

}  // namespace qchan

#endif  // QCHAN_SOLOVAY_KITAEV_HPP
