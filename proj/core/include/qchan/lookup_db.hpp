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

#ifndef QCHAN_LOOKUP_DB_HPP
#define QCHAN_LOOKUP_DB_HPP

#include <map>
#include <string>

#include "qchan/gate_set.hpp"
#include "qchan/rotation_coord.hpp"

namespace qchan {

struct DbEntry {
    GateWord word;
    RotationCoord coord;  // coordinates of word's product
};

struct LookupResult {
    GateWord word;
    Unitary2 product;
    /// True when the target's own cell was empty and a neighbor was used.
    bool fallback = false;
    /// Coordinate distance, minimized over both representatives of the target.
    double coord_distance = 0;
    CellIndex cell{};
};

struct AuditReport {
    bool sound = true;
    std::vector<CellIndex> unsound_cells;
    long ball_cells = 0;
    long covered_cells = 0;
    double coverage = 0;
    int max_word_length = 0;
    /// Longest inverse word, which also enters commutator words.
    int max_inverse_length = 0;
};

/// Cubic lattice over rotation coordinates; each populated cell holds the first
/// (shortest, then lexicographically smallest) word whose product lands in it.
class LookupDatabase {
   public:
    LookupDatabase(GateSet gates, double side, int max_len);

    /// Breadth-first enumeration of reduced words up to max_len, stopping early once every
    /// ball-intersecting cell is populated.
    static LookupDatabase build(const GateSet &gates, double side, int max_len);

    const GateSet &gate_set() const {
        return gates_;
    }
    double cell_side() const {
        return side_;
    }
    int max_len() const {
        return max_len_;
    }
    const std::map<CellIndex, DbEntry> &cells() const {
        return cells_;
    }
    long words_enumerated() const {
        return words_enumerated_;
    }

    /// Inserts (cell, word) keeping the first claimant. Returns whether the cell was empty.
    bool claim(const CellIndex &cell, const GateWord &word, const RotationCoord &coord);

    /// Throws ValidationError on an empty database.
    LookupResult lookup(const Unitary2 &u) const;

    /// Number of cells meeting the closed pi/2 ball.
    long ball_cell_count() const;
    AuditReport audit() const;

   private:
    GateSet gates_;
    double side_;
    int max_len_;
    long words_enumerated_ = 0;
    std::map<CellIndex, DbEntry> cells_;
};

}  // namespace qchan

#endif  // QCHAN_LOOKUP_DB_HPP
