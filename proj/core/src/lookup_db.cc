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

#include "qchan/lookup_db.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "qchan/error.hpp"

namespace qchan {

namespace {

using ProductKey = std::array<long long, 3>;

// Quantized coordinates identify words with equal projective products.
ProductKey product_key(const RotationCoord &c) {
    ProductKey k;
    for (int i = 0; i < 3; ++i) {
        k[i] = std::llround(c.theta(i) * 1e9);
    }
    return k;
}

struct Node {
    GateWord word;
    Mat2 product;
};

}  // namespace

LookupDatabase::LookupDatabase(GateSet gates, double side, int max_len)
    : gates_(std::move(gates)), side_(side), max_len_(max_len) {
    if (!(side > 0) || !std::isfinite(side)) {
        throw ValidationError("cell side must be positive");
    }
    if (max_len < 0) {
        throw ValidationError("max_len must be non-negative");
    }
}

bool LookupDatabase::claim(const CellIndex &cell, const GateWord &word, const RotationCoord &coord) {
    return cells_.emplace(cell, DbEntry{word, coord}).second;
}

long LookupDatabase::ball_cell_count() const {
    int n = static_cast<int>(std::ceil((kPi / 2) / side_)) + 1;
    long count = 0;
    for (int i = -n; i <= n; ++i) {
        for (int j = -n; j <= n; ++j) {
            for (int k = -n; k <= n; ++k) {
                count += cell_intersects_ball({i, j, k}, side_) ? 1 : 0;
            }
        }
    }
    return count;
}

LookupDatabase LookupDatabase::build(const GateSet &gates, double side, int max_len) {
    LookupDatabase db(gates, side, max_len);
    long target = db.ball_cell_count();

    std::set<ProductKey> seen;
    RotationCoord origin;
    seen.insert(product_key(origin));
    db.claim(cell_index(origin, side), {}, origin);
    db.words_enumerated_ = 1;

    std::vector<Node> frontier{{{}, Mat2::Identity()}};
    for (int len = 1; len <= max_len && static_cast<long>(db.cells_.size()) < target; ++len) {
        std::vector<Node> next;
        for (const Node &node : frontier) {
            for (int g = 0; g < gates.size(); ++g) {
                auto letter = static_cast<std::uint8_t>(g);
                if (!gates.can_prepend(letter, node.word)) {
                    continue;
                }
                Node child;
                child.word.reserve(node.word.size() + 1);
                child.word.push_back(letter);
                child.word.insert(child.word.end(), node.word.begin(), node.word.end());
                child.product = gates.generators()[g].matrix * node.product;
                next.push_back(std::move(child));
            }
        }
        std::sort(next.begin(), next.end(), [](const Node &a, const Node &b) { return a.word < b.word; });
        std::vector<Node> kept;
        for (Node &node : next) {
            RotationCoord c = to_coord(Unitary2::nearest(node.product));
            if (!seen.insert(product_key(c)).second) {
                continue;
            }
            ++db.words_enumerated_;
            db.claim(cell_index(c, side), node.word, c);
            kept.push_back(std::move(node));
        }
        frontier = std::move(kept);
        if (frontier.empty()) {
            break;
        }
    }
    return db;
}

LookupResult LookupDatabase::lookup(const Unitary2 &u) const {
    if (cells_.empty()) {
        throw ValidationError("lookup in an empty database");
    }
    RotationCoord c = to_coord(u);
    Vec3 other = antipode(c.theta);
    auto distance_to = [&](const DbEntry &e) {
        return std::min((e.coord.theta - c.theta).norm(), (e.coord.theta - other).norm());
    };

    CellIndex own = cell_index(c, side_);
    LookupResult out;
    auto hit = cells_.find(own);
    if (hit != cells_.end()) {
        out.word = hit->second.word;
        out.cell = own;
        out.coord_distance = distance_to(hit->second);
        out.product = gates_.word_to_unitary(out.word);
        return out;
    }

    std::array<CellIndex, 2> centers{own, cell_index(other, side_)};
    const DbEntry *best = nullptr;
    CellIndex best_cell{};
    double best_d = INFINITY;
    int max_r = static_cast<int>(std::ceil(kPi / side_)) + 2;
    for (int r = 1; r <= max_r; ++r) {
        if (best && (r - 1) * side_ > best_d) {
            break;
        }
        for (const CellIndex &center : centers) {
            for (int i = -r; i <= r; ++i) {
                for (int j = -r; j <= r; ++j) {
                    for (int k = -r; k <= r; ++k) {
                        if (std::max({std::abs(i), std::abs(j), std::abs(k)}) != r) {
                            continue;
                        }
                        CellIndex cell{center[0] + i, center[1] + j, center[2] + k};
                        auto it = cells_.find(cell);
                        if (it == cells_.end()) {
                            continue;
                        }
                        double d = distance_to(it->second);
                        if (d < best_d || (d == best_d && cell < best_cell)) {
                            best_d = d;
                            best = &it->second;
                            best_cell = cell;
                        }
                    }
                }
            }
        }
    }
    if (!best) {
        // Unreachable for a non-empty database: the search radius spans the whole ball.
        throw ValidationError("lookup found no populated cell");
    }
    out.word = best->word;
    out.cell = best_cell;
    out.coord_distance = best_d;
    out.fallback = true;
    out.product = gates_.word_to_unitary(out.word);
    return out;
}

AuditReport LookupDatabase::audit() const {
    AuditReport report;
    report.ball_cells = ball_cell_count();
    for (const auto &[cell, entry] : cells_) {
        RotationCoord c = to_coord(gates_.word_to_unitary(entry.word));
        if (cell_index(c, side_) != cell) {
            report.sound = false;
            report.unsound_cells.push_back(cell);
        }
        if (cell_intersects_ball(cell, side_)) {
            ++report.covered_cells;
        }
        report.max_word_length = std::max(report.max_word_length, static_cast<int>(entry.word.size()));
        if (gates_.invertible()) {
            report.max_inverse_length =
                std::max(report.max_inverse_length, static_cast<int>(gates_.inverse(entry.word).size()));
        }
    }
    report.coverage = report.ball_cells ? static_cast<double>(report.covered_cells) / report.ball_cells : 0;
    return report;
}

}  // namespace qchan
