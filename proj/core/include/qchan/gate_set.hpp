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

#ifndef QCHAN_GATE_SET_HPP
#define QCHAN_GATE_SET_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qchan/channel.hpp"

namespace qchan {

/// Sequence of generator indices. As a matrix, w = G[w_0] * G[w_1] * ... * G[w_{n-1}],
/// so the last letter acts first and concatenation is matrix multiplication.
using GateWord = std::vector<std::uint8_t>;

struct Generator {
    std::string name;
    Mat2 matrix;
    /// Smallest n with g^n proportional to I, or 0 when none up to 64.
    int order = 0;
    /// Index of a generator equal to g^-1 up to phase, or -1.
    int inverse = -1;
};

/// Finite generating set. Density of the generated group in SU(2) is assumed, not checked.
class GateSet {
   public:
    /// Known names: H, T, Tdg, S, Sdg, X, Y, Z. Comma separated, e.g. "H,T".
    static GateSet from_names(std::string_view names);
    /// Arbitrary named unitaries. Such sets cannot be reloaded from a database file by id.
    static GateSet from_generators(const std::vector<std::pair<std::string, Mat2>> &gens);

    const std::vector<Generator> &generators() const {
        return gens_;
    }
    int size() const {
        return static_cast<int>(gens_.size());
    }
    const std::string &id() const {
        return id_;
    }
    int index_of(std::string_view name) const;

    Unitary2 word_to_unitary(const GateWord &w) const;
    /// Cancels adjacent inverse pairs and runs of length >= order. Projectively preserves the product.
    GateWord reduce(const GateWord &w) const;
    /// Whether prepending letter g to an already reduced word keeps it reduced.
    bool can_prepend(std::uint8_t g, const GateWord &reduced) const;
    /// Reversed word with each letter replaced by its inverse expression (g^-1 or g^(order-1)).
    /// Throws UnsupportedError when some generator has neither.
    GateWord inverse(const GateWord &w) const;
    bool invertible() const;

    /// Space-separated generator names.
    std::string format(const GateWord &w) const;
    GateWord parse(std::string_view text) const;

   private:
    std::vector<Generator> gens_;
    std::string id_;
};

}  // namespace qchan

#endif  // QCHAN_GATE_SET_HPP
