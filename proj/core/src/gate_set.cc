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

#include "qchan/gate_set.hpp"

#include <cmath>
#include <sstream>

#include "qchan/error.hpp"

namespace qchan {

namespace {

Mat2 named_matrix(std::string_view name) {
    const double r = 1 / std::sqrt(2.0);
    Mat2 m;
    if (name == "H") {
        m << r, r, r, -r;
    } else if (name == "T") {
        m << 1, 0, 0, std::exp(kI * (kPi / 4));
    } else if (name == "Tdg") {
        m << 1, 0, 0, std::exp(-kI * (kPi / 4));
    } else if (name == "S") {
        m << 1, 0, 0, kI;
    } else if (name == "Sdg") {
        m << 1, 0, 0, -kI;
    } else if (name == "X") {
        m = pauli(1);
    } else if (name == "Y") {
        m = pauli(2);
    } else if (name == "Z") {
        m = pauli(3);
    } else {
        throw ValidationError("unknown generator name '" + std::string(name) + "'");
    }
    return m;
}

bool proportional_to_identity(const Mat2 &m) {
    return unitary_distance(m, Mat2::Identity(), PhaseMode::Projective) < 1e-9;
}

std::string trim(std::string_view s) {
    size_t a = s.find_first_not_of(" \t");
    if (a == std::string_view::npos) {
        return "";
    }
    size_t b = s.find_last_not_of(" \t");
    return std::string(s.substr(a, b - a + 1));
}

}  // namespace

GateSet GateSet::from_names(std::string_view names) {
    std::vector<std::pair<std::string, Mat2>> gens;
    std::string list(names);
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::string name = trim(item);
        if (!name.empty()) {
            gens.emplace_back(name, named_matrix(name));
        }
    }
    return from_generators(gens);
}

GateSet GateSet::from_generators(const std::vector<std::pair<std::string, Mat2>> &gens) {
    GateSet gs;
    for (const auto &[name, matrix] : gens) {
        if (name.empty() || name.find_first_of(" \t,") != std::string::npos) {
            throw ValidationError("invalid generator name '" + name + "'");
        }
        if (gs.index_of(name) >= 0) {
            throw ValidationError("duplicate generator '" + name + "'");
        }
        Generator g;
        g.name = name;
        g.matrix = Unitary2(matrix).matrix();
        Mat2 power = g.matrix;
        for (int n = 1; n <= 64; ++n) {
            if (proportional_to_identity(power)) {
                g.order = n;
                break;
            }
            power = g.matrix * power;
        }
        gs.gens_.push_back(g);
    }
    if (gs.gens_.empty()) {
        throw ValidationError("gate set is empty");
    }
    if (gs.gens_.size() > 255) {
        throw ValidationError("gate set too large");
    }
    for (auto &g : gs.gens_) {
        for (int j = 0; j < gs.size(); ++j) {
            if (proportional_to_identity(g.matrix * gs.gens_[j].matrix)) {
                g.inverse = j;
                break;
            }
        }
    }
    for (int i = 0; i < gs.size(); ++i) {
        gs.id_ += (i ? "," : "") + gs.gens_[i].name;
    }
    return gs;
}

int GateSet::index_of(std::string_view name) const {
    for (int i = 0; i < size(); ++i) {
        if (gens_[i].name == name) {
            return i;
        }
    }
    return -1;
}

Unitary2 GateSet::word_to_unitary(const GateWord &w) const {
    Mat2 u = Mat2::Identity();
    for (size_t i = w.size(); i-- > 0;) {
        if (w[i] >= gens_.size()) {
            throw ValidationError("word letter out of range for gate set " + id_);
        }
        u = gens_[w[i]].matrix * u;
    }
    return Unitary2::nearest(u);
}

GateWord GateSet::reduce(const GateWord &w) const {
    GateWord out;
    out.reserve(w.size());
    for (std::uint8_t g : w) {
        if (!out.empty() && gens_[g].inverse == out.back() && gens_[out.back()].inverse == g) {
            out.pop_back();
            continue;
        }
        out.push_back(g);
        int order = gens_[g].order;
        if (order > 0 && static_cast<int>(out.size()) >= order) {
            bool run = true;
            for (int k = 0; k < order && run; ++k) {
                run = out[out.size() - 1 - k] == g;
            }
            if (run) {
                out.resize(out.size() - order);
            }
        }
    }
    return out;
}

bool GateSet::can_prepend(std::uint8_t g, const GateWord &reduced) const {
    if (reduced.empty()) {
        return gens_[g].order != 1;
    }
    if (gens_[g].inverse == reduced.front()) {
        return false;
    }
    int order = gens_[g].order;
    if (order == 0) {
        return true;
    }
    int run = 0;
    while (run < static_cast<int>(reduced.size()) && reduced[run] == g) {
        ++run;
    }
    return run + 1 < order;
}

bool GateSet::invertible() const {
    for (const auto &g : gens_) {
        if (g.inverse < 0 && g.order == 0) {
            return false;
        }
    }
    return true;
}

GateWord GateSet::inverse(const GateWord &w) const {
    GateWord out;
    for (size_t i = w.size(); i-- > 0;) {
        const Generator &g = gens_[w[i]];
        if (g.inverse >= 0) {
            out.push_back(static_cast<std::uint8_t>(g.inverse));
        } else if (g.order > 0) {
            out.insert(out.end(), g.order - 1, w[i]);
        } else {
            throw UnsupportedError("generator " + g.name + " has no inverse expression in gate set " + id_);
        }
    }
    return reduce(out);
}

std::string GateSet::format(const GateWord &w) const {
    std::string out;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) {
            out += ' ';
        }
        out += gens_.at(w[i]).name;
    }
    return out;
}

GateWord GateSet::parse(std::string_view text) const {
    GateWord out;
    std::stringstream ss{std::string(text)};
    std::string name;
    while (ss >> name) {
        int i = index_of(name);
        if (i < 0) {
            throw ValidationError("unknown generator '" + name + "' for gate set " + id_);
        }
        out.push_back(static_cast<std::uint8_t>(i));
    }
    return out;
}

}  // namespace qchan
