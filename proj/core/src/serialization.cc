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

#include "qchan/serialization.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "qchan/error.hpp"

namespace qchan {

namespace {

using nlohmann::json;

constexpr int kDbVersion = 1;

json parse_json(const std::string &text, const char *what) {
    try {
        return json::parse(text);
    } catch (const json::parse_error &e) {
        throw IoError(std::string("malformed ") + what + " JSON: " + e.what());
    }
}

// Shape errors inside syntactically valid JSON are validation failures.
template <typename F>
auto guarded(const char *what, F &&f) {
    try {
        return f();
    } catch (const json::exception &e) {
        throw ValidationError(std::string("invalid ") + what + ": " + e.what());
    }
}

json matrix_to_json(const Mat2 &m) {
    json out = json::array();
    for (int r = 0; r < 2; ++r) {
        for (int c = 0; c < 2; ++c) {
            out.push_back({m(r, c).real(), m(r, c).imag()});
        }
    }
    return out;
}

Mat2 matrix_from_json(const json &j) {
    if (!j.is_array() || j.size() != 4) {
        throw ValidationError("matrix must be a list of 4 [re, im] pairs");
    }
    Mat2 m;
    for (int k = 0; k < 4; ++k) {
        const json &e = j.at(k);
        if (!e.is_array() || e.size() != 2) {
            throw ValidationError("matrix entry must be [re, im]");
        }
        m(k / 2, k % 2) = Complex(e.at(0).get<double>(), e.at(1).get<double>());
    }
    return m;
}

json instruction_to_json(const Instruction &ins) {
    if (const auto *g = std::get_if<GateOp>(&ins)) {
        json out;
        out["gate"] = g->name;
        out["wire"] = g->wire == Wire::System ? "system" : "ancilla";
        out["matrix"] = matrix_to_json(g->matrix);
        json params = json::object();
        if (g->angle) {
            params["angle"] = *g->angle;
        }
        if (g->matrix_if_one) {
            params["matrix_if_one"] = matrix_to_json(*g->matrix_if_one);
            params["merged_x"] = g->merged_x;
        }
        if (g->word || g->word_if_one) {
            GateSet gs = GateSet::from_names(g->gate_set);
            params["gate_set"] = g->gate_set;
            if (g->word) {
                params["word"] = gs.format(*g->word);
            }
            if (g->word_if_one) {
                params["word_if_one"] = gs.format(*g->word_if_one);
            }
        }
        if (!params.empty()) {
            out["params"] = params;
        }
        return out;
    }
    if (std::holds_alternative<CnotOp>(ins)) {
        return {{"op", "cnot"}};
    }
    if (std::holds_alternative<MeasureOp>(ins)) {
        return {{"op", "measure"}};
    }
    if (std::holds_alternative<ClassicalXOp>(ins)) {
        return {{"op", "cx_classical"}};
    }
    return {{"op", "reset"}};
}

Instruction instruction_from_json(const json &j) {
    if (j.contains("op")) {
        std::string op = j.at("op").get<std::string>();
        if (op == "cnot") {
            return CnotOp{};
        }
        if (op == "measure") {
            return MeasureOp{};
        }
        if (op == "cx_classical") {
            return ClassicalXOp{};
        }
        if (op == "reset") {
            return ResetOp{};
        }
        throw ValidationError("unknown op '" + op + "'");
    }
    GateOp g;
    g.name = j.at("gate").get<std::string>();
    std::string wire = j.at("wire").get<std::string>();
    if (wire == "system") {
        g.wire = Wire::System;
    } else if (wire == "ancilla") {
        g.wire = Wire::Ancilla;
    } else {
        throw ValidationError("unknown wire '" + wire + "'");
    }
    if (j.contains("matrix")) {
        g.matrix = matrix_from_json(j.at("matrix"));
    } else {
        throw ValidationError("gate '" + g.name + "' has no matrix");
    }
    if (j.contains("params")) {
        const json &p = j.at("params");
        if (p.contains("angle")) {
            g.angle = p.at("angle").get<double>();
        }
        if (p.contains("matrix_if_one")) {
            g.matrix_if_one = matrix_from_json(p.at("matrix_if_one"));
            g.merged_x = p.value("merged_x", false);
        }
        if (p.contains("gate_set")) {
            g.gate_set = p.at("gate_set").get<std::string>();
            GateSet gs = GateSet::from_names(g.gate_set);
            if (p.contains("word")) {
                g.word = gs.parse(p.at("word").get<std::string>());
            }
            if (p.contains("word_if_one")) {
                g.word_if_one = gs.parse(p.at("word_if_one").get<std::string>());
            }
        }
    }
    return g;
}

json program_body(const CircuitProgram &prog) {
    json out = json::array();
    for (const auto &ins : prog.instructions) {
        out.push_back(instruction_to_json(ins));
    }
    return out;
}

CircuitProgram program_from_body(const json &j) {
    if (!j.is_array()) {
        throw ValidationError("branch must be a list of instructions");
    }
    CircuitProgram prog;
    for (const auto &ins : j) {
        prog.instructions.push_back(instruction_from_json(ins));
    }
    return prog;
}

}  // namespace

AffineChannel parse_channel(const std::string &json_text) {
    json j = parse_json(json_text, "channel");
    return guarded("channel", [&] {
        bool has_kraus = j.contains("kraus");
        bool has_affine = j.contains("affine");
        if (has_kraus == has_affine) {
            throw ValidationError("channel file must contain exactly one of \"kraus\" or \"affine\"");
        }
        if (has_kraus) {
            std::vector<Mat2> ops;
            for (const auto &k : j.at("kraus")) {
                ops.push_back(matrix_from_json(k));
            }
            return kraus_to_affine(KrausChannel(ops));
        }
        const json &a = j.at("affine");
        AffineChannel ch;
        const json &t = a.at("t");
        const json &big_t = a.at("T");
        if (t.size() != 3 || big_t.size() != 3) {
            throw ValidationError("affine channel needs t of length 3 and a 3x3 T");
        }
        for (int i = 0; i < 3; ++i) {
            ch.t(i) = t.at(i).get<double>();
            if (big_t.at(i).size() != 3) {
                throw ValidationError("affine channel needs a 3x3 T");
            }
            for (int k = 0; k < 3; ++k) {
                ch.T(i, k) = big_t.at(i).at(k).get<double>();
            }
        }
        if (!ch.t.allFinite() || !ch.T.allFinite()) {
            throw ValidationError("affine channel has non-finite entries");
        }
        return ch;
    });
}

std::string channel_to_json(const KrausChannel &ch) {
    json ops = json::array();
    for (const auto &k : ch.ops()) {
        ops.push_back(matrix_to_json(k));
    }
    return json{{"kraus", ops}}.dump(2) + "\n";
}

std::string channel_to_json(const AffineChannel &ch) {
    json t = json::array();
    json big_t = json::array();
    for (int i = 0; i < 3; ++i) {
        t.push_back(ch.t(i));
        big_t.push_back({ch.T(i, 0), ch.T(i, 1), ch.T(i, 2)});
    }
    return json{{"affine", {{"t", t}, {"T", big_t}}}}.dump(2) + "\n";
}

std::string program_to_json(const BranchedProgram &program, const ProgramMetadata &meta) {
    json out;
    out["p"] = program.p;
    out["branch1"] = program_body(program.branch1);
    out["branch2"] = program_body(program.branch2);
    if (meta.epsilon) {
        out["epsilon"] = *meta.epsilon;
    }
    if (meta.seed) {
        out["seed"] = *meta.seed;
    }
    if (!meta.mode.empty()) {
        out["mode"] = meta.mode;
    }
    return out.dump(2) + "\n";
}

BranchedProgram parse_program(const std::string &json_text, ProgramMetadata *meta) {
    json j = parse_json(json_text, "program");
    return guarded("program", [&] {
        BranchedProgram prog;
        prog.p = j.at("p").get<double>();
        prog.branch1 = program_from_body(j.at("branch1"));
        prog.branch2 = program_from_body(j.at("branch2"));
        if (meta) {
            if (j.contains("epsilon")) {
                meta->epsilon = j.at("epsilon").get<double>();
            }
            if (j.contains("seed")) {
                meta->seed = j.at("seed").get<std::uint64_t>();
            }
            meta->mode = j.value("mode", "");
        }
        prog.validate();
        return prog;
    });
}

std::string report_to_json(const VerificationReport &r) {
    json out;
    out["channel_distance"] = r.channel_distance;
    out["within_epsilon"] = r.within_epsilon;
    out["budget"] = {{"epsilon", r.epsilon}, {"eps_half", r.eps_half}, {"eps_eighth", r.eps_eighth}};
    out["budget_met"] = r.budget_met;
    out["p"] = r.p;
    out["seed"] = r.seed;
    out["counts"] = {{"cnot", r.cnot_count},
                     {"single_qubit", r.single_qubit_count},
                     {"total_word_length", r.total_word_length}};
    json us = json::array();
    for (const auto &u : r.unitaries) {
        us.push_back({{"branch", u.branch},
                      {"role", u.role},
                      {"distance", u.distance},
                      {"depth", u.depth},
                      {"word_length", u.word_length},
                      {"fallback", u.fallback}});
    }
    out["unitaries"] = us;
    return out.dump(2) + "\n";
}

std::string audit_to_json(const AuditReport &a, const LookupDatabase &db) {
    json out;
    out["gate_set_id"] = db.gate_set().id();
    out["cell_side"] = db.cell_side();
    out["max_len"] = db.max_len();
    out["sound"] = a.sound;
    json bad = json::array();
    for (const auto &c : a.unsound_cells) {
        bad.push_back({c[0], c[1], c[2]});
    }
    out["unsound_cells"] = bad;
    out["ball_cells"] = a.ball_cells;
    out["covered_cells"] = a.covered_cells;
    out["coverage"] = a.coverage;
    out["max_word_length"] = a.max_word_length;
    out["max_inverse_length"] = a.max_inverse_length;
    return out.dump(2) + "\n";
}

std::string db_to_json(const LookupDatabase &db) {
    json entries = json::array();
    for (const auto &[cell, entry] : db.cells()) {
        json letters = json::array();
        for (auto l : entry.word) {
            letters.push_back(static_cast<int>(l));
        }
        entries.push_back({cell[0], cell[1], cell[2], letters});
    }
    json out;
    out["version"] = kDbVersion;
    out["gate_set_id"] = db.gate_set().id();
    out["cell_side"] = db.cell_side();
    out["max_len"] = db.max_len();
    out["entries"] = entries;
    return out.dump() + "\n";
}

LookupDatabase parse_db(const std::string &json_text) {
    json j = parse_json(json_text, "database");
    return guarded("database", [&] {
        int version = j.at("version").get<int>();
        if (version != kDbVersion) {
            throw ValidationError("unsupported database version " + std::to_string(version));
        }
        GateSet gs = GateSet::from_names(j.at("gate_set_id").get<std::string>());
        LookupDatabase db(gs, j.at("cell_side").get<double>(), j.at("max_len").get<int>());
        for (const auto &e : j.at("entries")) {
            if (!e.is_array() || e.size() != 4) {
                throw ValidationError("database entry must be [i, j, k, [letters]]");
            }
            CellIndex cell{e.at(0).get<int>(), e.at(1).get<int>(), e.at(2).get<int>()};
            GateWord word;
            for (const auto &l : e.at(3)) {
                int v = l.get<int>();
                if (v < 0 || v >= gs.size()) {
                    throw ValidationError("database letter out of range");
                }
                word.push_back(static_cast<std::uint8_t>(v));
            }
            if (!db.claim(cell, word, to_coord(gs.word_to_unitary(word)))) {
                throw ValidationError("database lists a cell twice");
            }
        }
        return db;
    });
}

std::string read_text_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open '" + path + "' for reading");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string &path, const std::string &text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot open '" + path + "' for writing");
    }
    out << text;
    if (!out) {
        throw IoError("failed writing '" + path + "'");
    }
}

}  // namespace qchan
