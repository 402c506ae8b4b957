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

#ifndef QCHAN_SERIALIZATION_HPP
#define QCHAN_SERIALIZATION_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "qchan/compiler.hpp"

namespace qchan {

/// Channel file: {"kraus": [[[re, im] x 4], ...]} (row-major) or {"affine": {"t": [..], "T": [[..], ..]}}.
AffineChannel parse_channel(const std::string &json_text);
std::string channel_to_json(const KrausChannel &ch);
std::string channel_to_json(const AffineChannel &ch);

struct ProgramMetadata {
    std::optional<double> epsilon;
    std::optional<std::uint64_t> seed;
    std::string mode;
};

/// Program file: {"p", "branch1", "branch2"} plus optional "epsilon", "seed", "mode".
/// Gate matrices are authoritative; lowered words ride along in "params".
std::string program_to_json(const BranchedProgram &program, const ProgramMetadata &meta = {});
BranchedProgram parse_program(const std::string &json_text, ProgramMetadata *meta = nullptr);

std::string report_to_json(const VerificationReport &report);
std::string audit_to_json(const AuditReport &audit, const LookupDatabase &db);

/// {version, gate_set_id, cell_side, max_len, entries: [[i, j, k, [letters]], ...]}
std::string db_to_json(const LookupDatabase &db);
LookupDatabase parse_db(const std::string &json_text);

/// Throw IoError on failure.
std::string read_text_file(const std::string &path);
void write_text_file(const std::string &path, const std::string &text);

}  // namespace qchan

#endif  // QCHAN_SERIALIZATION_HPP
