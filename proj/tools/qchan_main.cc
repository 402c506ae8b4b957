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

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "qchan/compiler.hpp"
#include "qchan/error.hpp"
#include "qchan/random.hpp"
#include "qchan/serialization.hpp"

namespace {

void emit(const std::string &text, const std::string &path) {
    if (path.empty()) {
        std::cout << text;
    } else {
        qchan::write_text_file(path, text);
    }
}

int run_compile(const std::string &channel_path, double eps, const std::string &mode, const std::string &db_path,
                std::uint64_t seed, int max_depth, const std::string &out_path, const std::string &report_path) {
    qchan::CompileRequest req;
    req.channel = qchan::parse_channel(qchan::read_text_file(channel_path));
    req.epsilon = eps;
    req.seed = seed;
    req.max_depth = max_depth;
    std::optional<qchan::LookupDatabase> db;
    if (mode == "gateset") {
        req.mode = qchan::CompileMode::GateSet;
        if (db_path.empty()) {
            throw qchan::ValidationError("--mode gateset requires --db");
        }
        db.emplace(qchan::parse_db(qchan::read_text_file(db_path)));
        req.db = &*db;
    }
    qchan::CompileResult result;
    try {
        result = qchan::compile(req);
    } catch (const qchan::BudgetError &e) {
        std::cerr << "error: " << e.what() << "\nachievable epsilon estimate: " << e.achievable_epsilon << "\n";
        return qchan::exit_code_for(e.kind());
    }
    qchan::ProgramMetadata meta;
    meta.epsilon = eps;
    meta.seed = seed;
    meta.mode = qchan::mode_name(req.mode);
    qchan::write_text_file(out_path, qchan::program_to_json(result.program, meta));
    emit(qchan::report_to_json(result.report), report_path);
    return 0;
}

int run_verify(const std::string &program_path, const std::string &channel_path, std::optional<double> eps,
               const std::string &report_path) {
    qchan::ProgramMetadata meta;
    qchan::BranchedProgram prog = qchan::parse_program(qchan::read_text_file(program_path), &meta);
    qchan::AffineChannel target = qchan::parse_channel(qchan::read_text_file(channel_path));
    double bound = eps ? *eps : meta.epsilon.value_or(1e-8);
    qchan::VerificationReport rep = qchan::verify(prog, target, bound);
    rep.seed = meta.seed.value_or(0);
    emit(qchan::report_to_json(rep), report_path);
    if (!rep.within_epsilon) {
        std::cerr << "verification failed: distance " << rep.channel_distance << " > " << bound << "\n";
        return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"qchan: compile single-qubit channels into one-CNOT circuits"};
    app.require_subcommand(1);

    std::string channel_path, out_path, db_path, report_path, program_path, mode = "exact";
    double eps = 1e-8;
    std::uint64_t seed = 0;
    int max_depth = 6;
    auto *compile = app.add_subcommand("compile", "Compile a channel into a branched circuit program");
    compile->add_option("--channel", channel_path, "Channel JSON file")->required();
    compile->add_option("--eps", eps, "Target channel distance")->required();
    compile->add_option("--mode", mode, "exact or gateset")->check(CLI::IsMember({"exact", "gateset"}));
    compile->add_option("--db", db_path, "Lookup database JSON (gateset mode)");
    compile->add_option("--seed", seed, "Seed for the decomposition search");
    compile->add_option("--max-depth", max_depth, "Solovay-Kitaev depth cap");
    compile->add_option("--out", out_path, "Output program JSON")->required();
    compile->add_option("--report", report_path, "Write the report here instead of stdout");

    std::optional<double> verify_eps;
    auto *verify = app.add_subcommand("verify", "Measure a program's distance to a channel");
    verify->add_option("--program", program_path, "Program JSON file")->required();
    verify->add_option("--channel", channel_path, "Channel JSON file")->required();
    verify->add_option("--eps", verify_eps, "Acceptance bound (default: the program's epsilon, else 1e-8)");
    verify->add_option("--report", report_path, "Write the report here instead of stdout");

    auto *random = app.add_subcommand("random-channel", "Sample a channel from a Haar-random dilation");
    random->add_option("--seed", seed, "Sampling seed")->required();
    random->add_option("--out", out_path, "Output channel JSON")->required();

    auto *db = app.add_subcommand("db", "Lookup database tools");
    db->require_subcommand(1);
    std::string gates = "H,T";
    double side = 0.35;
    int max_len = 16;
    auto *build = db->add_subcommand("build", "Enumerate words into a cubic-lattice database");
    build->add_option("--gates", gates, "Comma separated generator names");
    build->add_option("--side", side, "Cell side length");
    build->add_option("--max-len", max_len, "Maximum word length");
    build->add_option("--out", out_path, "Output database JSON")->required();
    std::string audit_path;
    auto *audit = db->add_subcommand("audit", "Re-verify soundness and coverage");
    audit->add_option("file", audit_path, "Database JSON")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return qchan::exit_code_for(qchan::ErrorKind::Validation);
    }

    try {
        if (*compile) {
            return run_compile(channel_path, eps, mode, db_path, seed, max_depth, out_path, report_path);
        }
        if (*verify) {
            return run_verify(program_path, channel_path, verify_eps, report_path);
        }
        if (*random) {
            qchan::write_text_file(out_path, qchan::channel_to_json(qchan::random_channel(seed)));
            return 0;
        }
        if (*build) {
            qchan::LookupDatabase built =
                qchan::LookupDatabase::build(qchan::GateSet::from_names(gates), side, max_len);
            qchan::write_text_file(out_path, qchan::db_to_json(built));
            std::cout << qchan::audit_to_json(built.audit(), built);
            return 0;
        }
        if (*audit) {
            qchan::LookupDatabase loaded = qchan::parse_db(qchan::read_text_file(audit_path));
            qchan::AuditReport rep = loaded.audit();
            std::cout << qchan::audit_to_json(rep, loaded);
            return rep.sound ? 0 : 1;
        }
    } catch (const qchan::Error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return qchan::exit_code_for(e.kind());
    }
    return 1;
}
