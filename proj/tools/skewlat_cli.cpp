/* Copyright 2026 The skewlat Authors.

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// skewlat: build towers, classify algebras, enumerate codes, lift lattices
// and check rank-metric codes from a JSON config.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "skewlat/error.hpp"
#include "skewlat/pipeline.hpp"

namespace {

using skewlat::ErrorCode;
using skewlat::Json;

Json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) skewlat::fail(ErrorCode::InvalidArgument, "cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        skewlat::fail(ErrorCode::InvalidArgument, path + ": " + e.what());
    }
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) skewlat::fail(ErrorCode::InvalidArgument, "cannot write " + path);
    out << text;
}

struct Options {
    std::string config;
    std::string out;
    std::string artifact;
    std::string csv;
    std::optional<std::uint64_t> seed;
    std::optional<int> precision;
};

skewlat::PipelineConfig load_config(const Options& opt) {
    Json j = opt.config.empty() ? Json::object() : read_json(opt.config);
    if (opt.seed) j["seed"] = *opt.seed;
    if (opt.precision) j["tower"]["precision"] = *opt.precision;
    return skewlat::parse_config(j);
}

int run(const std::string& command, const Options& opt) {
    if (command == "verify") {
        if (opt.artifact.empty()) skewlat::fail(ErrorCode::InvalidArgument, "verify needs --artifact");
        const Json report = skewlat::verify_artifact(read_json(opt.artifact));
        write_text(opt.out, report.dump(2) + "\n");
        return report["verified"].get<bool>() ? 0 : 1;
    }
    const auto cfg = load_config(opt);
    write_text(opt.out, skewlat::run_command(command, cfg).dump(2) + "\n");
    if (!opt.csv.empty()) write_text(opt.csv, skewlat::selected_code_csv(cfg));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Skew polynomial algebras, codes and lattices over p-adic and power series rings"};
    app.require_subcommand(1);
    Options opt;

    const std::vector<std::pair<std::string, std::string>> commands = {
        {"tower", "Build O_K and its residue chain ring"},
        {"algebra", "Associativity and division checks for S_f and its reduction"},
        {"codes", "Enumerate cyclic codes of the residue algebra"},
        {"lift", "Construction A lattice of the selected code"},
        {"mrd", "Rank distance, Singleton check and full-rank certification"},
        {"verify", "Recompute an artifact from its embedded config"},
    };
    for (const auto& [name, help] : commands) {
        auto* sub = app.add_subcommand(name, help);
        if (name == "verify") {
            sub->add_option("--artifact", opt.artifact, "Artifact JSON to re-check")->required();
        } else {
            sub->add_option("--config", opt.config, "Pipeline config (JSON)");
            sub->add_option("--seed", opt.seed, "Sampler seed (overrides the config)");
            sub->add_option("--precision", opt.precision, "Precision N (overrides the config)");
        }
        if (name == "codes" || name == "lift") sub->add_option("--csv", opt.csv, "Write the selected code's codewords as CSV");
        sub->add_option("--out", opt.out, "Output path (default stdout)");
    }
    CLI11_PARSE(app, argc, argv);

    const std::string command = app.get_subcommands().front()->get_name();
    try {
        return run(command, opt);
    } catch (const skewlat::Error& e) {
        std::cerr << Json{{"error", skewlat::error_name(e.code())}, {"message", e.what()}}.dump() << "\n";
        return skewlat::exit_code(e.code());
    } catch (const Json::exception& e) {
        std::cerr << Json{{"error", "InvalidArgument"}, {"message", e.what()}}.dump() << "\n";
        return skewlat::exit_code(ErrorCode::InvalidArgument);
    }
}
