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

// Declarative pipeline: a JSON config describes a tower, a twist, a modulus
// and optionally a code; each command turns it into a JSON artifact.
//
// Ring elements in configs are an integer, an array of integer coordinates,
// or a string in the element syntax of format_elem. Polynomials are arrays of
// elements (constant term first) or strings in the syntax of format_poly.

#ifndef SKEWLAT_PIPELINE_HPP
#define SKEWLAT_PIPELINE_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "json.hpp"
#include "skewlat/mrd.hpp"

namespace skewlat {

using Json = nlohmann::json;

struct GeneralizedConfig {
    std::string rho_generator;
    Json c;
    Json d;
    int m = 2;
};

struct PipelineConfig {
    TowerSpec tower;
    /// Empty selects the first Galois generator (identity if there is none).
    std::string sigma_generator;
    int sigma_power = 1;
    /// Either `f` or `c` with `m` (f = t^m - c).
    Json f;
    Json c;
    int m = 2;
    std::optional<GeneralizedConfig> generalized;
    /// {"generator": poly over the residue ring} or {"index": k}.
    Json code;
    std::uint64_t search_bound = 10000000;
    int samples = 200;
    std::uint64_t seed = 0;
};

/// Throws InvalidArgument on malformed or out-of-range fields.
PipelineConfig parse_config(const Json& config);
Json config_to_json(const PipelineConfig& config);
/// FNV-1a over the canonical dump, 16 hex digits.
std::string config_hash(const Json& config);

Json cmd_tower(const PipelineConfig& config);
Json cmd_algebra(const PipelineConfig& config);
Json cmd_codes(const PipelineConfig& config);
Json cmd_lift(const PipelineConfig& config);
Json cmd_mrd(const PipelineConfig& config);

/// Runs a command and wraps the result with the command name, the
/// normalized config and its hash.
Json run_command(const std::string& command, const PipelineConfig& config);
/// Recomputes an artifact from its embedded config and compares.
Json verify_artifact(const Json& artifact);

/// Codeword CSV of the selected code.
std::string selected_code_csv(const PipelineConfig& config, std::uint64_t bound = 10000);

}  // namespace skewlat

#endif
