/* Copyright (C) 2026 csnsim contributors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "csnsim/simulation.hpp"

namespace csn {

/// Value grids for the sweep subcommand. `strength` replaces the strength of
/// every schedule entry.
struct SweepLists {
    std::vector<double> lambda_f;
    std::vector<double> lambda_m;
    std::vector<double> strength;
};

/// A parsed scenario file: the model/schedule plus ensemble bookkeeping.
/// Topic and tier ids are 1-based in the text format and 0-based in memory.
struct ScenarioConfig {
    std::string name = "custom";
    ScenarioParams scenario;
    int replicas = 500;
    std::uint64_t seed = 1;
    int snapshot_every = 25;
    int jobs = 1;
    SweepLists sweep;
};

/// Parses the flat sectioned text format. Unknown sections or keys, malformed
/// values, out-of-range parameters, and overlapping same-kind influence
/// windows are all ConfigError (with the line number where applicable).
ScenarioConfig parse_config(const std::string& text);
ScenarioConfig load_config_file(const std::string& path);

/// Re-validates a config that was edited programmatically.
void validate_config(const ScenarioConfig& cfg);

/// Canonical serialization: fixed section/key order, 17-significant-digit
/// numbers. parse_config(canonical_config_text(c)) reproduces c exactly.
std::string canonical_config_text(const ScenarioConfig& cfg);

/// The same content as flat "section.key" pairs, for manifests.
std::vector<std::pair<std::string, std::string>> canonical_config_items(const ScenarioConfig& cfg);

/// Sets one value addressed as "section.key" ("model.lambda_f") or
/// "influence.<index>.key" with a 0-based entry index. Values use the text
/// format's syntax. Throws ConfigError on unknown paths or bad values.
void set_config_value(ScenarioConfig& cfg, const std::string& dotted_key,
                      const std::string& value);

/// Shipped scenario presets.
std::vector<std::string> preset_names();
std::string preset_text(const std::string& name);
ScenarioConfig preset_config(const std::string& name);

} // namespace csn
