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
#include "csnsim/config.hpp"

#include <string>

#include "csnsim/errors.hpp"

namespace csn {

namespace {

/// Shared parameter block of every bundled scenario.  Individual presets
/// override a handful of lines and append [influence] windows.
std::string base_text(const std::string& name, const std::string& lambda_f,
                      const std::string& lambda_m, const std::string& sigma_fp)
{
    return "[scenario]\n"
           "name = " + name + "\n"
           "target_topic = 25\n"
           "target_tier = 2\n"
           "quantile = 0.2\n"
           "\n"
           "[model]\n"
           "n_topics = 250\n"
           "n_events = 1000\n"
           "n_tiers = 3\n"
           "horizon = 500\n"
           "lambda_f = " + lambda_f + "\n"
           "lambda_m = " + lambda_m + "\n"
           "lambda_e = 0.5\n"
           "\n"
           "[init]\n"
           "alpha_c = 1.0\n"
           "weight_a = -0.65\n"
           "weight_b = 1.0\n"
           "weight_s = 0.12\n"
           "sigma_fp = " + sigma_fp + "\n"
           "sigma_wp = 0.05\n"
           "\n"
           "[filter]\n"
           "r1 = 0.5\n"
           "r2 = 0.5\n"
           "alpha = 0.4, 0.2, 0.1\n"
           "\n"
           "[comments]\n"
           "mass_a = 5.7e-06\n"
           "mass_b = 0.0001\n"
           "mass_s = 1.5\n"
           "zero_ratio = 0.7, 0.9, 0.9\n"
           "rate_a = 0.005, 0.01, 0.02\n"
           "rate_b = 0.8\n"
           "c_com = 1e-06\n"
           "\n"
           "[update]\n"
           "eta = 10.0\n"
           "w_max = 0.8\n"
           "sigma_wn = 0.001\n"
           "literal_hebbian = false\n"
           "\n"
           "[ensemble]\n"
           "replicas = 500\n"
           "seed = 1\n"
           "snapshot_every = 25\n"
           "jobs = 1\n";
}

std::string influence_text(const std::string& kind, int t_start, int t_end,
                           const std::string& strength, int target_topic = 0,
                           int target_tier = 0)
{
    std::string out = "\n[influence]\n"
                      "kind = " + kind + "\n"
                      "t_start = " + std::to_string(t_start) + "\n"
                      "t_end = " + std::to_string(t_end) + "\n"
                      "strength = " + strength + "\n";
    if (target_topic > 0) out += "target_topic = " + std::to_string(target_topic) + "\n";
    if (target_tier > 0) out += "target_tier = " + std::to_string(target_tier) + "\n";
    return out;
}

} // namespace

std::vector<std::string> preset_names()
{
    return {"baseline",  "alignment", "amplification", "reframing",     "turnover",
            "troll",     "counterspeech", "shock",     "hypersensitive"};
}

std::string preset_text(const std::string& name)
{
    if (name == "baseline")
        return base_text(name, "0.2", "0.9", "1.0");
    if (name == "alignment")
        return base_text(name, "0.2", "0.9", "1.0") +
               influence_text("alignment", 100, 300, "0.8");
    if (name == "amplification")
        return base_text(name, "0.2", "0.9", "1.0") +
               influence_text("amplification", 100, 300, "25.0", 25);
    if (name == "reframing")
        return base_text(name, "0.2", "0.9", "1.0") +
               influence_text("reframing", 100, 300, "0.04", 25, 2);
    if (name == "turnover")
        return base_text(name, "0.2", "0.99", "1.0") +
               influence_text("turnover", 100, 300, "0.95");
    if (name == "troll")
        return base_text(name, "0.2", "0.9", "1.0") +
               influence_text("troll", 100, 300, "1.5", 25);
    if (name == "counterspeech")
        return base_text(name, "0.2", "0.9", "1.0") +
               influence_text("troll", 100, 500, "1.5", 25) +
               influence_text("counterspeech", 150, 500, "1.5");
    if (name == "shock")
        return base_text(name, "0.2", "0.9", "1.0") +
               influence_text("external_shock", 100, 300, "10.0", 25);
    if (name == "hypersensitive")
        return base_text(name, "3.0", "0.9", "0.2");
    throw ConfigError("unknown preset '" + name + "'");
}

ScenarioConfig preset_config(const std::string& name)
{
    return parse_config(preset_text(name));
}

} // namespace csn
