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

#include <cstdlib>
#include <set>
#include <sstream>

#include "csnsim/errors.hpp"
#include "csnsim/textio.hpp"

namespace csn {

namespace {

[[noreturn]] void fail(int line, const std::string& msg)
{
    if (line >= 0)
        throw ConfigError("config line " + std::to_string(line) + ": " + msg);
    throw ConfigError(msg);
}

std::string trim(const std::string& s)
{
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double to_double(const std::string& v, int line)
{
    if (v.empty()) fail(line, "empty numeric value");
    char* end = nullptr;
    const double x = std::strtod(v.c_str(), &end);
    if (end != v.c_str() + v.size()) fail(line, "malformed number '" + v + "'");
    return x;
}

long long to_int(const std::string& v, int line)
{
    if (v.empty()) fail(line, "empty integer value");
    char* end = nullptr;
    const long long x = std::strtoll(v.c_str(), &end, 10);
    if (end != v.c_str() + v.size()) fail(line, "malformed integer '" + v + "'");
    return x;
}

std::uint64_t to_u64(const std::string& v, int line)
{
    if (v.empty() || v[0] == '-') fail(line, "malformed unsigned integer '" + v + "'");
    char* end = nullptr;
    const unsigned long long x = std::strtoull(v.c_str(), &end, 10);
    if (end != v.c_str() + v.size()) fail(line, "malformed unsigned integer '" + v + "'");
    return x;
}

bool to_bool(const std::string& v, int line)
{
    if (v == "true" || v == "1") return true;
    if (v == "false" || v == "0") return false;
    fail(line, "malformed boolean '" + v + "' (use true/false)");
}

std::vector<double> to_list(const std::string& v, int line)
{
    std::vector<double> out;
    std::string cur;
    std::istringstream in(v);
    while (std::getline(in, cur, ',')) out.push_back(to_double(trim(cur), line));
    if (out.empty()) fail(line, "empty list value");
    return out;
}

/// 1-based id in the text format, 0-based in memory.
int to_index1(const std::string& v, int line)
{
    const long long x = to_int(v, line);
    if (x < 1) fail(line, "id '" + v + "' must be positive (ids are 1-based)");
    return static_cast<int>(x - 1);
}

InfluenceKind to_kind(const std::string& v, int line)
{
    for (InfluenceKind k :
         {InfluenceKind::alignment, InfluenceKind::amplification, InfluenceKind::reframing,
          InfluenceKind::turnover, InfluenceKind::troll, InfluenceKind::counterspeech,
          InfluenceKind::external_shock})
        if (v == influence_kind_name(k)) return k;
    fail(line, "unknown influence kind '" + v + "'");
}

void apply_kv(ScenarioConfig& cfg, const std::string& sec, const std::string& key,
              const std::string& value, int line, int cur_influence)
{
    ScenarioParams& sp = cfg.scenario;
    ModelParams& mp = sp.model;
    if (sec == "scenario") {
        if (key == "name") cfg.name = value;
        else if (key == "target_topic") sp.target_topic = to_index1(value, line);
        else if (key == "target_tier") sp.target_tier = to_index1(value, line);
        else if (key == "quantile") sp.quantile = to_double(value, line);
        else fail(line, "unknown key '" + key + "' in [scenario]");
    } else if (sec == "model") {
        if (key == "n_topics") mp.n_topics = static_cast<int>(to_int(value, line));
        else if (key == "n_events") mp.n_events = static_cast<int>(to_int(value, line));
        else if (key == "n_tiers") mp.n_tiers = static_cast<int>(to_int(value, line));
        else if (key == "horizon") mp.horizon = static_cast<int>(to_int(value, line));
        else if (key == "lambda_f") mp.lambda_f = to_double(value, line);
        else if (key == "lambda_m") mp.lambda_m = to_double(value, line);
        else if (key == "lambda_e") mp.lambda_e = to_double(value, line);
        else fail(line, "unknown key '" + key + "' in [model]");
    } else if (sec == "init") {
        if (key == "alpha_c") mp.init.alpha_c = to_double(value, line);
        else if (key == "weight_a") mp.init.weight_a = to_double(value, line);
        else if (key == "weight_b") mp.init.weight_b = to_double(value, line);
        else if (key == "weight_s") mp.init.weight_s = to_double(value, line);
        else if (key == "sigma_fp") mp.init.sigma_fp = to_double(value, line);
        else if (key == "sigma_wp") mp.init.sigma_wp = to_double(value, line);
        else fail(line, "unknown key '" + key + "' in [init]");
    } else if (sec == "filter") {
        if (key == "r1") mp.filter.r1 = to_double(value, line);
        else if (key == "r2") mp.filter.r2 = to_double(value, line);
        else if (key == "alpha") mp.filter.alpha = to_list(value, line);
        else fail(line, "unknown key '" + key + "' in [filter]");
    } else if (sec == "comments") {
        if (key == "mass_a") mp.comments.mass_a = to_double(value, line);
        else if (key == "mass_b") mp.comments.mass_b = to_double(value, line);
        else if (key == "mass_s") mp.comments.mass_s = to_double(value, line);
        else if (key == "zero_ratio") mp.comments.zero_ratio = to_list(value, line);
        else if (key == "rate_a") mp.comments.rate_a = to_list(value, line);
        else if (key == "rate_b") mp.comments.rate_b = to_double(value, line);
        else if (key == "c_com") mp.comments.c_com = to_double(value, line);
        else fail(line, "unknown key '" + key + "' in [comments]");
    } else if (sec == "update") {
        if (key == "eta") mp.update.eta = to_double(value, line);
        else if (key == "w_max") mp.update.w_max = to_double(value, line);
        else if (key == "sigma_wn") mp.update.sigma_wn = to_double(value, line);
        else if (key == "literal_hebbian") mp.update.literal_hebbian = to_bool(value, line);
        else fail(line, "unknown key '" + key + "' in [update]");
    } else if (sec == "ensemble") {
        if (key == "replicas") cfg.replicas = static_cast<int>(to_int(value, line));
        else if (key == "seed") cfg.seed = to_u64(value, line);
        else if (key == "snapshot_every") cfg.snapshot_every = static_cast<int>(to_int(value, line));
        else if (key == "jobs") cfg.jobs = static_cast<int>(to_int(value, line));
        else fail(line, "unknown key '" + key + "' in [ensemble]");
    } else if (sec == "influence") {
        if (cur_influence < 0 ||
            cur_influence >= static_cast<int>(sp.schedule.size()))
            fail(line, "influence key outside an [influence] section");
        InfluenceEntry& e = sp.schedule[static_cast<std::size_t>(cur_influence)];
        if (key == "kind") e.kind = to_kind(value, line);
        else if (key == "t_start") e.t_start = static_cast<int>(to_int(value, line));
        else if (key == "t_end") e.t_end = static_cast<int>(to_int(value, line));
        else if (key == "strength") e.strength = to_double(value, line);
        else if (key == "target_topic") e.target_topic = to_index1(value, line);
        else if (key == "target_tier") e.target_tier = to_index1(value, line);
        else fail(line, "unknown key '" + key + "' in [influence]");
    } else if (sec == "sweep") {
        if (key == "lambda_f") cfg.sweep.lambda_f = to_list(value, line);
        else if (key == "lambda_m") cfg.sweep.lambda_m = to_list(value, line);
        else if (key == "strength") cfg.sweep.strength = to_list(value, line);
        else fail(line, "unknown key '" + key + "' in [sweep]");
    } else {
        fail(line, "unknown section [" + sec + "]");
    }
}

const std::set<std::string>& known_sections()
{
    static const std::set<std::string> s{"scenario", "model",    "init",
                                         "filter",   "comments", "update",
                                         "ensemble", "influence", "sweep"};
    return s;
}

} // namespace

ScenarioConfig parse_config(const std::string& text)
{
    ScenarioConfig cfg;
    std::string section;
    int cur_influence = -1;
    int line_no = 0;
    std::set<std::string> seen;
    std::istringstream in(text);
    std::string raw;
    while (std::getline(in, raw)) {
        ++line_no;
        const std::string line = trim(raw);
        if (line.empty() || line[0] == '#' || line[0] == ';') continue;
        if (line.front() == '[') {
            if (line.back() != ']' || line.size() < 3)
                fail(line_no, "malformed section header '" + line + "'");
            section = trim(line.substr(1, line.size() - 2));
            if (!known_sections().count(section))
                fail(line_no, "unknown section [" + section + "]");
            if (section == "influence") {
                cfg.scenario.schedule.emplace_back();
                cur_influence = static_cast<int>(cfg.scenario.schedule.size()) - 1;
            }
            continue;
        }
        const std::size_t eq = line.find('=');
        if (eq == std::string::npos) fail(line_no, "expected 'key = value'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) fail(line_no, "empty key");
        if (section.empty()) fail(line_no, "key before any section header");
        const std::string dup_id =
            section == "influence"
                ? "influence." + std::to_string(cur_influence) + "." + key
                : section + "." + key;
        if (!seen.insert(dup_id).second)
            fail(line_no, "duplicate key '" + key + "' in [" + section + "]");
        apply_kv(cfg, section, key, value, line_no, cur_influence);
    }
    for (std::size_t i = 0; i < cfg.scenario.schedule.size(); ++i)
        if (!seen.count("influence." + std::to_string(i) + ".kind"))
            throw ConfigError("[influence] section " + std::to_string(i + 1) +
                              " is missing the 'kind' key");
    validate_config(cfg);
    return cfg;
}

ScenarioConfig load_config_file(const std::string& path)
{
    std::string text;
    try {
        text = read_file(path);
    } catch (const std::exception& e) {
        throw ConfigError(e.what());
    }
    return parse_config(text);
}

void validate_config(const ScenarioConfig& cfg)
{
    if (cfg.replicas < 1) throw ConfigError("replicas must be positive");
    if (cfg.jobs < 1) throw ConfigError("jobs must be positive");
    if (cfg.snapshot_every < 0) throw ConfigError("snapshot_every must be nonnegative");
    for (double v : cfg.sweep.lambda_f)
        if (v < 0.0) throw ConfigError("sweep lambda_f values must be nonnegative");
    for (double v : cfg.sweep.lambda_m)
        if (v < 0.0 || v > 1.0) throw ConfigError("sweep lambda_m values must lie in [0, 1]");
    for (double v : cfg.sweep.strength)
        if (!(v > 0.0)) throw ConfigError("sweep strength values must be positive");
    validate_scenario(cfg.scenario);
}

std::vector<std::pair<std::string, std::string>> canonical_config_items(const ScenarioConfig& cfg)
{
    const ScenarioParams& sp = cfg.scenario;
    const ModelParams& mp = sp.model;
    std::vector<std::pair<std::string, std::string>> out;
    auto add = [&out](std::string k, std::string v) {
        out.emplace_back(std::move(k), std::move(v));
    };
    add("scenario.name", cfg.name);
    add("scenario.target_topic", std::to_string(sp.target_topic + 1));
    add("scenario.target_tier", std::to_string(sp.target_tier + 1));
    add("scenario.quantile", fmt17(sp.quantile));
    add("model.n_topics", std::to_string(mp.n_topics));
    add("model.n_events", std::to_string(mp.n_events));
    add("model.n_tiers", std::to_string(mp.n_tiers));
    add("model.horizon", std::to_string(mp.horizon));
    add("model.lambda_f", fmt17(mp.lambda_f));
    add("model.lambda_m", fmt17(mp.lambda_m));
    add("model.lambda_e", fmt17(mp.lambda_e));
    add("init.alpha_c", fmt17(mp.init.alpha_c));
    add("init.weight_a", fmt17(mp.init.weight_a));
    add("init.weight_b", fmt17(mp.init.weight_b));
    add("init.weight_s", fmt17(mp.init.weight_s));
    add("init.sigma_fp", fmt17(mp.init.sigma_fp));
    add("init.sigma_wp", fmt17(mp.init.sigma_wp));
    add("filter.r1", fmt17(mp.filter.r1));
    add("filter.r2", fmt17(mp.filter.r2));
    add("filter.alpha", fmt17_list(mp.filter.alpha));
    add("comments.mass_a", fmt17(mp.comments.mass_a));
    add("comments.mass_b", fmt17(mp.comments.mass_b));
    add("comments.mass_s", fmt17(mp.comments.mass_s));
    add("comments.zero_ratio", fmt17_list(mp.comments.zero_ratio));
    add("comments.rate_a", fmt17_list(mp.comments.rate_a));
    add("comments.rate_b", fmt17(mp.comments.rate_b));
    add("comments.c_com", fmt17(mp.comments.c_com));
    add("update.eta", fmt17(mp.update.eta));
    add("update.w_max", fmt17(mp.update.w_max));
    add("update.sigma_wn", fmt17(mp.update.sigma_wn));
    add("update.literal_hebbian", mp.update.literal_hebbian ? "true" : "false");
    add("ensemble.replicas", std::to_string(cfg.replicas));
    add("ensemble.seed", std::to_string(cfg.seed));
    // `jobs` is deliberately absent: the worker count can never affect results,
    // so exported artifacts must be byte-identical across it.
    add("ensemble.snapshot_every", std::to_string(cfg.snapshot_every));
    for (std::size_t i = 0; i < sp.schedule.size(); ++i) {
        const InfluenceEntry& e = sp.schedule[i];
        const std::string pre = "influence." + std::to_string(i) + ".";
        add(pre + "kind", influence_kind_name(e.kind));
        add(pre + "t_start", std::to_string(e.t_start));
        add(pre + "t_end", std::to_string(e.t_end));
        add(pre + "strength", fmt17(e.strength));
        if (e.target_topic >= 0) add(pre + "target_topic", std::to_string(e.target_topic + 1));
        if (e.target_tier >= 0) add(pre + "target_tier", std::to_string(e.target_tier + 1));
    }
    if (!cfg.sweep.lambda_f.empty()) add("sweep.lambda_f", fmt17_list(cfg.sweep.lambda_f));
    if (!cfg.sweep.lambda_m.empty()) add("sweep.lambda_m", fmt17_list(cfg.sweep.lambda_m));
    if (!cfg.sweep.strength.empty()) add("sweep.strength", fmt17_list(cfg.sweep.strength));
    return out;
}

std::string canonical_config_text(const ScenarioConfig& cfg)
{
    std::string out;
    std::string group;
    for (const auto& [path, value] : canonical_config_items(cfg)) {
        const std::size_t dot = path.find('.');
        const std::string section = path.substr(0, dot);
        std::string key = path.substr(dot + 1);
        std::string this_group = section;
        if (section == "influence") {
            const std::size_t dot2 = key.find('.');
            this_group = "influence." + key.substr(0, dot2);
            key = key.substr(dot2 + 1);
        }
        if (this_group != group) {
            if (!out.empty()) out += '\n';
            out += "[" + section + "]\n";
            group = this_group;
        }
        out += key + " = " + value + "\n";
    }
    return out;
}

void set_config_value(ScenarioConfig& cfg, const std::string& dotted_key,
                      const std::string& value)
{
    const std::size_t dot = dotted_key.find('.');
    if (dot == std::string::npos)
        throw ConfigError("key '" + dotted_key + "' must look like section.key");
    const std::string section = dotted_key.substr(0, dot);
    std::string key = dotted_key.substr(dot + 1);
    int cur_influence = -1;
    if (section == "influence") {
        const std::size_t dot2 = key.find('.');
        if (dot2 == std::string::npos)
            throw ConfigError("influence keys look like influence.<index>.<key>");
        const std::string idx = key.substr(0, dot2);
        cur_influence = static_cast<int>(to_int(idx, -1));
        if (cur_influence < 0 ||
            cur_influence >= static_cast<int>(cfg.scenario.schedule.size()))
            throw ConfigError("influence index " + idx + " out of range");
        key = key.substr(dot2 + 1);
    }
    apply_kv(cfg, section, key, trim(value), -1, cur_influence);
}

} // namespace csn
