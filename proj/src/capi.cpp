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
#include "csnsim.h"

#include <cstdlib>
#include <cstring>
#include <span>
#include <string>

#include "csnsim/config.hpp"
#include "csnsim/errors.hpp"
#include "csnsim/export.hpp"
#include "csnsim/metrics.hpp"
#include "csnsim/simulation.hpp"
#include "csnsim/version.hpp"

struct csn_config {
    csn::ScenarioConfig cfg;
};

struct csn_result {
    csn::ScenarioConfig cfg;  // resolved configuration the run used
    csn::EnsembleResult ens;
};

namespace {

thread_local std::string g_last_error;

/// Runs fn, translating exceptions into status codes and the thread-local
/// error message. ConfigError maps to CSN_ERR_CONFIG, everything else to
/// CSN_ERR_RUNTIME.
template <typename Fn>
csn_status guard(Fn&& fn)
{
    try {
        fn();
        g_last_error.clear();
        return CSN_OK;
    } catch (const csn::ConfigError& e) {
        g_last_error = e.what();
        return CSN_ERR_CONFIG;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return CSN_ERR_RUNTIME;
    }
}

csn_status config_error(const char* msg)
{
    g_last_error = msg;
    return CSN_ERR_CONFIG;
}

/// Copies a std::string into a malloc'ed buffer for csn_string_free.
char* dup_string(const std::string& s)
{
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out != nullptr) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

csn_status emit_string(const std::string& s, char** out)
{
    *out = dup_string(s);
    if (*out == nullptr) {
        g_last_error = "out of memory";
        return CSN_ERR_RUNTIME;
    }
    return CSN_OK;
}

} // namespace

extern "C" {

const char* csn_version(void) { return csn::kVersion; }

const char* csn_last_error(void) { return g_last_error.c_str(); }

csn_status csn_config_parse(const char* text, csn_config** out)
{
    if (text == nullptr || out == nullptr) return config_error("null argument");
    *out = nullptr;
    return guard([&] { *out = new csn_config{csn::parse_config(text)}; });
}

csn_status csn_config_load(const char* path, csn_config** out)
{
    if (path == nullptr || out == nullptr) return config_error("null argument");
    *out = nullptr;
    return guard([&] { *out = new csn_config{csn::load_config_file(path)}; });
}

csn_status csn_config_from_preset(const char* name, csn_config** out)
{
    if (name == nullptr || out == nullptr) return config_error("null argument");
    *out = nullptr;
    return guard([&] { *out = new csn_config{csn::preset_config(name)}; });
}

csn_status csn_config_set(csn_config* cfg, const char* dotted_key,
                          const char* value)
{
    if (cfg == nullptr || dotted_key == nullptr || value == nullptr)
        return config_error("null argument");
    return guard([&] { csn::set_config_value(cfg->cfg, dotted_key, value); });
}

csn_status csn_config_dump(const csn_config* cfg, char** out_text)
{
    if (cfg == nullptr || out_text == nullptr) return config_error("null argument");
    std::string text;
    const csn_status st = guard([&] { text = csn::canonical_config_text(cfg->cfg); });
    if (st != CSN_OK) return st;
    return emit_string(text, out_text);
}

int csn_config_influence_count(const csn_config* cfg)
{
    if (cfg == nullptr) return 0;
    return static_cast<int>(cfg->cfg.scenario.schedule.size());
}

void csn_config_free(csn_config* cfg) { delete cfg; }

int csn_preset_count(void)
{
    return static_cast<int>(csn::preset_names().size());
}

const char* csn_preset_name(int index)
{
    static const std::vector<std::string> names = csn::preset_names();
    if (index < 0 || index >= static_cast<int>(names.size())) return nullptr;
    return names[static_cast<std::size_t>(index)].c_str();
}

csn_status csn_run(const csn_config* cfg, csn_result** out)
{
    if (cfg == nullptr || out == nullptr) return config_error("null argument");
    *out = nullptr;
    return guard([&] {
        csn::validate_config(cfg->cfg);
        auto* res = new csn_result{cfg->cfg, {}};
        try {
            res->ens = csn::run_configured(cfg->cfg);
        } catch (...) {
            delete res;
            throw;
        }
        *out = res;
    });
}

void csn_result_free(csn_result* res) { delete res; }

int csn_result_horizon(const csn_result* res)
{
    return res == nullptr ? 0 : res->ens.horizon;
}

int csn_result_replicas(const csn_result* res)
{
    return res == nullptr ? 0 : res->ens.n_replicas;
}

int csn_result_metric_count(const csn_result* res)
{
    if (res == nullptr) return 0;
    return static_cast<int>(res->ens.metric_stats.size());
}

const char* csn_result_metric_name(const csn_result* res, int index)
{
    if (res == nullptr || index < 0 ||
        index >= static_cast<int>(csn::metric_names().size()))
        return nullptr;
    return csn::metric_names()[static_cast<std::size_t>(index)].c_str();
}

csn_status csn_result_metric_series(const csn_result* res, const char* metric,
                                    const double** mean, const double** stdev,
                                    int* len)
{
    if (res == nullptr || metric == nullptr || mean == nullptr ||
        stdev == nullptr || len == nullptr)
        return config_error("null argument");
    return guard([&] {
        const int m = csn::metric_index(metric);
        const csn::EnsembleStat& st =
            res->ens.metric_stats[static_cast<std::size_t>(m)];
        *mean = st.mean.data();
        *stdev = st.stdev.data();
        *len = static_cast<int>(st.mean.size());
    });
}

csn_status csn_result_scalar(const csn_result* res, const char* name,
                             double* mean, double* stdev)
{
    if (res == nullptr || name == nullptr || mean == nullptr || stdev == nullptr)
        return config_error("null argument");
    return guard([&] {
        auto it = res->ens.scalar_stats.find(name);
        if (it == res->ens.scalar_stats.end())
            throw csn::RuntimeError("unknown scalar '" + std::string(name) + "'");
        *mean = it->second.mean;
        *stdev = it->second.stdev;
    });
}

csn_status csn_result_export(const csn_result* res, const char* out_dir)
{
    if (res == nullptr || out_dir == nullptr) return config_error("null argument");
    return guard([&] { csn::export_results(res->ens, res->cfg, out_dir); });
}

csn_status csn_sweep(const csn_config* cfg, const char* out_root)
{
    if (cfg == nullptr || out_root == nullptr) return config_error("null argument");
    return guard([&] {
        csn::validate_config(cfg->cfg);
        (void)csn::sweep_and_export(cfg->cfg, out_root);
    });
}

csn_status csn_analyze_ratio(const char* run_dir, const char* baseline_dir,
                             const char* metric, char** out_csv)
{
    if (run_dir == nullptr || baseline_dir == nullptr || metric == nullptr ||
        out_csv == nullptr)
        return config_error("null argument");
    std::string csv;
    const csn_status st = guard(
        [&] { csv = csn::ratio_csv_from_dirs(run_dir, baseline_dir, metric); });
    if (st != CSN_OK) return st;
    return emit_string(csv, out_csv);
}

csn_status csn_analyze_quantile_diff(const char* run_dir, char** out_csv)
{
    if (run_dir == nullptr || out_csv == nullptr) return config_error("null argument");
    std::string csv;
    const csn_status st =
        guard([&] { csv = csn::quantile_diff_csv_from_dir(run_dir); });
    if (st != CSN_OK) return st;
    return emit_string(csv, out_csv);
}

csn_status csn_analyze_denoise(const char* run_dir, const char* metric,
                               double lam, char** out_csv)
{
    if (run_dir == nullptr || metric == nullptr || out_csv == nullptr)
        return config_error("null argument");
    std::string csv;
    const csn_status st =
        guard([&] { csv = csn::denoise_csv_from_dir(run_dir, metric, lam); });
    if (st != CSN_OK) return st;
    return emit_string(csv, out_csv);
}

csn_status csn_analyze_project(const char* run_dir, unsigned long long seed,
                               char** out_csv)
{
    if (run_dir == nullptr || out_csv == nullptr) return config_error("null argument");
    std::string csv;
    const csn_status st =
        guard([&] { csv = csn::trajectory_csv_from_dir(run_dir, seed); });
    if (st != CSN_OK) return st;
    return emit_string(csv, out_csv);
}

csn_status csn_tv_denoise(const double* x, int n, double lam, double* out)
{
    if (x == nullptr || out == nullptr || n < 0) return config_error("null argument");
    return guard([&] {
        const std::vector<double> y =
            csn::tv_denoise(std::span<const double>(x, static_cast<std::size_t>(n)), lam);
        std::memcpy(out, y.data(), y.size() * sizeof(double));
    });
}

void csn_string_free(char* text) { std::free(text); }

} // extern "C"
