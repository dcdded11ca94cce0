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
 *
 * C interface of the collective-semantic-network simulator. All entry points
 * return csn_status; on failure csn_last_error() describes the problem for
 * the calling thread. Handles are opaque and must be released with the
 * matching *_free function. Strings returned through char** outputs must be
 * released with csn_string_free.
 */
#ifndef CSNSIM_H
#define CSNSIM_H

#ifdef __cplusplus
extern "C" {
#endif

typedef struct csn_config csn_config;
typedef struct csn_result csn_result;

/* Mirrors the command-line exit codes. */
typedef enum csn_status {
    CSN_OK = 0,
    CSN_ERR_CONFIG = 2,
    CSN_ERR_RUNTIME = 3
} csn_status;

/* Library semantic version, e.g. "1.0.0". */
const char* csn_version(void);

/* Message of the most recent failure on this thread; empty when none. */
const char* csn_last_error(void);

/* ---- configuration ---- */

/* Parses flat sectioned config text. */
csn_status csn_config_parse(const char* text, csn_config** out);

/* Reads and parses a config file. */
csn_status csn_config_load(const char* path, csn_config** out);

/* Instantiates one of the bundled scenario presets by name. */
csn_status csn_config_from_preset(const char* name, csn_config** out);

/* Overrides one value addressed as "section.key" (influence entries as
 * "influence.<index>.key" with 0-based index). Values use file syntax,
 * including 1-based topic and tier ids. */
csn_status csn_config_set(csn_config* cfg, const char* dotted_key,
                          const char* value);

/* Renders the canonical config text (allocates *out_text). */
csn_status csn_config_dump(const csn_config* cfg, char** out_text);

/* Number of scheduled influence windows in the config. */
int csn_config_influence_count(const csn_config* cfg);

void csn_config_free(csn_config* cfg);

/* Bundled preset enumeration; csn_preset_name returns NULL out of range. */
int csn_preset_count(void);
const char* csn_preset_name(int index);

/* ---- simulation ---- */

/* Runs the configured ensemble (replica count, master seed, worker count,
 * and snapshot cadence all come from the config) and returns aggregated
 * statistics. Deterministic: identical configs give identical results at
 * every parallelism degree. */
csn_status csn_run(const csn_config* cfg, csn_result** out);

void csn_result_free(csn_result* res);

int csn_result_horizon(const csn_result* res);
int csn_result_replicas(const csn_result* res);
int csn_result_metric_count(const csn_result* res);

/* Name of metric 0 <= index < csn_result_metric_count; NULL out of range. */
const char* csn_result_metric_name(const csn_result* res, int index);

/* Per-step ensemble mean and population standard deviation of one metric.
 * The arrays stay owned by the result handle and hold *len doubles. */
csn_status csn_result_metric_series(const csn_result* res, const char* metric,
                                    const double** mean, const double** stdev,
                                    int* len);

/* Whole-run scalar summaries, e.g. "kd_final" or "overflow_incidence". */
csn_status csn_result_scalar(const csn_result* res, const char* name,
                             double* mean, double* stdev);

/* Writes config.ini, metrics.csv, scalars.csv, optional profiles.csv and
 * snapshots/, and manifest.txt under out_dir. Byte-deterministic. */
csn_status csn_result_export(const csn_result* res, const char* out_dir);

/* Runs the config once per point of its [sweep] grid, exporting each run
 * into a subdirectory of out_root. */
csn_status csn_sweep(const csn_config* cfg, const char* out_root);

/* ---- analysis of exported run directories ---- */

/* step,ratio,band table of influenced over baseline ensemble means. */
csn_status csn_analyze_ratio(const char* run_dir, const char* baseline_dir,
                             const char* metric, char** out_csv);

/* step,top_mean,bottom_mean,diff,band table of the similarity-quantile
 * weight gains recorded in the run. */
csn_status csn_analyze_quantile_diff(const char* run_dir, char** out_csv);

/* step,raw,denoised table: total-variation denoised ensemble mean. */
csn_status csn_analyze_denoise(const char* run_dir, const char* metric,
                               double lam, char** out_csv);

/* step,x,y,smoothed_x,smoothed_y planar embedding of the run's mean comment
 * profiles (requires profiles.csv in the run directory). */
csn_status csn_analyze_project(const char* run_dir, unsigned long long seed,
                               char** out_csv);

/* ---- numeric utilities ---- */

/* Exact total-variation denoising of n samples into out (n doubles). */
csn_status csn_tv_denoise(const double* x, int n, double lam, double* out);

void csn_string_free(char* text);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* CSNSIM_H */
