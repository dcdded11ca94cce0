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
 * Acceptance battery driver: one pass/fail line per criterion, nonzero exit
 * when any criterion fails. Reference ensembles are cached on disk (see
 * accept::cache_dir), so the first run is expensive and later runs are not.
 */
#include "accept.hpp"

#include <chrono>
#include <cstdio>
#include <exception>

int main()
{
    using accept::Verdict;

    struct Row {
        int id;
        const char* title;
        Verdict (*fn)();
    };
    const Row rows[] = {
        {1, "distribution shapes", accept::criterion_1},
        {2, "consensus drift", accept::criterion_2},
        {3, "alignment window", accept::criterion_3},
        {4, "amplification", accept::criterion_4},
        {5, "reframing", accept::criterion_5},
        {6, "turnover", accept::criterion_6},
        {7, "troll persistence", accept::criterion_7},
        {8, "counterspeech", accept::criterion_8},
        {9, "coupling direction", accept::criterion_9},
        {10, "oracle battery", accept::criterion_10},
        {11, "determinism", accept::criterion_11},
    };

    std::printf("acceptance battery: %d reference replicas per ensemble "
                "(%d where the criterion fixes the count), cache %s\n",
                accept::kDeskReplicas, accept::kFixedReplicas,
                accept::cache_dir().c_str());
    int failures = 0;
    const auto t0 = std::chrono::steady_clock::now();
    for (const Row& row : rows) {
        Verdict v;
        try {
            v = row.fn();
        } catch (const std::exception& e) {
            v.pass = false;
            v.detail = std::string("exception: ") + e.what();
        }
        if (!v.pass) ++failures;
        std::printf("[%s] criterion %2d (%s): %s\n", v.pass ? "PASS" : "FAIL",
                    row.id, row.title, v.detail.c_str());
        std::fflush(stdout);
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%d of 11 criteria passed in %.0f s\n", 11 - failures, secs);
    return failures;
}
