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

#include <span>
#include <string>

namespace csn {

/// 17-significant-digit rendering: round-trips every double exactly.
std::string fmt17(double v);

/// Comma-joined fmt17 values.
std::string fmt17_list(std::span<const double> values);

/// Whole-file read; throws RuntimeError naming the path.
std::string read_file(const std::string& path);

/// Whole-file write (creating parent directories); throws RuntimeError naming
/// the path.
void write_file(const std::string& path, const std::string& content);

} // namespace csn
