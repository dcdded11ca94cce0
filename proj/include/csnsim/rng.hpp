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

#include <array>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace csn {

/// 64-bit FNV-1a hash, used to turn stream labels into key material.
constexpr std::uint64_t fnv1a64(std::string_view s) noexcept
{
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

/// One round-key application of the 4x64 counter bijection (10 rounds,
/// Philox-style multiply/xor network). Exposed for the unit tests.
std::array<std::uint64_t, 4> philox4x64(std::array<std::uint64_t, 4> counter,
                                        std::array<std::uint64_t, 2> key);

/// A deterministic random stream identified by (master_seed, replica, label).
///
/// Streams are counter-based: draws are pure functions of the identifying
/// triple and the draw index, so replicas can run in any order or in parallel
/// and still produce identical sequences. Distinct labels give statistically
/// independent streams for the same replica.
class Stream {
public:
    Stream(std::uint64_t master_seed, std::uint64_t replica, std::string_view label)
        : key_{master_seed, fnv1a64(label)}, replica_(replica) {}

    std::uint64_t next_u64()
    {
        if (pos_ == 4) {
            buf_ = philox4x64({block_++, replica_, 0, 0}, key_);
            pos_ = 0;
        }
        return buf_[pos_++];
    }

    std::uint64_t replica() const noexcept { return replica_; }

private:
    std::array<std::uint64_t, 2> key_;
    std::uint64_t replica_;
    std::uint64_t block_ = 0;
    std::array<std::uint64_t, 4> buf_{};
    int pos_ = 4;
};

inline Stream derive_substream(std::uint64_t master_seed, std::uint64_t replica,
                               std::string_view label)
{
    return Stream(master_seed, replica, label);
}

/// Uniform double in [0, 1), 53-bit resolution.
inline double uniform01(Stream& s)
{
    return static_cast<double>(s.next_u64() >> 11) * 0x1.0p-53;
}

/// Uniform double in (0, 1]; safe to pass through log().
inline double uniform01_open(Stream& s)
{
    return static_cast<double>((s.next_u64() >> 11) + 1) * 0x1.0p-53;
}

/// Standard normal draw (ziggurat rejection, exact distribution).
double normal01(Stream& s);

/// Shifted log-normal draw x = a + b*exp(s*Z), Z ~ N(0,1). Median is a+b.
double shifted_lognormal(Stream& s, double a, double b, double sigma);

/// Shifted log-normal conditioned on [lo, hi] by rejection.
/// Throws if the acceptance region is never hit within the retry bound.
double shifted_lognormal_in(Stream& s, double a, double b, double sigma,
                            double lo, double hi);

/// Exponential draw with the given rate truncated to [lo, hi], via inverse
/// CDF (no rejection). rate == 0 degenerates to uniform on [lo, hi].
double truncated_exponential(Stream& s, double rate, double lo, double hi);

/// Closed-form mean of the truncated exponential (test oracle companion).
double truncated_exponential_mean(double rate, double lo, double hi);

/// Weighted sampling of k items without replacement, probability proportional
/// to weight at each sequential draw (exponential-key method). Returns indices
/// in draw order. Zero-weight items are never selected; negative weights and
/// an insufficient number of positive weights are errors.
std::vector<std::int32_t> weighted_sample_without_replacement(
    Stream& s, std::span<const double> weights, std::size_t k);

} // namespace csn
