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
#include "csnsim/rng.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "csnsim/errors.hpp"

namespace csn {

namespace {

// Round constants of the 4x64 network: two odd multipliers plus the Weyl
// key schedule increments (golden ratio and sqrt(3)-1 fractional bits).
constexpr std::uint64_t kMul0 = 0xD2E7470EE14C6C93ull;
constexpr std::uint64_t kMul1 = 0xCA5A826395121157ull;
constexpr std::uint64_t kWeyl0 = 0x9E3779B97F4A7C15ull;
constexpr std::uint64_t kWeyl1 = 0xBB67AE8584CAA73Bull;

inline void mulhilo(std::uint64_t a, std::uint64_t b,
                    std::uint64_t& hi, std::uint64_t& lo)
{
    unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
    hi = static_cast<std::uint64_t>(p >> 64);
    lo = static_cast<std::uint64_t>(p);
}

} // namespace

std::array<std::uint64_t, 4> philox4x64(std::array<std::uint64_t, 4> c,
                                        std::array<std::uint64_t, 2> key)
{
    for (int round = 0; round < 10; ++round) {
        std::uint64_t hi0, lo0, hi1, lo1;
        mulhilo(kMul0, c[0], hi0, lo0);
        mulhilo(kMul1, c[2], hi1, lo1);
        c = {hi1 ^ c[1] ^ key[0], lo1, hi0 ^ c[3] ^ key[1], lo0};
        key[0] += kWeyl0;
        key[1] += kWeyl1;
    }
    return c;
}

namespace {

// 128-layer ziggurat for the standard normal. Rather than hardcoding the
// published layer constants, the right tail edge R is solved at startup by
// bisection on the closure residual of the layer recurrence; this keeps the
// table exact to double precision by construction.
struct ZigguratTable {
    static constexpr int kLayers = 128;
    double x[kLayers + 1];   // x[0] = virtual width of the base strip
    double y[kLayers + 1];   // y[i] = exp(-x[i]^2/2); y[kLayers] = 1
    double r;                // tail threshold

    ZigguratTable()
    {
        // The residual falls from +1 (edge too close, layers overshoot the
        // peak) to -1 (edge too far out) as rr grows, so bisect accordingly.
        double lo = 3.0, hi = 4.0;
        for (int it = 0; it < 200; ++it) {
            double mid = 0.5 * (lo + hi);
            if (closure_residual(mid) > 0.0)
                lo = mid;
            else
                hi = mid;
        }
        r = 0.5 * (lo + hi);
        build(r);
        double resid = y[kLayers - 1] + box_area(r) / x[kLayers - 1] - 1.0;
        if (std::abs(resid) > 1e-9)
            throw RuntimeError("ziggurat table failed to close: residual "
                               + std::to_string(resid));
    }

    // Area of each box given tail edge rr: base strip plus the tail.
    static double box_area(double rr)
    {
        double f = std::exp(-0.5 * rr * rr);
        double tail = std::sqrt(std::atan(1.0) * 2.0) * std::erfc(rr / std::sqrt(2.0));
        return rr * f + tail;
    }

    // Runs the layer recurrence upward; returns (final density level) - 1.
    // Positive means rr is too large (layers overshoot the peak).
    static double closure_residual(double rr)
    {
        double v = box_area(rr);
        double xi = rr;
        double yi = std::exp(-0.5 * rr * rr);
        for (int i = 2; i <= kLayers; ++i) {
            double ynext = yi + v / xi;
            if (ynext >= 1.0)
                return (i == kLayers) ? ynext - 1.0 : 1.0;
            xi = std::sqrt(-2.0 * std::log(ynext));
            yi = ynext;
        }
        return yi - 1.0;
    }

    void build(double rr)
    {
        double v = box_area(rr);
        x[1] = rr;
        y[1] = std::exp(-0.5 * rr * rr);
        x[0] = v / y[1];
        y[0] = 0.0;
        for (int i = 2; i < kLayers; ++i) {
            y[i] = y[i - 1] + v / x[i - 1];
            x[i] = std::sqrt(-2.0 * std::log(y[i]));
        }
        x[kLayers] = 0.0;
        y[kLayers] = 1.0;
    }
};

const ZigguratTable& zig()
{
    static const ZigguratTable table;
    return table;
}

double normal_tail(Stream& s, double r)
{
    // Exponential-majorant tail sampler: exact for the region beyond r.
    for (;;) {
        double x = -std::log(uniform01_open(s)) / r;
        double y = -std::log(uniform01_open(s));
        if (y + y >= x * x)
            return r + x;
    }
}

} // namespace

double normal01(Stream& s)
{
    const ZigguratTable& t = zig();
    for (;;) {
        std::uint64_t bits = s.next_u64();
        int i = static_cast<int>(bits & 127u);
        double sign = (bits & 128u) ? -1.0 : 1.0;
        double u = static_cast<double>(bits >> 11) * 0x1.0p-53;
        double z = u * t.x[i];
        if (z < t.x[i + 1])
            return sign * z;   // strictly inside the layer rectangle
        if (i == 0)
            return sign * normal_tail(s, t.r);
        double yv = t.y[i] + uniform01(s) * (t.y[i + 1] - t.y[i]);
        if (yv < std::exp(-0.5 * z * z))
            return sign * z;
    }
}

double shifted_lognormal(Stream& s, double a, double b, double sigma)
{
    return a + b * std::exp(sigma * normal01(s));
}

double shifted_lognormal_in(Stream& s, double a, double b, double sigma,
                            double lo, double hi)
{
    constexpr int kMaxTries = 100000;
    for (int i = 0; i < kMaxTries; ++i) {
        double x = shifted_lognormal(s, a, b, sigma);
        if (x >= lo && x <= hi)
            return x;
    }
    throw RuntimeError("shifted_lognormal_in: rejection bound exceeded (region ["
                       + std::to_string(lo) + ", " + std::to_string(hi) + "])");
}

double truncated_exponential(Stream& s, double rate, double lo, double hi)
{
    if (!(hi >= lo))
        throw RuntimeError("truncated_exponential: empty support");
    if (rate < 0.0)
        throw RuntimeError("truncated_exponential: negative rate");
    double width = hi - lo;
    double u = uniform01(s);
    if (rate * width < 1e-12)
        return lo + u * width;
    // Inverse CDF: x = lo - log(1 - u*(1 - e^{-rate*width})) / rate,
    // written with expm1/log1p for small rate*width.
    return lo - std::log1p(u * std::expm1(-rate * width)) / rate;
}

double truncated_exponential_mean(double rate, double lo, double hi)
{
    double width = hi - lo;
    if (rate * width < 1e-12)
        return lo + 0.5 * width;
    double e = std::expm1(-rate * width);   // e^{-rw} - 1, negative
    return lo + 1.0 / rate + width * (1.0 + e) / e;
}

std::vector<std::int32_t> weighted_sample_without_replacement(
    Stream& s, std::span<const double> weights, std::size_t k)
{
    struct Keyed {
        double key;
        std::int32_t idx;
    };
    std::vector<Keyed> keyed;
    keyed.reserve(weights.size());
    std::size_t positive = 0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        double w = weights[i];
        // One draw per item regardless of weight, so stream consumption does
        // not depend on the weight values.
        double e = -std::log(uniform01_open(s));
        if (w < 0.0)
            throw RuntimeError("weighted sample: negative weight at index "
                               + std::to_string(i));
        double key;
        if (w > 0.0) {
            ++positive;
            key = e / w;
        } else {
            key = std::numeric_limits<double>::infinity();
        }
        keyed.push_back({key, static_cast<std::int32_t>(i)});
    }
    if (positive < k)
        throw RuntimeError("weighted sample: only " + std::to_string(positive)
                           + " positive weights for k=" + std::to_string(k));

    auto cmp = [](const Keyed& a, const Keyed& b) {
        return a.key < b.key || (a.key == b.key && a.idx < b.idx);
    };
    std::nth_element(keyed.begin(), keyed.begin() + k, keyed.end(), cmp);
    std::sort(keyed.begin(), keyed.begin() + k, cmp);

    std::vector<std::int32_t> out(k);
    for (std::size_t i = 0; i < k; ++i)
        out[i] = keyed[i].idx;
    return out;
}

} // namespace csn
