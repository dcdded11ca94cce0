// Shared statistical helpers for the test suites. These are intentionally
// independent implementations (oracles), not calls back into the library.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "csnsim/rng.hpp"

namespace testutil {

inline double normal_cdf(double x)
{
    return 0.5 * std::erfc(-x / std::sqrt(2.0));
}

/// One-sample Kolmogorov-Smirnov statistic against an analytic CDF.
inline double ks_statistic(std::vector<double> xs,
                           const std::function<double(double)>& cdf)
{
    std::sort(xs.begin(), xs.end());
    double d = 0.0;
    const double n = static_cast<double>(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
        double f = cdf(xs[i]);
        d = std::max(d, std::abs(f - static_cast<double>(i) / n));
        d = std::max(d, std::abs(static_cast<double>(i + 1) / n - f));
    }
    return d;
}

/// Two-sample Kolmogorov-Smirnov statistic.
inline double ks_two_sample(std::vector<double> a, std::vector<double> b)
{
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    double d = 0.0;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] <= b[j])
            ++i;
        else
            ++j;
        double fa = static_cast<double>(i) / static_cast<double>(a.size());
        double fb = static_cast<double>(j) / static_cast<double>(b.size());
        d = std::max(d, std::abs(fa - fb));
    }
    return d;
}

struct Moments {
    double mean = 0, var = 0, skew = 0, kurt = 0;
};

inline Moments moments(std::span<const double> xs)
{
    Moments m;
    const double n = static_cast<double>(xs.size());
    for (double x : xs)
        m.mean += x;
    m.mean /= n;
    double s2 = 0, s3 = 0, s4 = 0;
    for (double x : xs) {
        double d = x - m.mean;
        s2 += d * d;
        s3 += d * d * d;
        s4 += d * d * d * d;
    }
    m.var = s2 / n;
    double sd = std::sqrt(m.var);
    m.skew = (s3 / n) / (sd * sd * sd);
    m.kurt = (s4 / n) / (m.var * m.var);
    return m;
}

inline double sample_median(std::vector<double> xs)
{
    std::size_t mid = xs.size() / 2;
    std::nth_element(xs.begin(), xs.begin() + mid, xs.end());
    double hi = xs[mid];
    if (xs.size() % 2 == 1)
        return hi;
    std::nth_element(xs.begin(), xs.begin() + mid - 1, xs.begin() + mid);
    return 0.5 * (hi + xs[mid - 1]);
}

/// Independent reference normal sampler (Box-Muller) driven by a library
/// stream; used to cross-check the production ziggurat sampler.
class BoxMullerRef {
public:
    explicit BoxMullerRef(csn::Stream s) : s_(s) {}

    double next()
    {
        if (have_) {
            have_ = false;
            return cached_;
        }
        double u1 = csn::uniform01_open(s_);
        double u2 = csn::uniform01(s_);
        double r = std::sqrt(-2.0 * std::log(u1));
        double a = 2.0 * std::acos(-1.0) * u2;
        cached_ = r * std::sin(a);
        have_ = true;
        return r * std::cos(a);
    }

private:
    csn::Stream s_;
    bool have_ = false;
    double cached_ = 0.0;
};

inline std::vector<double> draw_many(csn::Stream& s, std::size_t n,
                                     const std::function<double(csn::Stream&)>& f)
{
    std::vector<double> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        out.push_back(f(s));
    return out;
}

} // namespace testutil
