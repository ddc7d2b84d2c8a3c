#ifndef TWINLAB_HARNESS_STATS_HPP
#define TWINLAB_HARNESS_STATS_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "twinlab/errors.hpp"

namespace twinlab::harness {

struct McSummary {
    std::size_t trials = 0;
    std::vector<double> values;        // in trial order
    double mean = 0.0;
    double stddev = 0.0;               // unbiased; 0 for a single sample
    double min = 0.0;
    double max = 0.0;
    std::map<double, double> empirical_tail;  // threshold -> fraction of samples >= threshold

    [[nodiscard]] double standard_error() const {
        return trials > 0 ? stddev / std::sqrt(static_cast<double>(trials)) : 0.0;
    }
};

/// Fraction of samples >= each threshold.
template <typename T>
std::vector<double> empirical_tail(std::span<const T> samples, std::span<const double> thresholds) {
    twinlab::detail::require(!samples.empty(), "empirical_tail: empty sample");
    std::vector<double> sorted(samples.begin(), samples.end());
    std::sort(sorted.begin(), sorted.end());
    std::vector<double> out;
    out.reserve(thresholds.size());
    const auto total = static_cast<double>(sorted.size());
    for (double threshold : thresholds) {
        const auto first = std::lower_bound(sorted.begin(), sorted.end(), threshold);
        out.push_back(static_cast<double>(sorted.end() - first) / total);
    }
    return out;
}

namespace detail {
__extension__ using int128 = __int128;

inline void fill_tails(McSummary& s, std::span<const double> thresholds) {
    const auto fractions = empirical_tail<double>(s.values, thresholds);
    for (std::size_t i = 0; i < thresholds.size(); ++i) s.empirical_tail[thresholds[i]] = fractions[i];
}
}  // namespace detail

/// Integer statistics: mean and variance are computed exactly in 128-bit
/// arithmetic, so the result does not depend on sample order.
inline McSummary summarize(std::span<const std::int64_t> samples,
                           std::span<const double> thresholds = {}) {
    twinlab::detail::require(!samples.empty(), "summarize: empty sample");
    McSummary s;
    s.trials = samples.size();
    s.values.assign(samples.begin(), samples.end());
    using wide = detail::int128;
    wide sum = 0;
    wide sum_sq = 0;
    std::int64_t lo = samples.front();
    std::int64_t hi = samples.front();
    for (std::int64_t v : samples) {
        sum += v;
        sum_sq += static_cast<wide>(v) * v;
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    const auto n = static_cast<wide>(samples.size());
    s.mean = static_cast<double>(static_cast<long double>(sum) / static_cast<long double>(n));
    if (samples.size() > 1) {
        const wide scaled = n * sum_sq - sum * sum;  // n(n-1) * variance
        s.stddev = std::sqrt(static_cast<double>(static_cast<long double>(scaled) /
                                                 static_cast<long double>(n * (n - 1))));
    }
    s.min = static_cast<double>(lo);
    s.max = static_cast<double>(hi);
    detail::fill_tails(s, thresholds);
    return s;
}

/// Real-valued statistics: accumulation runs over a sorted copy so permuting
/// the input leaves every field except `values` unchanged.
inline McSummary summarize(std::span<const double> samples, std::span<const double> thresholds = {}) {
    twinlab::detail::require(!samples.empty(), "summarize: empty sample");
    McSummary s;
    s.trials = samples.size();
    s.values.assign(samples.begin(), samples.end());
    std::vector<double> sorted(samples.begin(), samples.end());
    std::sort(sorted.begin(), sorted.end());
    long double sum = 0;
    for (double v : sorted) sum += v;
    const auto n = static_cast<long double>(sorted.size());
    const long double mean = sum / n;
    long double ss = 0;
    for (double v : sorted) ss += (v - mean) * (v - mean);
    s.mean = static_cast<double>(mean);
    s.stddev = sorted.size() > 1 ? static_cast<double>(std::sqrt(ss / (n - 1))) : 0.0;
    s.min = sorted.front();
    s.max = sorted.back();
    detail::fill_tails(s, thresholds);
    return s;
}

}  // namespace twinlab::harness

#endif  // TWINLAB_HARNESS_STATS_HPP
