#ifndef TWINLAB_WORDS_EXPERIMENT_HPP
#define TWINLAB_WORDS_EXPERIMENT_HPP

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "twinlab/harness/parallel.hpp"
#include "twinlab/harness/report.hpp"
#include "twinlab/harness/rng.hpp"
#include "twinlab/harness/stats.hpp"
#include "twinlab/words/bounds.hpp"
#include "twinlab/words/scan.hpp"
#include "twinlab/words/word.hpp"

namespace twinlab::words {

struct ExperimentOptions {
    unsigned threads = 1;
    std::vector<double> offsets{1.0, 2.0, 3.0};  // t (or u) values checked against the upper tail bound
    double c_lower = default_c_lower;
    double mean_window = 3.0;  // empirical tolerance on |mean - center|
};

namespace detail {

template <typename Statistic>
std::vector<std::int64_t> run_trials(std::size_t n, std::uint32_t k, std::size_t trials, std::uint64_t seed,
                                     unsigned threads, Statistic&& statistic) {
    twinlab::detail::require(trials >= 1, "experiment: trials must be >= 1");
    std::vector<std::int64_t> values(trials);
    harness::parallel_for(trials, threads, [&](std::size_t i) {
        auto rng = harness::derive_stream(seed, i);
        values[i] = static_cast<std::int64_t>(statistic(random_word(n, k, rng)));
    });
    return values;
}

inline std::vector<double> thresholds_around(double center, const std::vector<double>& offsets) {
    std::vector<double> th{center};
    for (double t : offsets) {
        th.push_back(center + t);
        th.push_back(std::floor(center - t) + 1.0);  // Pr[X <= center - t] = 1 - Pr[X >= this]
    }
    return th;
}

inline std::string offset_key(const char* prefix, double t) {
    std::string v = std::to_string(t);
    v.erase(v.find_last_not_of('0') + 1);
    if (!v.empty() && v.back() == '.') v.pop_back();
    return std::string(prefix) + "[" + v + "]";
}

}  // namespace detail

/// Trial i draws its word from derive_stream(seed, i) and records the maximum r-power length.
inline harness::McSummary mc_experiment_M(std::size_t n, std::uint32_t k, std::size_t r, std::size_t trials,
                                          std::uint64_t seed, const ExperimentOptions& opt = {}) {
    twinlab::detail::require(r >= 2, "mc_experiment_M: r must be >= 2");
    auto values = detail::run_trials(n, k, trials, seed, opt.threads,
                                     [r](const Word& w) { return max_rpower_length(w, r); });
    const double center = n >= 1 ? theory_center_M(n, k, r) : 0.0;
    const auto th = detail::thresholds_around(center, opt.offsets);
    return harness::summarize(std::span<const std::int64_t>(values), th);
}

/// Trial i draws its word from derive_stream(seed, i) and records the maximum power of subblock length m.
inline harness::McSummary mc_experiment_R(std::size_t n, std::uint32_t k, std::size_t m, std::size_t trials,
                                          std::uint64_t seed, const ExperimentOptions& opt = {}) {
    twinlab::detail::require(m >= 1 && m <= n, "mc_experiment_R: need 1 <= m <= n");
    auto values = detail::run_trials(n, k, trials, seed, opt.threads,
                                     [m](const Word& w) { return max_power_of_length(w, m); });
    const auto th = detail::thresholds_around(theory_center_R(n, k, m), opt.offsets);
    return harness::summarize(std::span<const std::int64_t>(values), th);
}

namespace detail {

inline void add_tail_verdicts(harness::ExperimentReport& report, const harness::McSummary& s, const char* stat,
                              double center, const std::vector<double>& offsets, auto&& upper_bound,
                              auto&& lower_bound, double c_lower) {
    for (double t : offsets) {
        const double p_hat = s.empirical_tail.at(center + t);
        const double bound = upper_bound(t);
        const double slack = 3.0 * std::sqrt(p_hat * (1.0 - p_hat) / static_cast<double>(s.trials));
        const auto key = offset_key("upper_tail_bound", t);
        report.theory(key, bound);
        report.theory(offset_key("lower_tail_bound", t), lower_bound(t));
        report.theory(offset_key("lower_tail_threshold", t), std::floor(center - t) + 1.0);
        report.verdict(offset_key("upper_tail", t),
                       {p_hat <= bound + slack, bound + slack - p_hat, stat, key});
    }
    report.theory("c_lower", c_lower);
}

}  // namespace detail

/// Monte Carlo check of the maximum r-power tail bounds and the constant-width mean window.
inline harness::ExperimentReport report_M(std::size_t n, std::uint32_t k, std::size_t r, std::size_t trials,
                                          std::uint64_t seed, const ExperimentOptions& opt = {}) {
    const auto s = mc_experiment_M(n, k, r, trials, seed, opt);
    const double center = theory_center_M(n, k, r);
    harness::ExperimentReport report("words.tails", seed);
    report.param("n", n).param("k", k).param("r", r).param("trials", trials).param("offsets", opt.offsets);
    report.summary("M", s).theory("center", center).theory("mean_window", opt.mean_window);
    detail::add_tail_verdicts(
        report, s, "M", center, opt.offsets,
        [&](double t) { return theory_tail_M(n, k, r, t, TailSide::upper, opt.c_lower); },
        [&](double t) { return theory_tail_M(n, k, r, t, TailSide::lower, opt.c_lower); }, opt.c_lower);
    const double dev = std::abs(s.mean - center);
    report.verdict("mean_window", {dev <= opt.mean_window, opt.mean_window - dev, "M", "center"});
    return report;
}

/// Monte Carlo check of the fixed-length maximum power R: upper tail and one-sided mean offset.
inline harness::ExperimentReport report_R(std::size_t n, std::uint32_t k, std::size_t m, std::size_t trials,
                                          std::uint64_t seed, const ExperimentOptions& opt = {}) {
    const auto s = mc_experiment_R(n, k, m, trials, seed, opt);
    const double center = theory_center_R(n, k, m);
    harness::ExperimentReport report("words.rstat", seed);
    report.param("n", n).param("k", k).param("m", m).param("trials", trials).param("offsets", opt.offsets);
    report.summary("R", s).theory("center", center).theory("mean_window", opt.mean_window);
    report.theory("mean_offset_bound", 1.0 / (static_cast<double>(m) * std::log(static_cast<double>(k))));
    detail::add_tail_verdicts(
        report, s, "R", center, opt.offsets,
        [&](double u) { return theory_tail_R(n, k, m, u, TailSide::upper, opt.c_lower); },
        [&](double u) { return theory_tail_R(n, k, m, u, TailSide::lower, opt.c_lower); }, opt.c_lower);
    const double offset = s.mean - center;
    report.verdict("mean_window", {offset <= opt.mean_window, opt.mean_window - offset, "R", "center"});
    return report;
}

}  // namespace twinlab::words

#endif  // TWINLAB_WORDS_EXPERIMENT_HPP
