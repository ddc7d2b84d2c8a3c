#ifndef TWINLAB_ALTERNATING_SIMULATE_HPP
#define TWINLAB_ALTERNATING_SIMULATE_HPP

#include <algorithm>
#include <cstdint>
#include <vector>

#include "twinlab/alternating/extrema.hpp"
#include "twinlab/errors.hpp"
#include "twinlab/harness/parallel.hpp"
#include "twinlab/harness/rng.hpp"
#include "twinlab/harness/stats.hpp"
#include "twinlab/perms/permutation.hpp"

namespace twinlab::alternating {

/// Two disjoint alternating subsequences, as increasing position lists into the permutation.
struct TwoRoundResult {
    std::vector<std::size_t> a;
    std::vector<std::size_t> b;

    [[nodiscard]] std::size_t size_a() const { return a.size(); }
    [[nodiscard]] std::size_t size_b() const { return b.size(); }
    [[nodiscard]] std::size_t min_size() const { return std::min(a.size(), b.size()); }
};

namespace detail {

struct Rounds {
    std::vector<std::size_t> first;   // extremal positions of the block
    std::vector<std::size_t> second;  // extremal positions of what is left after removing them
};

inline Rounds two_rounds(std::span<const perms::Value> pi, std::size_t begin, std::size_t end) {
    std::vector<perms::Value> block(pi.begin() + static_cast<std::ptrdiff_t>(begin),
                                    pi.begin() + static_cast<std::ptrdiff_t>(end));
    Rounds out;
    const auto ext = extremal_positions<perms::Value>(block);
    std::vector<bool> taken(block.size(), false);
    for (auto i : ext) {
        taken[i] = true;
        out.first.push_back(begin + i);
    }
    std::vector<std::size_t> rest_pos;
    std::vector<perms::Value> rest;
    for (std::size_t i = 0; i < block.size(); ++i)
        if (!taken[i]) {
            rest_pos.push_back(begin + i);
            rest.push_back(block[i]);
        }
    for (auto i : extremal_positions<perms::Value>(rest)) out.second.push_back(rest_pos[i]);
    return out;
}

/// Concatenates two alternating position lists and keeps the extremal
/// positions of the joined value sequence. Only the entries next to the
/// junction can stop being extremal, so at most two are dropped.
inline std::vector<std::size_t> join_alternating(std::span<const perms::Value> pi, const std::vector<std::size_t>& left,
                                                 const std::vector<std::size_t>& right) {
    std::vector<std::size_t> joined(left);
    joined.insert(joined.end(), right.begin(), right.end());
    std::vector<perms::Value> values;
    values.reserve(joined.size());
    for (auto p : joined) values.push_back(pi[p]);
    std::vector<std::size_t> out;
    for (auto i : extremal_positions<perms::Value>(values)) out.push_back(joined[i]);
    return out;
}

}  // namespace detail

/**
 * Splits the permutation at n/2. A takes the extrema of the left half and the
 * extrema of the right half once its own extrema are removed; B takes the
 * symmetric pair. The two lists are disjoint by construction.
 */
inline TwoRoundResult two_round_procedure(const perms::Permutation& p) {
    if (p.size() < 4) throw invalid_parameter("two_round_procedure: n must be >= 4");
    const auto pi = p.values();
    const std::size_t mid = pi.size() / 2;
    const auto left = detail::two_rounds(pi, 0, mid);
    const auto right = detail::two_rounds(pi, mid, pi.size());
    return {detail::join_alternating(pi, left.first, right.second),
            detail::join_alternating(pi, left.second, right.first)};
}

inline TwoRoundResult simulate_two_round_procedure(std::size_t n, std::uint64_t seed) {
    return two_round_procedure(perms::random_permutation(n, seed));
}

/// min(|A|, |B|) for trial i on random_permutation(n, derive_stream(seed, i)).
inline harness::McSummary mc_two_round(std::size_t n, std::size_t trials, std::uint64_t seed, unsigned threads = 1) {
    twinlab::detail::require(trials >= 1, "mc_two_round: trials must be >= 1");
    std::vector<std::int64_t> values(trials);
    harness::parallel_for(trials, threads, [&](std::size_t i) {
        auto rng = harness::derive_stream(seed, i);
        values[i] = static_cast<std::int64_t>(two_round_procedure(perms::random_permutation(n, rng)).min_size());
    });
    return harness::summarize(std::span<const std::int64_t>(values));
}

/// count_extrema for trial i on random_permutation(n, derive_stream(seed, i)).
inline harness::McSummary mc_extrema(std::size_t n, std::size_t trials, std::uint64_t seed, unsigned threads = 1) {
    twinlab::detail::require(trials >= 1 && n >= 1, "mc_extrema: need trials >= 1, n >= 1");
    std::vector<std::int64_t> values(trials);
    harness::parallel_for(trials, threads, [&](std::size_t i) {
        auto rng = harness::derive_stream(seed, i);
        values[i] = static_cast<std::int64_t>(count_extrema(perms::random_permutation(n, rng)));
    });
    return harness::summarize(std::span<const std::int64_t>(values));
}

/// Per-trial counts for the sloped same-side statistic.
struct SlopeCounts {
    std::uint64_t eligible = 0;   // sloped positions with a sloped neighbour on each side
    std::uint64_t same_side = 0;  // ... whose two nearest sloped neighbours are both above or both below
    std::uint64_t window = 0;     // positions strictly between the first and last sloped position
};

inline SlopeCounts sloped_same_side_counts(std::span<const perms::Value> pi) {
    const auto sloped = sloped_positions(pi);
    SlopeCounts c;
    if (sloped.size() < 3) return c;
    c.window = sloped.back() - sloped.front() - 1;
    for (std::size_t j = 1; j + 1 < sloped.size(); ++j) {
        const auto v = pi[sloped[j]];
        const bool left_above = pi[sloped[j - 1]] > v;
        const bool right_above = pi[sloped[j + 1]] > v;
        ++c.eligible;
        if (left_above == right_above) ++c.same_side;
    }
    return c;
}

/**
 * Two normalizations of the same event, pooled over trials:
 *  conditional = same_side / eligible  (given the position is sloped, about 0.605)
 *  joint       = same_side / window    (per position, comparable to second_round_probability)
 *  gain        = joint / 2             (comparable to second_round_gain)
 * Positions lacking a sloped neighbour on either side are excluded throughout.
 */
struct SlopeEstimate {
    double conditional = 0.0;
    double joint = 0.0;
    double gain = 0.0;
    harness::McSummary per_trial_joint;  // for standard errors
    std::uint64_t eligible = 0;
    std::uint64_t same_side = 0;
    std::uint64_t window = 0;
};

inline SlopeEstimate mc_sloped_same_side(std::size_t n, std::size_t trials, std::uint64_t seed, unsigned threads = 1) {
    twinlab::detail::require(n >= 10, "mc_sloped_same_side: n must be >= 10");
    twinlab::detail::require(trials >= 1, "mc_sloped_same_side: trials must be >= 1");
    std::vector<SlopeCounts> counts(trials);
    harness::parallel_for(trials, threads, [&](std::size_t i) {
        auto rng = harness::derive_stream(seed, i);
        counts[i] = sloped_same_side_counts(perms::random_permutation(n, rng).values());
    });
    SlopeEstimate est;
    std::vector<double> joint;
    for (const auto& c : counts) {
        est.eligible += c.eligible;
        est.same_side += c.same_side;
        est.window += c.window;
        joint.push_back(c.window ? static_cast<double>(c.same_side) / static_cast<double>(c.window) : 0.0);
    }
    if (est.eligible) est.conditional = static_cast<double>(est.same_side) / static_cast<double>(est.eligible);
    if (est.window) est.joint = static_cast<double>(est.same_side) / static_cast<double>(est.window);
    est.gain = est.joint / 2.0;
    est.per_trial_joint = harness::summarize(std::span<const double>(joint));
    return est;
}

}  // namespace twinlab::alternating

#endif  // TWINLAB_ALTERNATING_SIMULATE_HPP
