#ifndef TWINLAB_ALTERNATING_FORMULA_HPP
#define TWINLAB_ALTERNATING_FORMULA_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "twinlab/alternating/patterns.hpp"
#include "twinlab/alternating/rational.hpp"

namespace twinlab::alternating {

/**
 * Truncated double sum over 3 <= k1, k2 <= max_k:
 *
 *   2 * sum_{p1, p2} C(k1-p1+p2-1, k1-p1) * C(k2-p2+p1-1, k2-p2)
 *                    * 2 c(p1,k1,true) c(p2,k2,false) / (k1+k2-1)!
 *
 * Its limit is the probability that a given position is sloped and both of
 * its nearest sloped neighbours lie on the same side of it (about 0.2017).
 * Terms sharing a block length k1+k2-1 are accumulated over a common
 * factorial denominator before the exact rational addition.
 */
inline ExactRational second_round_probability(const PatternCountTable& table, std::uint32_t max_k) {
    if (max_k < 3) throw invalid_parameter("second_round_probability: max_k must be >= 3");
    if (max_k > table.max_k) throw invalid_parameter("second_round_probability: table too short for max_k");
    FactorialTable factorial;
    ExactRational total;
    for (std::uint32_t block = 5; block <= 2 * max_k - 1; ++block) {
        BigInt numerator = 0;
        for (std::uint32_t k1 = 3; k1 <= max_k; ++k1) {
            if (block + 1 < k1 + 3) break;
            const std::uint32_t k2 = block + 1 - k1;
            if (k2 < 3 || k2 > max_k) continue;
            for (std::uint32_t p1 = 1; p1 <= k1; ++p1) {
                const std::uint64_t left = table.at(p1, k1, true);
                if (left == 0) continue;
                for (std::uint32_t p2 = 1; p2 <= k2; ++p2) {
                    const std::uint64_t right = table.at(p2, k2, false);
                    if (right == 0) continue;
                    numerator += binomial(k1 - p1 + p2 - 1, k1 - p1) * binomial(k2 - p2 + p1 - 1, k2 - p2) *
                                 BigInt(left) * BigInt(right) * 4;
                }
            }
        }
        if (numerator != 0) total += ExactRational(numerator, factorial(block));
    }
    return total;
}

inline ExactRational second_round_probability(std::uint32_t max_k, Convention c) {
    return second_round_probability(count_good_dp(max_k, c), max_k);
}

/// Gain of the second round per unit length: each of the two twins collects
/// second-round extrema from one half of the permutation only, so the gain is
/// half the per-position probability above.
inline ExactRational second_round_gain(std::uint32_t max_k, Convention c) {
    return second_round_probability(max_k, c) / ExactRational(2);
}

/// 1/3 + second_round_gain: the resulting lower bound on alpha_n / n.
inline ExactRational lower_bound_constant(std::uint32_t max_k, Convention c) {
    return ExactRational(1, 3) + second_round_gain(max_k, c);
}

struct ConventionResult {
    Convention convention = Convention::text;
    ExactRational probability;  // second_round_probability
    ExactRational gain;         // second_round_gain
    bool reaches_target = false;
};

struct Arbitration {
    std::vector<ConventionResult> results;  // text, appendix
    std::optional<Convention> winner;       // first convention whose gain reaches the target
};

/// Evaluates both conventions and picks the one reproducing the target gain (default 0.0989).
inline Arbitration arbitrate_convention(std::uint32_t max_k, const ExactRational& target = ExactRational(989, 10000)) {
    Arbitration out;
    for (Convention c : {Convention::text, Convention::appendix}) {
        ConventionResult r{c, second_round_probability(max_k, c), {}, false};
        r.gain = r.probability / ExactRational(2);
        r.reaches_target = r.gain >= target;
        if (r.reaches_target && !out.winner) out.winner = c;
        out.results.push_back(std::move(r));
    }
    return out;
}

}  // namespace twinlab::alternating

#endif  // TWINLAB_ALTERNATING_FORMULA_HPP
