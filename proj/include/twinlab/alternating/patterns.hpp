#ifndef TWINLAB_ALTERNATING_PATTERNS_HPP
#define TWINLAB_ALTERNATING_PATTERNS_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "twinlab/errors.hpp"

namespace twinlab::alternating {

/**
 * Which reading of the goodness test to apply.
 *
 * text:     p1 < p2 > p3 < ... alternates through p_{k-1}, and p_{k-2}, p_{k-1}, p_k
 *           are monotone.
 * appendix: the pseudocode indexing taken literally (1-based): positions
 *           2..k-2 are peaks at even and valleys at odd indices, and
 *           p_{k-3}, p_{k-2}, p_{k-1} are monotone. p_{k-3} does not exist at
 *           k = 3, so that length falls back to the text reading.
 */
enum class Convention { text, appendix };

constexpr std::string_view to_string(Convention c) { return c == Convention::text ? "text" : "appendix"; }

inline Convention parse_convention(std::string_view s) {
    if (s == "text") return Convention::text;
    if (s == "appendix") return Convention::appendix;
    throw invalid_parameter("unknown convention '" + std::string(s) + "' (expected text|appendix)");
}

struct PatternKey {
    std::uint32_t p1 = 1;
    std::uint32_t k = 3;
    bool x = false;  // p_{k-1} > p1

    friend auto operator<=>(const PatternKey&, const PatternKey&) = default;
};

/// Counts c_{p1,k,X}; absent keys count zero.
struct PatternCountTable {
    std::map<PatternKey, std::uint64_t> counts;
    std::uint32_t max_k = 3;
    Convention convention = Convention::text;

    [[nodiscard]] std::uint64_t at(std::uint32_t p1, std::uint32_t k, bool x) const {
        const auto it = counts.find({p1, k, x});
        return it == counts.end() ? 0 : it->second;
    }

    [[nodiscard]] std::uint64_t total(std::uint32_t k) const {
        std::uint64_t sum = 0;
        for (const auto& [key, c] : counts)
            if (key.k == k) sum += c;
        return sum;
    }

    /// Equality over the full key space (zero entries are not significant).
    [[nodiscard]] bool same_counts(const PatternCountTable& o) const {
        const auto nonzero = [](const PatternCountTable& t) {
            std::map<PatternKey, std::uint64_t> m;
            for (const auto& [key, c] : t.counts)
                if (c != 0) m.emplace(key, c);
            return m;
        };
        return max_k == o.max_k && nonzero(*this) == nonzero(o);
    }

    /// CSV with header `p1,k,x,count`, rows for every key 1 <= p1 <= k, both x.
    [[nodiscard]] std::string to_csv() const {
        std::string out = "p1,k,x,count\n";
        for (std::uint32_t k = 3; k <= max_k; ++k)
            for (std::uint32_t p1 = 1; p1 <= k; ++p1)
                for (bool x : {false, true})
                    out += std::to_string(p1) + "," + std::to_string(k) + "," + (x ? "true" : "false") + "," +
                           std::to_string(at(p1, k, x)) + "\n";
        return out;
    }
};

namespace detail {

// Step j (1-based, 2 <= j <= k) is the comparison p_{j-1} -> p_j.
enum class Dir : std::uint8_t { up, down, any };

struct StepRule {
    Dir dir = Dir::any;
    bool same_as_previous = false;  // direction must repeat step j-1
};

/// Step constraints equivalent to check_good(p, c) && p1 < p2 for |p| = k.
inline std::vector<StepRule> step_rules(std::uint32_t k, Convention c) {
    std::vector<StepRule> rules(k + 1);  // indexed by step j; entries 0, 1 unused
    const auto alternating = [](std::uint32_t j) { return j % 2 == 0 ? Dir::up : Dir::down; };
    if (c == Convention::text || k == 3) {
        for (std::uint32_t j = 2; j + 1 <= k; ++j) rules[j].dir = alternating(j);
        rules[k].same_as_previous = true;
    } else {
        for (std::uint32_t j = 2; j + 1 <= k; ++j) rules[j].dir = alternating(j);
        rules[k - 1].same_as_previous = true;  // p_{k-3}, p_{k-2}, p_{k-1} monotone
    }
    return rules;
}

}  // namespace detail

/// Goodness test on a pattern of distinct values (only relative order matters).
template <typename T>
bool check_good(std::span<const T> p, Convention c) {
    const std::size_t k = p.size();
    if (k < 3) return false;
    // a(i) is the 1-based entry p_i
    const auto a = [&](std::size_t i) { return p[i - 1]; };
    if (c == Convention::text || k == 3) {
        for (std::size_t j = 2; j + 1 <= k; ++j) {
            const bool up = a(j) > a(j - 1);
            if (up != (j % 2 == 0)) return false;
        }
        return (a(k - 2) < a(k - 1) && a(k - 1) < a(k)) || (a(k - 2) > a(k - 1) && a(k - 1) > a(k));
    }
    for (std::size_t i = 2; i + 2 <= k; ++i) {
        if (i % 2 == 0 && !(a(i) > a(i - 1) && a(i) > a(i + 1))) return false;
        if (i % 2 == 1 && !(a(i) < a(i - 1) && a(i) < a(i + 1))) return false;
    }
    return (a(k - 3) < a(k - 2) && a(k - 2) < a(k - 1)) || (a(k - 3) > a(k - 2) && a(k - 2) > a(k - 1));
}

/// CountGood by direct enumeration of every permutation of each length 3..max_k.
inline PatternCountTable count_good_bruteforce(std::uint32_t max_k, Convention c) {
    if (max_k < 3) throw invalid_parameter("count_good_bruteforce: max_k must be >= 3");
    if (max_k > 10) throw invalid_parameter("count_good_bruteforce: max_k > 10 refused (factorial cost)");
    PatternCountTable table{{}, max_k, c};
    for (std::uint32_t k = 3; k <= max_k; ++k) {
        std::vector<std::uint32_t> p(k);
        std::iota(p.begin(), p.end(), 1u);
        do {
            if (p[1] > p[0] && check_good<std::uint32_t>(p, c)) ++table.counts[{p[0], k, p[k - 2] > p[0]}];
        } while (std::next_permutation(p.begin(), p.end()));
    }
    return table;
}

/**
 * Same table as count_good_bruteforce, built by insertion on relative ranks.
 * A prefix of length j is summarized by (rank of its first entry, rank of
 * its last entry, direction of its last step); appending an entry of
 * relative rank v in 1..j+1 bumps every existing rank >= v. The X flag is
 * read off the state of length k-1, since the last insertion cannot swap
 * p1 and p_{k-1}. Cost O(k^4) per length.
 */
inline PatternCountTable count_good_dp(std::uint32_t max_k, Convention c) {
    if (max_k < 3) throw invalid_parameter("count_good_dp: max_k must be >= 3");
    if (max_k > 20) throw invalid_parameter("count_good_dp: max_k > 20 overflows 64-bit counts");
    using detail::Dir;
    PatternCountTable table{{}, max_k, c};
    for (std::uint32_t k = 3; k <= max_k; ++k) {
        const auto rules = detail::step_rules(k, c);
        // state[a][b][d]: a, b in 1..j, d = direction of last step (0 up, 1 down)
        const std::size_t dim = k + 2;
        auto index = [dim](std::size_t a, std::size_t b, std::size_t d) { return (a * dim + b) * 2 + d; };
        std::vector<std::uint64_t> state(dim * dim * 2, 0);
        std::vector<std::uint64_t> next(state.size(), 0);
        state[index(1, 1, 0)] = 1;  // length 1; the direction slot is unused until step 2
        for (std::uint32_t j = 1; j < k; ++j) {
            std::fill(next.begin(), next.end(), 0);
            const auto& rule = rules[j + 1];
            for (std::size_t a = 1; a <= j; ++a)
                for (std::size_t b = 1; b <= j; ++b)
                    for (std::size_t d = 0; d < 2; ++d) {
                        const std::uint64_t count = state[index(a, b, d)];
                        if (count == 0) continue;
                        for (std::size_t v = 1; v <= j + 1; ++v) {
                            const bool up = v > b;
                            if (rule.dir == Dir::up && !up) continue;
                            if (rule.dir == Dir::down && up) continue;
                            if (rule.same_as_previous && j >= 2 && up != (d == 0)) continue;
                            const std::size_t a2 = a >= v ? a + 1 : a;
                            if (j + 1 == k) {
                                table.counts[{static_cast<std::uint32_t>(a2), k, b > a}] += count;
                            } else {
                                next[index(a2, v, up ? 0 : 1)] += count;
                            }
                        }
                    }
            std::swap(state, next);
        }
    }
    std::erase_if(table.counts, [](const auto& kv) { return kv.second == 0; });
    return table;
}

}  // namespace twinlab::alternating

#endif  // TWINLAB_ALTERNATING_PATTERNS_HPP
