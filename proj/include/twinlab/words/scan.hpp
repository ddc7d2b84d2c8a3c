#ifndef TWINLAB_WORDS_SCAN_HPP
#define TWINLAB_WORDS_SCAN_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "twinlab/errors.hpp"
#include "twinlab/words/word.hpp"

namespace twinlab::words {

/// B_i = [W_i == W_{i+m}] for the n - m valid offsets (0-based here).
struct MatchIndicator {
    std::size_t distance = 0;
    std::vector<bool> bits;
};

inline MatchIndicator match_indicator(const Word& word, std::size_t m) {
    if (m < 1) throw invalid_parameter("match_indicator: distance must be >= 1");
    if (m > word.size()) throw invalid_parameter("match_indicator: distance exceeds word length");
    MatchIndicator out{m, std::vector<bool>(word.size() - m)};
    for (std::size_t i = 0; i + m < word.size(); ++i) out.bits[i] = word[i] == word[i + m];
    return out;
}

/// An r-power W[start, start + r*length) with subblock length `length`.
struct PowerWitness {
    std::size_t length = 0;
    std::size_t start = 0;
};

namespace detail {

/// Lowest i >= from such that bit(i..i+window-1) are all true, where bits are
/// defined on [0, len). Scans right-to-left inside each candidate window and
/// never re-reads a bit already known to be true, so the cost is O(len) in
/// the worst case and about len/window reads for sparse matches.
template <typename Bit>
std::optional<std::size_t> find_true_window(Bit&& bit, std::size_t len, std::size_t from, std::size_t window) {
    std::size_t i = from;
    std::size_t known_end = from;  // bits [i, known_end) are known true
    while (i + window <= len) {
        std::size_t j = i + window;
        bool ok = true;
        while (j > known_end) {
            --j;
            if (!bit(j)) {
                ok = false;
                break;
            }
        }
        if (ok) return i;
        known_end = i + window;
        i = j + 1;
    }
    return std::nullopt;
}

inline auto shifted_equal(const Word& word, std::size_t m) {
    const auto s = word.symbols();
    return [s, m](std::size_t i) { return s[i] == s[i + m]; };
}

/// Longest run of true bits in match_indicator(word, m), without materializing it.
inline std::size_t longest_match_run(const Word& word, std::size_t m) {
    const std::size_t len = word.size() - m;
    auto bit = shifted_equal(word, m);
    std::size_t best = 0;
    std::size_t from = 0;
    while (auto start = find_true_window(bit, len, from, best + 1)) {
        std::size_t end = *start + best + 1;
        while (end < len && bit(end)) ++end;
        best = end - *start;
        from = end + 1;
    }
    return best;
}

}  // namespace detail

/**
 * Largest m such that some block of length r*m is r copies of one block of
 * length m, together with the leftmost such block; length 0 when the word has
 * no r-power. For each m in 1..floor(n/r) an r-power of subblock length m
 * starts at i iff B_i..B_{i+(r-1)m-1} are all true.
 *
 * Worst case O(n^2/r) (constant words); random words cost about O(n log n).
 */
inline PowerWitness max_rpower(const Word& word, std::size_t r) {
    if (r < 2) throw invalid_parameter("max_rpower_length: power order r must be >= 2");
    PowerWitness best;
    const std::size_t n = word.size();
    for (std::size_t m = 1; m <= n / r; ++m) {
        auto bit = detail::shifted_equal(word, m);
        if (auto start = detail::find_true_window(bit, n - m, 0, (r - 1) * m)) best = {m, *start};
    }
    return best;
}

inline std::size_t max_rpower_length(const Word& word, std::size_t r) { return max_rpower(word, r).length; }

/// Largest r >= 1 such that the word contains an r-power of subblock length m:
/// 1 + floor(L/m) for L the longest true-run of the match indicator.
inline std::size_t max_power_of_length(const Word& word, std::size_t m) {
    if (m < 1) throw invalid_parameter("max_power_of_length: m must be >= 1");
    if (m > word.size()) throw invalid_parameter("max_power_of_length: m exceeds word length");
    return 1 + detail::longest_match_run(word, m) / m;
}

/// Test oracle: compares all r subblocks for every (start, m) directly.
inline std::size_t brute_force_max_rpower(const Word& word, std::size_t r) {
    if (r < 2) throw invalid_parameter("brute_force_max_rpower: power order r must be >= 2");
    const auto s = word.symbols();
    const std::size_t n = s.size();
    for (std::size_t m = n / r; m >= 1; --m) {
        for (std::size_t start = 0; start + r * m <= n; ++start) {
            bool is_power = true;
            for (std::size_t block = 1; block < r && is_power; ++block)
                for (std::size_t j = 0; j < m; ++j)
                    if (s[start + j] != s[start + block * m + j]) {
                        is_power = false;
                        break;
                    }
            if (is_power) return m;
        }
    }
    return 0;
}

}  // namespace twinlab::words

#endif  // TWINLAB_WORDS_SCAN_HPP
