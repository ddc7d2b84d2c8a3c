#ifndef TWINLAB_PERMS_GREEDY_HPP
#define TWINLAB_PERMS_GREEDY_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "twinlab/errors.hpp"

namespace twinlab::perms {

/// One round of the diagonal matching: the k cells that each give up one point, ascending.
using GreedyRound = std::vector<std::size_t>;

struct GreedyOutcome {
    std::vector<GreedyRound> schedule;
    std::optional<std::size_t> failed_step;  // 0-based round that found fewer than k nonempty cells
    std::string detail;
    [[nodiscard]] bool ok() const { return !failed_step.has_value(); }
};

/// Feasible iff the total is a multiple of k and no cell holds more than total/k.
inline bool greedy_feasible(std::span<const std::size_t> counts, std::size_t k) {
    const std::size_t total = std::accumulate(counts.begin(), counts.end(), std::size_t{0});
    if (k == 0 || total % k != 0) return false;
    return std::all_of(counts.begin(), counts.end(), [&](std::size_t c) { return c * k <= total; });
}

/**
 * Repeatedly take the k cells with the most remaining points (ties to the
 * lowest index) and remove one point from each. Stops with failed_step set
 * when fewer than k cells are nonempty.
 */
inline GreedyOutcome greedy_diagonal_match(std::span<const std::size_t> cell_counts, std::size_t k) {
    twinlab::detail::require(k >= 1, "greedy_diagonal_match: k must be >= 1");
    const std::size_t total = std::accumulate(cell_counts.begin(), cell_counts.end(), std::size_t{0});
    twinlab::detail::require(total % k == 0, "greedy_diagonal_match: total count must be divisible by k");
    std::vector<std::size_t> left(cell_counts.begin(), cell_counts.end());
    std::vector<std::size_t> order(left.size());
    GreedyOutcome out;
    out.schedule.reserve(total / k);
    for (std::size_t step = 0, remaining = total; remaining > 0; ++step, remaining -= k) {
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return left[a] > left[b]; });
        if (order.size() < k || left[order[k - 1]] == 0) {
            out.failed_step = step;
            out.detail = "fewer than " + std::to_string(k) + " nonempty cells with " +
                         std::to_string(remaining) + " points left";
            return out;
        }
        GreedyRound round(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(k));
        std::sort(round.begin(), round.end());
        for (auto c : round) --left[c];
        out.schedule.push_back(std::move(round));
    }
    return out;
}

}  // namespace twinlab::perms

#endif  // TWINLAB_PERMS_GREEDY_HPP
