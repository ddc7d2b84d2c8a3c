#ifndef TWINLAB_PERMS_BRUTEFORCE_HPP
#define TWINLAB_PERMS_BRUTEFORCE_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include "twinlab/errors.hpp"
#include "twinlab/harness/parallel.hpp"
#include "twinlab/harness/rng.hpp"
#include "twinlab/perms/permutation.hpp"

namespace twinlab::perms {

namespace detail {

/// Backtracking over positions; each position joins an open chain or opens a new one.
/// Dead states (position + open chains) are memoized.
class ChainSearch {
public:
    ChainSearch(std::span<const Value> values, std::size_t k, std::vector<std::size_t> pattern)
        : values_(values), k_(k), r_(values.size() / k), pattern_(std::move(pattern)) {}

    bool run() {
        chains_.clear();
        dead_.clear();
        return step(0);
    }

private:
    std::span<const Value> values_;
    std::size_t k_;
    std::size_t r_;
    std::vector<std::size_t> pattern_;  // relative order every chain must follow
    std::vector<std::vector<Value>> chains_;
    std::set<std::vector<Value>> dead_;

    [[nodiscard]] bool fits(const std::vector<Value>& chain, Value v) const {
        const std::size_t len = chain.size();
        for (std::size_t j = 0; j < len; ++j)
            if ((v > chain[j]) != (pattern_[len] > pattern_[j])) return false;
        return true;
    }

    [[nodiscard]] std::vector<Value> key(std::size_t pos) const {
        std::vector<std::vector<Value>> open;
        for (const auto& c : chains_)
            if (c.size() < k_) open.push_back(c);
        std::sort(open.begin(), open.end());
        std::vector<Value> out{static_cast<Value>(pos), static_cast<Value>(chains_.size())};
        for (const auto& c : open) {
            out.push_back(static_cast<Value>(c.size()));
            out.insert(out.end(), c.begin(), c.end());
        }
        return out;
    }

    bool step(std::size_t pos) {
        if (pos == values_.size()) return true;
        auto state = key(pos);
        if (dead_.contains(state)) return false;
        const Value v = values_[pos];
        for (std::size_t c = 0; c < chains_.size(); ++c) {
            if (chains_[c].size() >= k_ || !fits(chains_[c], v)) continue;
            chains_[c].push_back(v);
            const bool ok = step(pos + 1);
            chains_[c].pop_back();
            if (ok) return true;
        }
        if (chains_.size() < r_) {
            chains_.push_back({v});
            const bool ok = step(pos + 1);
            chains_.pop_back();
            if (ok) return true;
        }
        dead_.insert(std::move(state));
        return false;
    }
};

}  // namespace detail

/**
 * Can the permutation be split into n/k subsequences of length k that are all
 * increasing (require_increasing) or all order-isomorphic to one common
 * pattern? Exponential; intended for n <= 16.
 */
inline bool exists_partition_bruteforce(const Permutation& p, std::size_t k, bool require_increasing) {
    twinlab::detail::require(k >= 1, "exists_partition_bruteforce: k must be >= 1");
    twinlab::detail::require(p.size() % k == 0, "exists_partition_bruteforce: n must be divisible by k");
    twinlab::detail::require(p.size() <= 24, "exists_partition_bruteforce: n > 24 is out of reach");
    if (p.size() == 0 || k == 1) return true;
    std::vector<std::size_t> pattern(k);
    std::iota(pattern.begin(), pattern.end(), std::size_t{0});
    do {
        if (detail::ChainSearch(p.values(), k, pattern).run()) return true;
    } while (!require_increasing && std::next_permutation(pattern.begin(), pattern.end()));
    return false;
}

struct TwinFraction {
    std::size_t r = 0;
    std::size_t k = 0;
    std::uint64_t hits = 0;
    std::uint64_t total = 0;
    bool exhaustive = false;
    [[nodiscard]] double fraction() const { return total ? static_cast<double>(hits) / static_cast<double>(total) : 0.0; }
};

/// Fraction of permutations of [r k] that split as above: all (rk)! when samples == 0, else a seeded sample.
inline TwinFraction tight_twin_fraction(std::size_t r, std::size_t k, bool require_increasing,
                                        std::uint64_t samples, std::uint64_t seed, unsigned threads = 1) {
    twinlab::detail::require(r >= 1 && k >= 1, "tight_twin_fraction: r, k must be >= 1");
    const std::size_t n = r * k;
    TwinFraction out{r, k, 0, 0, samples == 0};
    if (samples == 0) {
        twinlab::detail::require(n <= 10, "tight_twin_fraction: exhaustive count limited to n <= 10");
        std::vector<Value> v(n);
        std::iota(v.begin(), v.end(), Value{1});
        do {
            out.hits += exists_partition_bruteforce(Permutation(v), k, require_increasing) ? 1 : 0;
            ++out.total;
        } while (std::next_permutation(v.begin(), v.end()));
        return out;
    }
    std::vector<std::uint8_t> hit(samples, 0);
    harness::parallel_for(samples, threads, [&](std::size_t i) {
        auto rng = harness::derive_stream(seed, i);
        hit[i] = exists_partition_bruteforce(random_permutation(n, rng), k, require_increasing) ? 1 : 0;
    });
    out.total = samples;
    out.hits = static_cast<std::uint64_t>(std::count(hit.begin(), hit.end(), std::uint8_t{1}));
    return out;
}

}  // namespace twinlab::perms

#endif  // TWINLAB_PERMS_BRUTEFORCE_HPP
