#ifndef TWINLAB_PERMS_EXPERIMENT_HPP
#define TWINLAB_PERMS_EXPERIMENT_HPP

#include <cmath>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "twinlab/errors.hpp"
#include "twinlab/harness/parallel.hpp"
#include "twinlab/harness/rng.hpp"
#include "twinlab/perms/partition.hpp"

namespace twinlab::perms {

struct SuccessRow {
    std::size_t k = 0;
    std::size_t r = 0;
    std::size_t trials = 0;
    std::size_t successes = 0;
    std::size_t invalid = 0;                     // successes that failed re-verification; must stay 0
    std::map<std::string, std::size_t> failures;  // "kind(label)" -> count

    [[nodiscard]] double rate() const { return trials ? static_cast<double>(successes) / static_cast<double>(trials) : 0.0; }
    [[nodiscard]] double standard_error() const {
        const double p = rate();
        return trials ? std::sqrt(p * (1.0 - p) / static_cast<double>(trials)) : 0.0;
    }
};

/// Trial i of (k, r) runs on stream stream_id_of(k, r, i) of the seed.
inline PointSet partition_trial_points(std::size_t k, std::size_t r, std::size_t trial, std::uint64_t seed) {
    auto rng = harness::derive_stream(seed, harness::stream_id_of(k, r, trial));
    return random_pointset(k * r, rng);
}

/// Empirical success rate of ascending_partition on random point sets of size k r.
inline std::vector<SuccessRow> mc_partition_success(std::size_t k, const std::vector<std::size_t>& r_values,
                                                    std::size_t trials, std::uint64_t seed,
                                                    const GeometryParams& params = {}, unsigned threads = 1) {
    twinlab::detail::require(trials >= 1, "mc_partition_success: trials must be >= 1");
    twinlab::detail::require(k >= 1, "mc_partition_success: k must be >= 1");
    std::vector<SuccessRow> rows;
    for (std::size_t r : r_values) {
        twinlab::detail::require(r >= 1, "mc_partition_success: r must be >= 1");
        std::vector<std::uint8_t> ok(trials, 0);
        std::vector<std::uint8_t> valid(trials, 1);
        std::vector<std::string> why(trials);
        harness::parallel_for(trials, threads, [&](std::size_t i) {
            const PointSet ps = partition_trial_points(k, r, i, seed);
            const auto result = ascending_partition(ps, k, params);
            if (result.partition) {
                ok[i] = 1;
                valid[i] = verify_partition(ps, *result.partition, k) ? 1 : 0;
            } else {
                why[i] = std::string(to_string(result.failure->kind)) + "(" + result.failure->label + ")";
            }
        });
        SuccessRow row{k, r, trials, 0, 0, {}};
        for (std::size_t i = 0; i < trials; ++i) {
            if (ok[i]) {
                ++row.successes;
                if (!valid[i]) ++row.invalid;
            } else {
                ++row.failures[why[i]];
            }
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace twinlab::perms

#endif  // TWINLAB_PERMS_EXPERIMENT_HPP
