#ifndef TWINLAB_WORDS_BOUNDS_HPP
#define TWINLAB_WORDS_BOUNDS_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string_view>

#include "twinlab/errors.hpp"

namespace twinlab::words {

enum class TailSide { upper, lower };

/// The unknown universal constant in the lower-tail bounds defaults to the
/// one-half factor of the final step before it is absorbed into C.
inline constexpr double default_c_lower = 0.5;

/// Parameters of one tail-bound evaluation. For M-bounds `order` is r and
/// `offset` is t; for R-bounds `order` is m and `offset` is u.
struct TailBoundSpec {
    std::uint64_t n = 1;
    std::uint64_t k = 2;
    std::uint64_t order = 2;
    double offset = 0.0;
    double c_lower = default_c_lower;
};

constexpr std::string_view to_string(TailSide side) { return side == TailSide::upper ? "upper" : "lower"; }

/// log n / ((r-1) log k), natural logarithms.
inline double theory_center_M(std::uint64_t n, std::uint64_t k, std::uint64_t r) {
    twinlab::detail::require(n >= 1, "theory_center_M: n must be >= 1");
    twinlab::detail::require(k >= 2, "theory_center_M: k must be >= 2");
    twinlab::detail::require(r >= 2, "theory_center_M: r must be >= 2");
    return std::log(static_cast<double>(n)) / (static_cast<double>(r - 1) * std::log(static_cast<double>(k)));
}

/// Upper side: bound on Pr[M >= center + t], k^{-(r-1)t}.
/// Lower side: bound on Pr[M <= center - t], exp(-C k^{(r-1)(t-1)}).
inline double theory_tail_M(std::uint64_t n, std::uint64_t k, std::uint64_t r, double t, TailSide side,
                            double c_lower = default_c_lower) {
    twinlab::detail::require(n >= 1 && k >= 2 && r >= 2, "theory_tail_M: need n >= 1, k >= 2, r >= 2");
    twinlab::detail::require(t >= 0.0, "theory_tail_M: offset t must be >= 0");
    twinlab::detail::require(c_lower > 0.0, "theory_tail_M: c_lower must be > 0");
    const double logk = std::log(static_cast<double>(k));
    const double rm1 = static_cast<double>(r - 1);
    if (side == TailSide::upper) return std::min(1.0, std::exp(-logk * rm1 * t));
    return std::min(1.0, std::exp(-c_lower * std::exp(logk * rm1 * (t - 1.0))));
}

/// log n / (m log k) + 1.
inline double theory_center_R(std::uint64_t n, std::uint64_t k, std::uint64_t m) {
    twinlab::detail::require(n >= 1, "theory_center_R: n must be >= 1");
    twinlab::detail::require(k >= 2, "theory_center_R: k must be >= 2");
    twinlab::detail::require(m >= 1, "theory_center_R: m must be >= 1");
    return std::log(static_cast<double>(n)) / (static_cast<double>(m) * std::log(static_cast<double>(k))) + 1.0;
}

/// Upper side: k^{-m u}. Lower side: exp(-C k^{(m+1)u} n^{-1/m}).
inline double theory_tail_R(std::uint64_t n, std::uint64_t k, std::uint64_t m, double u, TailSide side,
                            double c_lower = default_c_lower) {
    twinlab::detail::require(n >= 1 && k >= 2 && m >= 1, "theory_tail_R: need n >= 1, k >= 2, m >= 1");
    twinlab::detail::require(u >= 0.0, "theory_tail_R: offset u must be >= 0");
    twinlab::detail::require(c_lower > 0.0, "theory_tail_R: c_lower must be > 0");
    const double logk = std::log(static_cast<double>(k));
    const double md = static_cast<double>(m);
    if (side == TailSide::upper) return std::min(1.0, std::exp(-logk * md * u));
    const double exponent = logk * (md + 1.0) * u - std::log(static_cast<double>(n)) / md;
    return std::min(1.0, std::exp(-c_lower * std::exp(exponent)));
}

inline double theory_tail_M(const TailBoundSpec& spec, TailSide side) {
    return theory_tail_M(spec.n, spec.k, spec.order, spec.offset, side, spec.c_lower);
}

inline double theory_tail_R(const TailBoundSpec& spec, TailSide side) {
    return theory_tail_R(spec.n, spec.k, spec.order, spec.offset, side, spec.c_lower);
}

}  // namespace twinlab::words

#endif  // TWINLAB_WORDS_BOUNDS_HPP
