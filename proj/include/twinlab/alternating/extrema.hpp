#ifndef TWINLAB_ALTERNATING_EXTREMA_HPP
#define TWINLAB_ALTERNATING_EXTREMA_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "twinlab/perms/permutation.hpp"

namespace twinlab::alternating {

// All positions below are 0-based indices into the sequence.

/// Interior local maximum or minimum.
template <typename T>
bool is_interior_extremum(std::span<const T> a, std::size_t i) {
    return (a[i] > a[i - 1] && a[i] > a[i + 1]) || (a[i] < a[i - 1] && a[i] < a[i + 1]);
}

/// Indices of the extremal positions: both endpoints plus every interior local extremum.
template <typename T>
std::vector<std::size_t> extremal_positions(std::span<const T> a) {
    std::vector<std::size_t> out;
    if (a.empty()) return out;
    out.push_back(0);
    for (std::size_t i = 1; i + 1 < a.size(); ++i)
        if (is_interior_extremum(a, i)) out.push_back(i);
    if (a.size() > 1) out.push_back(a.size() - 1);
    return out;
}

/// Number of extremal positions, i.e. the length of a longest alternating subsequence.
template <typename T>
std::size_t count_extrema(std::span<const T> a) {
    if (a.size() <= 2) return a.size();
    std::size_t count = 2;
    for (std::size_t i = 1; i + 1 < a.size(); ++i) count += is_interior_extremum(a, i) ? 1 : 0;
    return count;
}

inline std::size_t count_extrema(const perms::Permutation& p) { return count_extrema(p.values()); }

/// Interior positions whose three-term window is strictly monotone. Endpoints are never sloped.
template <typename T>
std::vector<std::size_t> sloped_positions(std::span<const T> a) {
    std::vector<std::size_t> out;
    for (std::size_t i = 1; i + 1 < a.size(); ++i)
        if ((a[i - 1] < a[i] && a[i] < a[i + 1]) || (a[i - 1] > a[i] && a[i] > a[i + 1])) out.push_back(i);
    return out;
}

inline std::vector<std::size_t> sloped_positions(const perms::Permutation& p) { return sloped_positions(p.values()); }

/// Strict up-down alternation of consecutive differences, in either starting direction.
template <typename T>
bool is_alternating(std::span<const T> a) {
    for (std::size_t i = 1; i + 1 < a.size(); ++i)
        if (!is_interior_extremum(a, i)) return false;
    for (std::size_t i = 1; i < a.size(); ++i)
        if (a[i] == a[i - 1]) return false;
    return true;
}

}  // namespace twinlab::alternating

#endif  // TWINLAB_ALTERNATING_EXTREMA_HPP
