#ifndef TWINLAB_PERMS_POINTS_HPP
#define TWINLAB_PERMS_POINTS_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include "twinlab/errors.hpp"
#include "twinlab/harness/rng.hpp"
#include "twinlab/perms/permutation.hpp"

namespace twinlab::perms {

struct Point {
    double x = 0.0;
    double y = 0.0;
    friend bool operator==(const Point&, const Point&) = default;
};

/// Points in the square [0, side]^2 with pairwise distinct x and pairwise distinct y.
class PointSet {
public:
    PointSet() = default;

    /// side defaults to the number of points.
    explicit PointSet(std::vector<Point> points, double side = -1.0)
        : points_(std::move(points)), side_(side < 0 ? static_cast<double>(points_.size()) : side) {
        std::vector<double> xs;
        std::vector<double> ys;
        xs.reserve(points_.size());
        ys.reserve(points_.size());
        for (const auto& p : points_) {
            if (!(p.x >= 0.0 && p.x <= side_ && p.y >= 0.0 && p.y <= side_))
                throw invalid_input("point outside [0, " + std::to_string(side_) + "]^2");
            xs.push_back(p.x);
            ys.push_back(p.y);
        }
        std::sort(xs.begin(), xs.end());
        std::sort(ys.begin(), ys.end());
        if (std::adjacent_find(xs.begin(), xs.end()) != xs.end()) throw invalid_input("duplicate x-coordinate");
        if (std::adjacent_find(ys.begin(), ys.end()) != ys.end()) throw invalid_input("duplicate y-coordinate");
    }

    [[nodiscard]] std::span<const Point> points() const noexcept { return points_; }
    [[nodiscard]] std::size_t size() const noexcept { return points_.size(); }
    [[nodiscard]] double side() const noexcept { return side_; }
    const Point& operator[](std::size_t i) const noexcept { return points_[i]; }

private:
    std::vector<Point> points_;
    double side_ = 0.0;
};

/// n i.i.d. uniform points in (0, n)^2; a point whose x or y collides with an
/// earlier one is redrawn.
inline PointSet random_pointset(std::size_t n, harness::RngStream& rng) {
    if (n < 1) throw invalid_parameter("random_pointset: n must be >= 1");
    const double side = static_cast<double>(n);
    std::vector<Point> pts;
    pts.reserve(n);
    std::unordered_set<double> xs;
    std::unordered_set<double> ys;
    while (pts.size() < n) {
        const Point p{rng.uniform_open01() * side, rng.uniform_open01() * side};
        if (xs.contains(p.x) || ys.contains(p.y)) continue;
        xs.insert(p.x);
        ys.insert(p.y);
        pts.push_back(p);
    }
    return PointSet(std::move(pts), side);
}

inline PointSet random_pointset(std::size_t n, std::uint64_t seed) {
    auto rng = harness::derive_stream(seed, 0);
    return random_pointset(n, rng);
}

/// Point indices in increasing x order.
inline std::vector<std::size_t> order_by_x(const PointSet& ps) {
    std::vector<std::size_t> idx(ps.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return ps[a].x < ps[b].x; });
    return idx;
}

/// Read the points left to right and output the rank of each y-coordinate.
inline Permutation points_to_permutation(const PointSet& ps) {
    const auto by_x = order_by_x(ps);
    std::vector<std::size_t> by_y(ps.size());
    std::iota(by_y.begin(), by_y.end(), std::size_t{0});
    std::sort(by_y.begin(), by_y.end(), [&](std::size_t a, std::size_t b) { return ps[a].y < ps[b].y; });
    std::vector<Value> y_rank(ps.size());
    for (std::size_t r = 0; r < by_y.size(); ++r) y_rank[by_y[r]] = static_cast<Value>(r + 1);
    std::vector<Value> values;
    values.reserve(ps.size());
    for (auto i : by_x) values.push_back(y_rank[i]);
    return Permutation(std::move(values));
}

/// True iff sorting the selected points by x gives strictly increasing y.
inline bool is_ascending(const PointSet& ps, std::span<const std::size_t> indices) {
    std::vector<Point> sel;
    sel.reserve(indices.size());
    for (auto i : indices) {
        if (i >= ps.size()) return false;
        sel.push_back(ps[i]);
    }
    std::sort(sel.begin(), sel.end(), [](const Point& a, const Point& b) { return a.x < b.x; });
    for (std::size_t i = 1; i < sel.size(); ++i)
        if (!(sel[i - 1].y < sel[i].y) || !(sel[i - 1].x < sel[i].x)) return false;
    return true;
}

}  // namespace twinlab::perms

#endif  // TWINLAB_PERMS_POINTS_HPP
