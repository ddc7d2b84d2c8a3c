#ifndef TWINLAB_PERMS_GEOMETRY_HPP
#define TWINLAB_PERMS_GEOMETRY_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "twinlab/errors.hpp"
#include "twinlab/perms/points.hpp"

namespace twinlab::perms {

/// plan_geometry cannot build a grid for these parameters; what() names the constraint.
class geometry_infeasible : public invalid_parameter {
public:
    using invalid_parameter::invalid_parameter;
};

/// Finite-n cutoffs for the asymptotic conditions checked before matching.
/// A relative tolerance of infinity switches a check off.
struct ClaimTolerances {
    double cell_count = 0.5;      // (1) |S_ij| within tol * n/t^2 of n/t^2
    double triangle_count = 0.5;  // (2) |X| <= (1 + tol) E|X| for each triangle half X
    double strip_cell = 0.5;      // (4) |S_ij cap X'_diag| >= (1 - tol) of its expectation
    bool require_empty_corners = true;  // (5) corner squares empty
};

struct GeometryParams {
    double c_t = 1.0;
    double c_w = 1.0;
    ClaimTolerances claims{};
};

/**
 * Constants tuned for n around 10^3 and k = 2, where the asymptotic defaults
 * almost never pass the claim checks: wider strips, cutoffs at twice the
 * expectation, and corner-square points matched inside the strip instead of
 * forbidden.
 */
inline GeometryParams desk_params() {
    GeometryParams p;
    p.c_t = 1.0;
    p.c_w = 3.0;
    p.claims.cell_count = 1.0;
    p.claims.triangle_count = 1.0;
    p.claims.strip_cell = 1.0;
    p.claims.require_empty_corners = false;
    return p;
}

/**
 * Edge rectangles. Each is handled in a canonical frame where it is the right
 * rectangle [n-w, n] x [k s, n-w) serving the bottom-right triangle.
 * to_canonical() is an involution, keeps ascending sets ascending, maps the
 * triangle a strip serves onto the bottom-right triangle, and maps grid
 * diagonal d to d (right, bottom) or -d (top, left).
 *
 *   right  (A'):  (x, y)
 *   bottom (B'):  (n - y, n - x)
 *   top    (C'):  (y, x)
 *   left   (D'):  (n - x, n - y)
 */
enum class Strip : std::uint8_t { right = 0, bottom = 1, top = 2, left = 3 };

inline constexpr std::array<Strip, 4> all_strips{Strip::right, Strip::bottom, Strip::top, Strip::left};

constexpr const char* to_string(Strip s) {
    switch (s) {
        case Strip::right: return "right";
        case Strip::bottom: return "bottom";
        case Strip::top: return "top";
        case Strip::left: return "left";
    }
    return "?";
}

enum class Region : std::uint8_t { diagonal, bottom_right_triangle, top_left_triangle };

constexpr const char* to_string(Region r) {
    switch (r) {
        case Region::diagonal: return "diagonal";
        case Region::bottom_right_triangle: return "bottom_right_triangle";
        case Region::top_left_triangle: return "top_left_triangle";
    }
    return "?";
}

/// 0-based grid cell: column i from the left, row j from the bottom.
struct Cell {
    std::size_t i = 0;
    std::size_t j = 0;
    [[nodiscard]] std::ptrdiff_t diagonal() const {
        return static_cast<std::ptrdiff_t>(i) - static_cast<std::ptrdiff_t>(j);
    }
    friend bool operator==(const Cell&, const Cell&) = default;
};

/// One grid cell crossed by a diagonal tall cell.
struct TallPiece {
    Cell cell;                // actual (not canonical) grid cell
    std::ptrdiff_t diagonal;  // actual diagonal index
    double area;              // area of the overlap
};

struct StripSlot {
    Strip strip = Strip::right;
    std::size_t tall = 0;  // diagonal tall cell, 0 = nearest the corner
};

struct Geometry {
    std::size_t n = 0;
    std::size_t k = 0;
    std::size_t t = 0;
    double cell_side = 0.0;
    double w = 0.0;
    std::vector<double> row_bounds;  // canonical y-extents of the k-1 tall rows, size k
    ClaimTolerances claims{};

    [[nodiscard]] double side() const { return static_cast<double>(n); }
    [[nodiscard]] double expected_cell_count() const {
        return side() / static_cast<double>(t * t);
    }
    [[nodiscard]] double expected_half_count() const {
        return static_cast<double>(k * (k + 1)) / 4.0 * expected_cell_count();
    }
    [[nodiscard]] double sub_width() const { return w / static_cast<double>(k - 1); }
    /// Diagonals S_d with |d| <= max_diagonal() are matched greedily.
    [[nodiscard]] std::ptrdiff_t max_diagonal() const { return static_cast<std::ptrdiff_t>(t - k - 1); }
    [[nodiscard]] std::size_t diagonal_slot(std::ptrdiff_t d) const {
        return static_cast<std::size_t>(d + max_diagonal());
    }
    [[nodiscard]] std::size_t diagonal_count() const { return 2 * (t - k) - 1; }

    /// Cells of S_d in chain order (increasing column).
    [[nodiscard]] std::vector<Cell> diagonal_cells(std::ptrdiff_t d) const {
        std::vector<Cell> cells;
        for (std::size_t i = 0; i < t; ++i) {
            const std::ptrdiff_t j = static_cast<std::ptrdiff_t>(i) - d;
            if (j >= 0 && j < static_cast<std::ptrdiff_t>(t)) cells.push_back({i, static_cast<std::size_t>(j)});
        }
        return cells;
    }

    [[nodiscard]] Point to_canonical(Strip s, Point p) const {
        const double m = side();
        switch (s) {
            case Strip::right: return p;
            case Strip::bottom: return {m - p.y, m - p.x};
            case Strip::top: return {p.y, p.x};
            case Strip::left: return {m - p.x, m - p.y};
        }
        return p;
    }

    [[nodiscard]] Cell from_canonical(Strip s, Cell c) const {
        switch (s) {
            case Strip::right: return c;
            case Strip::bottom: return {t - 1 - c.j, t - 1 - c.i};
            case Strip::top: return {c.j, c.i};
            case Strip::left: return {t - 1 - c.i, t - 1 - c.j};
        }
        return c;
    }

    [[nodiscard]] std::size_t cell_index(double v) const {
        const auto c = static_cast<std::size_t>(std::max(0.0, std::floor(v / cell_side)));
        return std::min(c, t - 1);
    }
    [[nodiscard]] Cell cell_of(Point p) const { return {cell_index(p.x), cell_index(p.y)}; }

    [[nodiscard]] Region region_of(Point p) const {
        const auto d = cell_of(p).diagonal();
        const auto edge = static_cast<std::ptrdiff_t>(t - k);
        if (d >= edge) return Region::bottom_right_triangle;
        if (d <= -edge) return Region::top_left_triangle;
        return Region::diagonal;
    }

    [[nodiscard]] static std::array<Strip, 2> strips_of(Region r) {
        return r == Region::bottom_right_triangle ? std::array{Strip::right, Strip::bottom}
                                                  : std::array{Strip::top, Strip::left};
    }

    /// Half A or C (x + y > n) goes to the right or top strip, half B or D to the bottom or left.
    [[nodiscard]] Strip preferred_strip(Region r, Point p) const {
        const bool upper = p.x + p.y > side();
        if (r == Region::bottom_right_triangle) return upper ? Strip::right : Strip::bottom;
        return upper ? Strip::top : Strip::left;
    }

    /// Triangle point lies strictly left of the strip in canonical coordinates.
    [[nodiscard]] bool clear_of_strip(Strip s, Point p) const { return to_canonical(s, p).x < side() - w; }

    /// Point of the w x w squares at the bottom-right and top-left corners.
    [[nodiscard]] bool in_corner_square(Point p) const {
        const double m = side();
        return (p.x >= m - w && p.y <= w) || (p.x <= w && p.y >= m - w);
    }

    [[nodiscard]] std::optional<StripSlot> slot_of(Point p) const {
        const double m = side();
        for (Strip s : all_strips) {
            const Point c = to_canonical(s, p);
            if (c.x < m - w || c.y < row_bounds.front() || c.y >= row_bounds.back()) continue;
            const auto column = std::min(static_cast<std::size_t>((c.x - (m - w)) / sub_width()), k - 2);
            const auto row = static_cast<std::size_t>(
                std::upper_bound(row_bounds.begin(), row_bounds.end(), c.y) - row_bounds.begin() - 1);
            if (row == column) return StripSlot{s, row};
            return std::nullopt;
        }
        return std::nullopt;
    }

    /// Canonical rectangle {x0, y0, x1, y1} of diagonal tall cell g.
    [[nodiscard]] std::array<double, 4> tall_cell_rect(std::size_t g) const {
        const double x0 = side() - w + sub_width() * static_cast<double>(g);
        return {x0, row_bounds[g], x0 + sub_width(), row_bounds[g + 1]};
    }

    /// Grid cells crossed by tall cell g of strip s, bottom to top in the canonical frame.
    [[nodiscard]] std::vector<TallPiece> tall_pieces(Strip s, std::size_t g) const {
        const auto rect = tall_cell_rect(g);
        std::vector<TallPiece> out;
        for (std::size_t j = cell_index(rect[1]); j < t; ++j) {
            const double lo = std::max(rect[1], static_cast<double>(j) * cell_side);
            const double hi = std::min(rect[3], static_cast<double>(j + 1) * cell_side);
            if (!(hi > lo)) {
                if (lo >= rect[3]) break;
                continue;  // rounding put the edge just below a grid line
            }
            const Cell actual = from_canonical(s, {t - 1, j});
            out.push_back({actual, actual.diagonal(), (hi - lo) * sub_width()});
        }
        return out;
    }
};

/**
 * t = max(k + 2, round(c_t n^{4/13})), cell side n/t and edge rectangle width
 * w = round(c_w n^{6/13}), kept strictly below one cell side. The k-1 rows of
 * each rectangle run from k n/t to n - w; interior row boundaries sit on the
 * midline of the grid row nearest to even spacing, so neighbouring tall cells
 * cross one common grid cell.
 */
inline Geometry plan_geometry(std::size_t n, std::size_t k, const GeometryParams& params = {}) {
    if (k < 2) throw geometry_infeasible("k >= 2 required for the grid construction");
    if (n == 0 || n % k != 0) throw geometry_infeasible("n must be a positive multiple of k");
    if (!(params.c_t > 0.0) || !(params.c_w > 0.0)) throw invalid_parameter("c_t and c_w must be positive");
    const double nd = static_cast<double>(n);
    Geometry g;
    g.n = n;
    g.k = k;
    g.claims = params.claims;
    const auto scaled = std::llround(params.c_t * std::pow(nd, 4.0 / 13.0));
    g.t = std::max<std::size_t>(k + 2, static_cast<std::size_t>(std::max<long long>(scaled, 0)));
    g.cell_side = nd / static_cast<double>(g.t);
    g.w = static_cast<double>(std::llround(params.c_w * std::pow(nd, 6.0 / 13.0)));
    if (g.w < 1.0) throw geometry_infeasible("w >= 1 violated (w = " + std::to_string(g.w) + ")");
    if (!(g.w < g.cell_side))
        throw geometry_infeasible("w < n/t violated (w = " + std::to_string(g.w) +
                                  ", n/t = " + std::to_string(g.cell_side) + ")");
    if (k >= 3 && g.t < 2 * k - 1)
        throw geometry_infeasible("t >= 2k-1 violated: too few grid rows for k-1 tall cells");

    const double s = g.cell_side;
    const double lo = static_cast<double>(k) * s;
    const double hi = nd - g.w;
    g.row_bounds.push_back(lo);
    std::size_t prev = k - 1;
    for (std::size_t b = 1; b + 1 < k; ++b) {
        const double ideal = lo + (hi - lo) * static_cast<double>(b) / static_cast<double>(k - 1);
        std::size_t j = static_cast<std::size_t>(ideal / s);
        j = std::clamp(j, prev + 1, g.t - 1 - (k - 1 - b));
        g.row_bounds.push_back((static_cast<double>(j) + 0.5) * s);
        prev = j;
    }
    g.row_bounds.push_back(hi);
    return g;
}

}  // namespace twinlab::perms

#endif  // TWINLAB_PERMS_GEOMETRY_HPP
