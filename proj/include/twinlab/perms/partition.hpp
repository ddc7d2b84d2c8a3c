#ifndef TWINLAB_PERMS_PARTITION_HPP
#define TWINLAB_PERMS_PARTITION_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "twinlab/errors.hpp"
#include "twinlab/perms/geometry.hpp"
#include "twinlab/perms/greedy.hpp"
#include "twinlab/perms/points.hpp"

namespace twinlab::perms {

enum class FailureKind : std::uint8_t { geometry_infeasible, claim_violated, matching_shortfall, verification };

constexpr const char* to_string(FailureKind k) {
    switch (k) {
        case FailureKind::geometry_infeasible: return "geometry-infeasible";
        case FailureKind::claim_violated: return "claim-condition-violated";
        case FailureKind::matching_shortfall: return "matching-shortfall";
        case FailureKind::verification: return "verification-failed";
    }
    return "?";
}

struct PartitionFailure {
    FailureKind kind = FailureKind::matching_shortfall;
    std::string label;   // violated claim or failing stage
    std::string detail;

    [[nodiscard]] std::string message() const {
        return std::string(to_string(kind)) + "(" + label + "): " + detail;
    }
};

enum class ClassSource : std::uint8_t { singleton, corner, diagonal };

constexpr const char* to_string(ClassSource s) {
    switch (s) {
        case ClassSource::singleton: return "singleton";
        case ClassSource::corner: return "corner";
        case ClassSource::diagonal: return "diagonal";
    }
    return "?";
}

/// Where a class came from: a corner triangle point with its strip, or a diagonal S_d.
struct ClassOrigin {
    ClassSource source = ClassSource::singleton;
    Strip strip = Strip::right;
    std::ptrdiff_t diagonal = 0;
};

/// Classes of point indices, each listed in increasing x.
struct AscendingPartition {
    std::vector<std::vector<std::size_t>> classes;
    std::vector<ClassOrigin> origins;
};

struct PartitionResult {
    std::optional<AscendingPartition> partition;
    std::optional<PartitionFailure> failure;
    [[nodiscard]] bool ok() const { return partition.has_value(); }
};

/// Classes cover every index exactly once, all have size k, and all are ascending.
inline bool verify_partition(const PointSet& ps, const AscendingPartition& part, std::size_t k) {
    if (k == 0) return false;
    std::vector<bool> seen(ps.size(), false);
    std::size_t covered = 0;
    for (const auto& cls : part.classes) {
        if (cls.size() != k) return false;
        for (auto i : cls) {
            if (i >= ps.size() || seen[i]) return false;
            seen[i] = true;
            ++covered;
        }
        if (!is_ascending(ps, cls)) return false;
    }
    return covered == ps.size();
}

namespace detail {

inline PartitionResult fail(FailureKind kind, std::string label, std::string detail) {
    return {std::nullopt, PartitionFailure{kind, std::move(label), std::move(detail)}};
}

inline std::string fmt(double v) {
    std::ostringstream os;
    os.precision(4);
    os << v;
    return os.str();
}

inline std::string cell_name(Cell c) {
    return "(" + std::to_string(c.i) + "," + std::to_string(c.j) + ")";
}

/// Mutable bookkeeping shared by the matching stages.
class PartitionState {
public:
    PartitionState(const Geometry& g, std::vector<Point> pts) : g_(g), pts_(std::move(pts)) {}

    PartitionResult run() {
        classify();
        if (auto f = check_claims()) return *f;
        if (auto f = assign_triangles()) return *f;
        if (auto f = pin_restricted()) return *f;
        allocate_intake();
        if (auto f = fix_residues()) return *f;
        return build();
    }

private:
    struct Piece {
        TallPiece where;
        std::vector<std::size_t> points;  // ascending index
        std::size_t taken = 0;
        std::vector<std::size_t> pinned;  // specific points reserved for restricted triangle points
    };
    struct Assignment {
        std::size_t point;
        bool restricted;
        std::size_t pinned_point = 0;
    };

    const Geometry& g_;
    std::vector<Point> pts_;
    std::vector<Region> region_;
    std::vector<std::vector<std::size_t>> cell_points_;          // by i * t + j
    std::vector<std::size_t> intake_;                            // taken points per cell
    std::array<std::vector<std::vector<Piece>>, 4> pieces_;      // [strip][tall][piece]
    std::array<std::vector<Assignment>, 4> assigned_;            // triangle points per strip

    [[nodiscard]] std::size_t index(Cell c) const { return c.i * g_.t + c.j; }
    [[nodiscard]] std::size_t k() const { return g_.k; }

    void classify() {
        const std::size_t t = g_.t;
        region_.resize(pts_.size());
        cell_points_.assign(t * t, {});
        intake_.assign(t * t, 0);
        for (Strip s : all_strips) {
            auto& tall = pieces_[static_cast<std::size_t>(s)];
            tall.clear();
            for (std::size_t q = 0; q + 1 < k(); ++q) {
                std::vector<Piece> row;
                for (const auto& tp : g_.tall_pieces(s, q)) row.push_back({tp, {}, 0, {}});
                tall.push_back(std::move(row));
            }
        }
        for (std::size_t i = 0; i < pts_.size(); ++i) {
            const Point p = pts_[i];
            const Cell c = g_.cell_of(p);
            region_[i] = g_.region_of(p);
            cell_points_[index(c)].push_back(i);
            if (auto slot = g_.slot_of(p)) {
                for (auto& piece : pieces_[static_cast<std::size_t>(slot->strip)][slot->tall])
                    if (piece.where.cell == c) {
                        piece.points.push_back(i);
                        break;
                    }
            }
        }
    }

    [[nodiscard]] Point canonical(Strip s, std::size_t i) const { return g_.to_canonical(s, pts_[i]); }

    [[nodiscard]] std::size_t tall_count(Strip s, std::size_t q) const {
        std::size_t c = 0;
        for (const auto& piece : pieces_[static_cast<std::size_t>(s)][q]) c += piece.points.size();
        return c;
    }

    [[nodiscard]] std::size_t capacity(Strip s) const {
        std::size_t cap = std::numeric_limits<std::size_t>::max();
        for (std::size_t q = 0; q + 1 < k(); ++q) cap = std::min(cap, tall_count(s, q));
        return cap;
    }

    std::optional<PartitionResult> check_claims() const {
        const auto& tol = g_.claims;
        const double e_cell = g_.expected_cell_count();
        for (std::size_t i = 0; i < g_.t; ++i)
            for (std::size_t j = 0; j < g_.t; ++j) {
                const auto c = static_cast<double>(cell_points_[i * g_.t + j].size());
                if (c > (1.0 + tol.cell_count) * e_cell || c < (1.0 - tol.cell_count) * e_cell)
                    return fail(FailureKind::claim_violated, "claim1-cell-count",
                                "cell " + cell_name({i, j}) + " holds " + fmt(c) + " points, expected " +
                                    fmt(e_cell));
            }

        std::array<std::size_t, 4> halves{};  // A, B, C, D
        for (std::size_t i = 0; i < pts_.size(); ++i) {
            if (region_[i] == Region::diagonal) continue;
            ++halves[static_cast<std::size_t>(g_.preferred_strip(region_[i], pts_[i]))];
        }
        const double e_half = g_.expected_half_count();
        for (Strip s : all_strips) {
            const auto c = static_cast<double>(halves[static_cast<std::size_t>(s)]);
            if (c > (1.0 + tol.triangle_count) * e_half)
                return fail(FailureKind::claim_violated, "claim2-triangle-count",
                            std::string("half served by the ") + to_string(s) + " strip holds " + fmt(c) +
                                " points, expected " + fmt(e_half));
        }

        for (Region r : {Region::bottom_right_triangle, Region::top_left_triangle}) {
            const auto [s1, s2] = Geometry::strips_of(r);
            const std::size_t need = halves[static_cast<std::size_t>(s1)] + halves[static_cast<std::size_t>(s2)];
            const std::size_t cap = capacity(s1) + capacity(s2);
            if (need > cap)
                return fail(FailureKind::claim_violated, "claim3-strip-capacity",
                            std::string(to_string(r)) + " holds " + std::to_string(need) +
                                " points but its strips' diagonal tall cells admit only " + std::to_string(cap));
        }

        for (Strip s : all_strips)
            for (std::size_t q = 0; q + 1 < k(); ++q)
                for (const auto& piece : pieces_[static_cast<std::size_t>(s)][q]) {
                    const double expect = piece.where.area / g_.side();
                    const auto c = static_cast<double>(piece.points.size());
                    if (c < (1.0 - tol.strip_cell) * expect)
                        return fail(FailureKind::claim_violated, "claim4-strip-cell",
                                    std::string(to_string(s)) + " tall cell " + std::to_string(q) + " meets cell " +
                                        cell_name(piece.where.cell) + " in " + fmt(c) + " points, expected " +
                                        fmt(expect));
                }

        if (tol.require_empty_corners)
            for (std::size_t i = 0; i < pts_.size(); ++i)
                if (g_.in_corner_square(pts_[i]))
                    return fail(FailureKind::claim_violated, "claim5-corner-empty",
                                "point " + std::to_string(i) + " lies in a " + fmt(g_.w) + " x " + fmt(g_.w) +
                                    " corner square");
        return std::nullopt;
    }

    /// Restricted: the point sits over sub-column 0 and can only take tall-cell-0 points to its right.
    enum class Fit : std::uint8_t { none, free, restricted };

    [[nodiscard]] Fit fit(Strip s, std::size_t i) const {
        if (g_.clear_of_strip(s, pts_[i])) return Fit::free;
        if (!g_.claims.require_empty_corners &&
            canonical(s, i).x < g_.side() - g_.w + g_.sub_width())
            return Fit::restricted;
        return Fit::none;
    }

    std::optional<PartitionResult> assign_triangles() {
        for (Region r : {Region::bottom_right_triangle, Region::top_left_triangle}) {
            const auto strips = Geometry::strips_of(r);
            std::array<std::size_t, 2> cap{capacity(strips[0]), capacity(strips[1])};
            std::array<std::size_t, 2> load{};
            struct Option {
                std::size_t side;
                bool restricted;
            };
            std::vector<std::pair<std::size_t, std::vector<Option>>> todo;
            for (std::size_t i = 0; i < pts_.size(); ++i) {
                if (region_[i] != r) continue;
                const std::size_t pref = g_.preferred_strip(r, pts_[i]) == strips[0] ? 0 : 1;
                std::vector<Option> opts;
                for (std::size_t side : {pref, 1 - pref})
                    if (fit(strips[side], i) == Fit::free) opts.push_back({side, false});
                std::vector<Option> tight;
                for (std::size_t side : {pref, 1 - pref})
                    if (fit(strips[side], i) == Fit::restricted) tight.push_back({side, true});
                // more room to the right of the point first
                std::stable_sort(tight.begin(), tight.end(), [&](const Option& a, const Option& b) {
                    return canonical(strips[a.side], i).x < canonical(strips[b.side], i).x;
                });
                opts.insert(opts.end(), tight.begin(), tight.end());
                if (opts.empty())
                    return fail(FailureKind::matching_shortfall, "triangle-assignment",
                                "point " + std::to_string(i) + " cannot start a chain in either strip");
                todo.emplace_back(i, std::move(opts));
            }
            // forced points first, then the rest in index order
            std::stable_partition(todo.begin(), todo.end(), [](const auto& e) { return e.second.size() == 1; });
            for (const auto& [i, opts] : todo) {
                bool placed = false;
                for (const auto& o : opts) {
                    if (load[o.side] >= cap[o.side]) continue;
                    ++load[o.side];
                    assigned_[static_cast<std::size_t>(strips[o.side])].push_back({i, o.restricted});
                    placed = true;
                    break;
                }
                if (!placed)
                    return fail(FailureKind::matching_shortfall, "triangle-assignment",
                                "no strip has a free chain for point " + std::to_string(i));
            }
        }
        return std::nullopt;
    }

    [[nodiscard]] std::size_t unmatched(Cell c) const {
        return cell_points_[index(c)].size() - intake_[index(c)];
    }

    /// T_d - k max_c u_c; the greedy succeeds on S_d exactly when this is >= 0 and T_d = 0 mod k.
    [[nodiscard]] long long margin(std::ptrdiff_t d) const {
        long long total = 0;
        long long top = 0;
        for (const auto& c : g_.diagonal_cells(d)) {
            const auto u = static_cast<long long>(unmatched(c));
            total += u;
            top = std::max(top, u);
        }
        return total - static_cast<long long>(k()) * top;
    }

    [[nodiscard]] std::size_t diagonal_total(std::ptrdiff_t d) const {
        std::size_t total = 0;
        for (const auto& c : g_.diagonal_cells(d)) total += unmatched(c);
        return total;
    }

    void take(Piece& piece, long long delta) {
        piece.taken = static_cast<std::size_t>(static_cast<long long>(piece.taken) + delta);
        intake_[index(piece.where.cell)] =
            static_cast<std::size_t>(static_cast<long long>(intake_[index(piece.where.cell)]) + delta);
    }

    /// Ranking of a piece for its next intake unit: the change of its diagonal's margin,
    /// capped at 2k so healthy diagonals tie, then the lowest fill ratio.
    struct Preference {
        long long gain = 0;
        double fill = 0.0;
        [[nodiscard]] bool better_than(const Preference& o) const {
            return gain != o.gain ? gain > o.gain : fill < o.fill;
        }
    };

    Preference preference(Piece& piece) {
        const long long cap = 2 * static_cast<long long>(k());
        const long long before = std::min(margin(piece.where.diagonal), cap);
        take(piece, 1);
        const long long after = std::min(margin(piece.where.diagonal), cap);
        take(piece, -1);
        return {after - before, static_cast<double>(piece.taken + 1) / static_cast<double>(piece.points.size())};
    }

    std::optional<PartitionResult> pin_restricted() {
        for (Strip s : all_strips) {
            auto& list = assigned_[static_cast<std::size_t>(s)];
            std::vector<std::size_t> order;
            for (std::size_t a = 0; a < list.size(); ++a)
                if (list[a].restricted) order.push_back(a);
            // candidate sets are nested, so the most constrained point chooses first
            std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
                return canonical(s, list[a].point).x > canonical(s, list[b].point).x;
            });
            auto& tall0 = pieces_[static_cast<std::size_t>(s)][0];
            for (std::size_t a : order) {
                const double x0 = canonical(s, list[a].point).x;
                std::optional<std::pair<std::size_t, std::size_t>> best;  // piece, point
                Preference best_pref{};
                for (std::size_t pc = 0; pc < tall0.size(); ++pc) {
                    auto& piece = tall0[pc];
                    if (piece.taken >= piece.points.size()) continue;
                    const Preference pref = preference(piece);
                    for (auto cand : piece.points) {
                        if (canonical(s, cand).x <= x0) continue;
                        if (std::find(piece.pinned.begin(), piece.pinned.end(), cand) != piece.pinned.end()) continue;
                        if (!best || pref.better_than(best_pref)) {
                            best = std::pair{pc, cand};
                            best_pref = pref;
                        }
                        break;  // points are in index order; the first free one represents the piece
                    }
                }
                if (!best)
                    return fail(FailureKind::matching_shortfall, "corner-pinning",
                                "no point right of triangle point " + std::to_string(list[a].point) + " in the " +
                                    to_string(s) + " strip");
                auto& piece = tall0[best->first];
                piece.pinned.push_back(best->second);
                take(piece, 1);
                list[a].pinned_point = best->second;
            }
        }
        return std::nullopt;
    }

    /// Spread each tall cell's intake so every piece keeps room both ways for the residue step.
    void allocate_intake() {
        for (Strip s : all_strips) {
            const std::size_t load = assigned_[static_cast<std::size_t>(s)].size();
            for (std::size_t q = 0; q + 1 < k(); ++q) {
                auto& tall = pieces_[static_cast<std::size_t>(s)][q];
                std::size_t already = 0;
                for (const auto& piece : tall) already += piece.taken;
                for (std::size_t unit = already; unit < load; ++unit) {
                    std::size_t best = tall.size();
                    Preference best_pref{};
                    for (std::size_t pc = 0; pc < tall.size(); ++pc) {
                        if (tall[pc].taken >= tall[pc].points.size()) continue;
                        const Preference pref = preference(tall[pc]);
                        if (best == tall.size() || pref.better_than(best_pref)) {
                            best = pc;
                            best_pref = pref;
                        }
                    }
                    // capacity was checked when assigning, so some piece always has room
                    take(tall[best], 1);
                }
            }
        }
    }

    struct UnitMove {
        Piece* from;
        Piece* to;
    };

    void apply(const UnitMove& m, long long sign = 1) {
        take(*m.from, -sign);
        take(*m.to, sign);
    }

    /// Best single-unit shift between S_d and a lower diagonal inside one tall cell;
    /// release = true moves intake off S_d.
    std::optional<UnitMove> best_unit_move(std::ptrdiff_t d, bool release) {
        std::optional<UnitMove> best;
        long long best_score = std::numeric_limits<long long>::min();
        for (Strip s : all_strips)
            for (auto& tall : pieces_[static_cast<std::size_t>(s)])
                for (auto& on_d : tall) {
                    if (on_d.where.diagonal != d) continue;
                    for (auto& lower : tall) {
                        if (lower.where.diagonal >= d) continue;
                        const UnitMove m = release ? UnitMove{&on_d, &lower} : UnitMove{&lower, &on_d};
                        if (m.from->taken <= m.from->pinned.size() || m.to->taken >= m.to->points.size()) continue;
                        apply(m);
                        const long long score = std::min(margin(d), margin(lower.where.diagonal));
                        apply(m, -1);
                        if (score > best_score) {
                            best_score = score;
                            best = m;
                        }
                    }
                }
        return best;
    }

    /// Make every |S_d cap U| a multiple of k, sweeping d from the top diagonal down. Intake
    /// moves inside one tall cell between S_d and a lower diagonal, which is not fixed yet:
    /// either k - rho units leave S_d or rho units join it, whichever leaves the larger margin.
    std::optional<PartitionResult> fix_residues() {
        const auto dmax = g_.max_diagonal();
        for (std::ptrdiff_t d = dmax; d > -dmax; --d) {
            const std::size_t rho = diagonal_total(d) % k();
            if (rho == 0) continue;
            std::optional<std::vector<UnitMove>> chosen;
            long long chosen_score = std::numeric_limits<long long>::min();
            for (bool release : {true, false}) {
                std::vector<UnitMove> log;
                const std::size_t units = release ? k() - rho : rho;
                while (log.size() < units) {
                    const auto m = best_unit_move(d, release);
                    if (!m) break;
                    apply(*m);
                    log.push_back(*m);
                }
                long long score = std::numeric_limits<long long>::min();
                if (log.size() == units) {
                    score = margin(d);
                    for (const auto& m : log) score = std::min(score, margin(m.from->where.diagonal == d ? m.to->where.diagonal : m.from->where.diagonal));
                }
                for (auto it = log.rbegin(); it != log.rend(); ++it) apply(*it, -1);
                if (log.size() == units && score > chosen_score) {
                    chosen_score = score;
                    chosen = std::move(log);
                }
            }
            if (!chosen)
                return fail(FailureKind::matching_shortfall, "residue-fix",
                            "cannot make diagonal " + std::to_string(d) + " a multiple of " +
                                std::to_string(k()) + " (residue " + std::to_string(rho) + ")");
            for (const auto& m : *chosen) apply(m);
        }
        if (diagonal_total(-dmax) % k() != 0)
            return fail(FailureKind::matching_shortfall, "residue-fix",
                        "last diagonal left with residue " + std::to_string(diagonal_total(-dmax) % k()));
        return std::nullopt;
    }

    PartitionResult build() {
        AscendingPartition part;
        std::vector<bool> used(pts_.size(), false);
        auto sort_by_x = [this](std::vector<std::size_t>& cls) {
            std::sort(cls.begin(), cls.end(), [this](std::size_t a, std::size_t b) { return pts_[a].x < pts_[b].x; });
        };

        for (Strip s : all_strips) {
            const auto si = static_cast<std::size_t>(s);
            const auto& list = assigned_[si];
            std::vector<std::vector<std::size_t>> classes(list.size());
            for (std::size_t a = 0; a < list.size(); ++a) classes[a].push_back(list[a].point);
            for (std::size_t q = 0; q + 1 < k(); ++q) {
                std::vector<std::size_t> pool;  // unpinned picks of this tall cell
                for (auto& piece : pieces_[si][q]) {
                    for (auto p : piece.pinned) used[p] = true;
                    std::size_t want = piece.taken - piece.pinned.size();
                    for (auto p : piece.points) {
                        if (want == 0) break;
                        if (std::find(piece.pinned.begin(), piece.pinned.end(), p) != piece.pinned.end()) continue;
                        pool.push_back(p);
                        used[p] = true;
                        --want;
                    }
                }
                std::size_t next = 0;
                for (std::size_t a = 0; a < list.size(); ++a) {
                    if (q == 0 && list[a].restricted) {
                        classes[a].push_back(list[a].pinned_point);
                    } else {
                        classes[a].push_back(pool[next++]);
                    }
                }
            }
            for (std::size_t a = 0; a < list.size(); ++a) {
                used[list[a].point] = true;
                sort_by_x(classes[a]);
                part.classes.push_back(std::move(classes[a]));
                part.origins.push_back({ClassSource::corner, s, 0});
            }
        }

        const auto dmax = g_.max_diagonal();
        for (std::ptrdiff_t d = -dmax; d <= dmax; ++d) {
            const auto cells = g_.diagonal_cells(d);
            std::vector<std::vector<std::size_t>> free(cells.size());
            std::vector<std::size_t> counts(cells.size());
            for (std::size_t c = 0; c < cells.size(); ++c) {
                for (auto p : cell_points_[index(cells[c])])
                    if (!used[p]) free[c].push_back(p);
                counts[c] = free[c].size();
            }
            const auto outcome = greedy_diagonal_match(counts, k());
            if (!outcome.ok())
                return fail(FailureKind::matching_shortfall, "diagonal-greedy",
                            "diagonal " + std::to_string(d) + ", step " + std::to_string(*outcome.failed_step) +
                                ": " + outcome.detail);
            std::vector<std::size_t> cursor(cells.size(), 0);
            for (const auto& round : outcome.schedule) {
                std::vector<std::size_t> cls;
                for (auto c : round) cls.push_back(free[c][cursor[c]++]);
                sort_by_x(cls);
                part.classes.push_back(std::move(cls));
                part.origins.push_back({ClassSource::diagonal, Strip::right, d});
            }
        }

        PointSet scaled(pts_, g_.side());
        if (!verify_partition(scaled, part, k()))
            return fail(FailureKind::verification, "verify", "assembled classes failed verification");
        return {std::move(part), std::nullopt};
    }
};

inline std::vector<Point> scaled_points(const PointSet& ps, double side) {
    std::vector<Point> pts(ps.points().begin(), ps.points().end());
    if (ps.side() != side && ps.side() > 0.0) {
        const double f = side / ps.side();
        for (auto& p : pts) p = {std::min(side, p.x * f), std::min(side, p.y * f)};
    }
    return pts;
}

inline AscendingPartition singletons(std::size_t n) {
    AscendingPartition part;
    for (std::size_t i = 0; i < n; ++i) {
        part.classes.push_back({i});
        part.origins.push_back({ClassSource::singleton, Strip::right, 0});
    }
    return part;
}

}  // namespace detail

/**
 * Partition n = r k points into r ascending k-sets following the grid
 * construction: classify, check the finite-n claim conditions, match corner
 * triangle points into the edge rectangles, fix diagonal residues mod k,
 * greedily match each diagonal, verify. Failures are returned, never thrown;
 * a returned partition has passed verify_partition.
 */
inline PartitionResult ascending_partition(const PointSet& ps, std::size_t k, const Geometry& geometry) {
    twinlab::detail::require(k >= 1, "ascending_partition: k must be >= 1");
    twinlab::detail::require(ps.size() % k == 0, "ascending_partition: number of points must be a multiple of k");
    if (k == 1) return {detail::singletons(ps.size()), std::nullopt};
    twinlab::detail::require(geometry.n == ps.size() && geometry.k == k, "ascending_partition: geometry planned for other n, k");
    detail::PartitionState state(geometry, detail::scaled_points(ps, geometry.side()));
    return state.run();
}

inline PartitionResult ascending_partition(const PointSet& ps, std::size_t k, const GeometryParams& params = {}) {
    twinlab::detail::require(k >= 1, "ascending_partition: k must be >= 1");
    twinlab::detail::require(ps.size() % k == 0, "ascending_partition: number of points must be a multiple of k");
    if (k == 1) return {detail::singletons(ps.size()), std::nullopt};
    try {
        const Geometry g = plan_geometry(ps.size(), k, params);
        return ascending_partition(ps, k, g);
    } catch (const geometry_infeasible& e) {
        return detail::fail(FailureKind::geometry_infeasible, "plan_geometry", e.what());
    }
}

/// Drop the n mod k rightmost points, rescale the rest to [0, k floor(n/k)]^2
/// and partition them; indices refer to the original point set.
inline PartitionResult partition_prefix(const PointSet& ps, std::size_t k, const GeometryParams& params = {}) {
    twinlab::detail::require(k >= 1, "partition_prefix: k must be >= 1");
    const std::size_t keep = ps.size() - ps.size() % k;
    if (keep == ps.size()) return ascending_partition(ps, k, params);
    auto order = order_by_x(ps);
    order.resize(keep);
    std::sort(order.begin(), order.end());
    const double f = keep == 0 ? 1.0 : static_cast<double>(keep) / ps.side();
    std::vector<Point> kept;
    kept.reserve(keep);
    for (auto i : order) kept.push_back({std::min<double>(keep, ps[i].x * f), std::min<double>(keep, ps[i].y * f)});
    auto result = ascending_partition(PointSet(std::move(kept), static_cast<double>(keep)), k, params);
    if (result.partition)
        for (auto& cls : result.partition->classes)
            for (auto& i : cls) i = order[i];
    return result;
}

}  // namespace twinlab::perms

#endif  // TWINLAB_PERMS_PARTITION_HPP
