#ifndef TWINLAB_PERMS_IO_HPP
#define TWINLAB_PERMS_IO_HPP

#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "twinlab/errors.hpp"
#include "twinlab/perms/geometry.hpp"
#include "twinlab/perms/partition.hpp"
#include "twinlab/perms/points.hpp"

namespace twinlab::perms {

// Point file format: header line `x,y`, then one `x,y` row per point.
// The square side is the number of points.

inline void write_points_csv(std::ostream& out, const PointSet& ps) {
    std::ostringstream os;
    os.precision(17);
    os << "x,y\n";
    for (const auto& p : ps.points()) os << p.x << ',' << p.y << '\n';
    out << os.str();
}

inline PointSet read_points_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line != "x,y") throw invalid_input("point file: expected header 'x,y'");
    std::vector<Point> pts;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos) throw invalid_input("point file: malformed row '" + line + "'");
        try {
            std::size_t used_x = 0;
            std::size_t used_y = 0;
            const std::string xs = line.substr(0, comma);
            const std::string ys = line.substr(comma + 1);
            const double x = std::stod(xs, &used_x);
            const double y = std::stod(ys, &used_y);
            if (used_x != xs.size() || used_y != ys.size()) throw invalid_input("trailing characters");
            pts.push_back({x, y});
        } catch (const std::exception&) {
            throw invalid_input("point file: malformed row '" + line + "'");
        }
    }
    return PointSet(std::move(pts));
}

/// Classes as a JSON array of index arrays.
inline nlohmann::json partition_json(const AscendingPartition& part) {
    nlohmann::json classes = nlohmann::json::array();
    for (const auto& cls : part.classes) classes.push_back(cls);
    return classes;
}

inline nlohmann::json failure_json(const PartitionFailure& f) {
    return {{"kind", to_string(f.kind)}, {"label", f.label}, {"detail", f.detail}};
}

/**
 * Debug drawing: grid, triangle cells, strip tall cells, points, and each
 * class as a polyline (corner classes red, diagonal classes grey).
 */
inline std::string partition_svg(const PointSet& ps, const Geometry& g, const AscendingPartition* part) {
    const double size = 800.0;
    const double f = size / g.side();
    const double p_scale = g.side() / ps.side();
    auto X = [&](double x) { return x * f; };
    auto Y = [&](double y) { return size - y * f; };
    std::ostringstream os;
    os.precision(6);
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size
       << "\" viewBox=\"0 0 " << size << ' ' << size << "\">\n";
    os << "<rect x=\"0\" y=\"0\" width=\"" << size << "\" height=\"" << size << "\" fill=\"white\" stroke=\"black\"/>\n";
    for (std::size_t i = 0; i < g.t; ++i)
        for (std::size_t j = 0; j < g.t; ++j) {
            const Point mid{(static_cast<double>(i) + 0.5) * g.cell_side, (static_cast<double>(j) + 0.5) * g.cell_side};
            const Region r = g.region_of(mid);
            if (r == Region::diagonal) continue;
            os << "<rect x=\"" << X(static_cast<double>(i) * g.cell_side) << "\" y=\""
               << Y(static_cast<double>(j + 1) * g.cell_side) << "\" width=\"" << g.cell_side * f << "\" height=\""
               << g.cell_side * f << "\" fill=\"" << (r == Region::bottom_right_triangle ? "#fde0c5" : "#c5e3fd")
               << "\"/>\n";
        }
    for (std::size_t i = 1; i < g.t; ++i) {
        const double v = static_cast<double>(i) * g.cell_side * f;
        os << "<line x1=\"" << v << "\" y1=\"0\" x2=\"" << v << "\" y2=\"" << size << "\" stroke=\"#bbb\"/>\n";
        os << "<line x1=\"0\" y1=\"" << v << "\" x2=\"" << size << "\" y2=\"" << v << "\" stroke=\"#bbb\"/>\n";
    }
    for (Strip s : all_strips)
        for (std::size_t q = 0; q + 1 < g.k; ++q) {
            const auto r = g.tall_cell_rect(q);
            // canonical corners back to the plane; every transform is an involution
            const Point a = g.to_canonical(s, {r[0], r[1]});
            const Point b = g.to_canonical(s, {r[2], r[3]});
            os << "<rect x=\"" << X(std::min(a.x, b.x)) << "\" y=\"" << Y(std::max(a.y, b.y)) << "\" width=\""
               << std::abs(b.x - a.x) * f << "\" height=\"" << std::abs(b.y - a.y) * f
               << "\" fill=\"none\" stroke=\"#2a7\" stroke-width=\"1.5\"/>\n";
        }
    if (part)
        for (std::size_t c = 0; c < part->classes.size(); ++c) {
            const bool corner = part->origins[c].source == ClassSource::corner;
            os << "<polyline fill=\"none\" stroke=\"" << (corner ? "#d22" : "#888") << "\" stroke-width=\"1\" points=\"";
            for (auto i : part->classes[c]) os << X(ps[i].x * p_scale) << ',' << Y(ps[i].y * p_scale) << ' ';
            os << "\"/>\n";
        }
    for (const auto& p : ps.points())
        os << "<circle cx=\"" << X(p.x * p_scale) << "\" cy=\"" << Y(p.y * p_scale) << "\" r=\"1.5\" fill=\"black\"/>\n";
    os << "</svg>\n";
    return os.str();
}

}  // namespace twinlab::perms

#endif  // TWINLAB_PERMS_IO_HPP
