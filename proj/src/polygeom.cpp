#include "mammo/polygeom.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "json.hpp"
#include "mammo/format.hpp"

namespace mammo {

namespace {
constexpr double kAreaEpsilon = 1e-12;
} // namespace

Polygon polygon_from_extrema(const SignatureExtrema& extrema, const Centroid& centroid) {
    if (extrema.points.size() < 3)
        throw DegenerateError("polygon_from_extrema: need at least 3 extrema, have " +
                              std::to_string(extrema.points.size()));
    Polygon poly;
    poly.vertices.reserve(extrema.points.size());
    for (const auto& e : extrema.points)
        poly.vertices.push_back(polar_to_cartesian(e.r, e.theta, centroid));
    if (!is_simple(poly))
        throw DegenerateError("polygon_from_extrema: sides intersect");
    return poly;
}

double shoelace_area(const Polygon& poly) {
    const auto& v = poly.vertices;
    if (v.size() < 3) throw DegenerateError("shoelace_area: need at least 3 vertices");
    double acc = 0.0;
    for (std::size_t i = 0, n = v.size(); i < n; ++i) {
        const auto& a = v[i];
        const auto& b = v[(i + 1) % n];
        acc += a.x * b.y - b.x * a.y;
    }
    return 0.5 * acc;
}

Point2 polygon_centroid(const Polygon& poly) {
    const double area = shoelace_area(poly);
    if (std::abs(area) <= kAreaEpsilon)
        throw DegenerateError("polygon_centroid: zero-area polygon");
    const auto& v = poly.vertices;
    double cx = 0.0, cy = 0.0;
    for (std::size_t i = 0, n = v.size(); i < n; ++i) {
        const auto& a = v[i];
        const auto& b = v[(i + 1) % n];
        const double cross = a.x * b.y - b.x * a.y;
        cx += (a.x + b.x) * cross;
        cy += (a.y + b.y) * cross;
    }
    const double inv = 1.0 / (6.0 * area);
    return {cx * inv, cy * inv};
}

Circle enclosing_circle(const Polygon& poly) {
    const Point2 c = polygon_centroid(poly);
    double acc = 0.0;
    for (const auto& v : poly.vertices) acc += std::hypot(v.x - c.x, v.y - c.y);
    return {c, acc / static_cast<double>(poly.vertices.size())};
}

double max_vertex_distance(const Polygon& poly, const Point2& center) {
    double best = 0.0;
    for (const auto& v : poly.vertices)
        best = std::max(best, std::hypot(v.x - center.x, v.y - center.y));
    return best;
}

// ---------------------------------------------------------------------------
// Simplicity test

namespace {

double orient(const Point2& a, const Point2& b, const Point2& c) {
    return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

bool on_segment(const Point2& a, const Point2& b, const Point2& p) {
    return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
           std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

// Closed-segment intersection (touching counts).
bool segments_intersect(const Point2& a, const Point2& b, const Point2& c, const Point2& d) {
    const double o1 = orient(a, b, c);
    const double o2 = orient(a, b, d);
    const double o3 = orient(c, d, a);
    const double o4 = orient(c, d, b);
    if (((o1 > 0) != (o2 > 0)) && ((o3 > 0) != (o4 > 0)) && o1 != 0 && o2 != 0 && o3 != 0 &&
        o4 != 0)
        return true;
    if (o1 == 0 && on_segment(a, b, c)) return true;
    if (o2 == 0 && on_segment(a, b, d)) return true;
    if (o3 == 0 && on_segment(c, d, a)) return true;
    if (o4 == 0 && on_segment(c, d, b)) return true;
    return false;
}

bool points_equal(const Point2& a, const Point2& b) {
    return a.x == b.x && a.y == b.y;
}

} // namespace

bool is_simple(const Polygon& poly) {
    const auto& v = poly.vertices;
    const std::size_t n = v.size();
    if (n < 3) return false;
    for (std::size_t i = 0; i < n; ++i)
        if (points_equal(v[i], v[(i + 1) % n])) return false; // zero-length side

    for (std::size_t i = 0; i < n; ++i) {
        const Point2& a = v[i];
        const Point2& b = v[(i + 1) % n];
        for (std::size_t j = i + 1; j < n; ++j) {
            const Point2& c = v[j];
            const Point2& d = v[(j + 1) % n];
            const bool adjacent = j == i + 1 || (i == 0 && j == n - 1);
            if (adjacent) {
                // Sides sharing a vertex must not overlap beyond it:
                // collinear and doubling back means the far endpoints
                // land on each other's segment.
                const Point2& shared = j == i + 1 ? b : a;
                const Point2& e1 = j == i + 1 ? a : b; // far end of side i
                const Point2& e2 = j == i + 1 ? d : c; // far end of side j
                if (orient(e1, shared, e2) == 0 &&
                    (on_segment(e1, shared, e2) || on_segment(e2, shared, e1)))
                    return false;
            } else {
                if (segments_intersect(a, b, c, d)) return false;
            }
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// Welzl minimum enclosing circle (degenerate-path fallback only)

namespace {

Circle circle_two(const Point2& a, const Point2& b) {
    const Point2 c{(a.x + b.x) / 2.0, (a.y + b.y) / 2.0};
    return {c, std::hypot(a.x - c.x, a.y - c.y)};
}

Circle circumcircle(const Point2& a, const Point2& b, const Point2& c) {
    const double d = 2.0 * (a.x * (b.y - c.y) + b.x * (c.y - a.y) + c.x * (a.y - b.y));
    if (d == 0.0) return {{0, 0}, -1.0}; // collinear
    const double a2 = a.x * a.x + a.y * a.y;
    const double b2 = b.x * b.x + b.y * b.y;
    const double c2 = c.x * c.x + c.y * c.y;
    const Point2 center{(a2 * (b.y - c.y) + b2 * (c.y - a.y) + c2 * (a.y - b.y)) / d,
                        (a2 * (c.x - b.x) + b2 * (a.x - c.x) + c2 * (b.x - a.x)) / d};
    return {center, std::hypot(a.x - center.x, a.y - center.y)};
}

bool in_circle(const Circle& c, const Point2& p) {
    return std::hypot(p.x - c.center.x, p.y - c.center.y) <= c.radius * (1.0 + 1e-12) + 1e-9;
}

Circle trivial_circle(std::span<const Point2> boundary) {
    switch (boundary.size()) {
        case 0: return {{0, 0}, 0.0};
        case 1: return {boundary[0], 0.0};
        case 2: return circle_two(boundary[0], boundary[1]);
        default: {
            const Circle c = circumcircle(boundary[0], boundary[1], boundary[2]);
            if (c.radius >= 0.0) return c;
            // collinear support: widest pair
            Circle best = circle_two(boundary[0], boundary[1]);
            for (int i = 0; i < 3; ++i)
                for (int j = i + 1; j < 3; ++j) {
                    const Circle cand = circle_two(boundary[static_cast<std::size_t>(i)],
                                                   boundary[static_cast<std::size_t>(j)]);
                    if (cand.radius > best.radius) best = cand;
                }
            return best;
        }
    }
}

Circle welzl(std::vector<Point2>& pts, std::size_t n, std::vector<Point2>& boundary) {
    if (n == 0 || boundary.size() == 3) return trivial_circle(boundary);
    const Point2 p = pts[n - 1];
    const Circle c = welzl(pts, n - 1, boundary);
    if (c.radius >= 0.0 && in_circle(c, p)) return c;
    boundary.push_back(p);
    const Circle result = welzl(pts, n - 1, boundary);
    boundary.pop_back();
    return result;
}

} // namespace

Circle min_enclosing_circle(std::span<const Point2> points) {
    if (points.empty()) throw DegenerateError("min_enclosing_circle: no points");
    std::vector<Point2> pts(points.begin(), points.end());
    std::shuffle(pts.begin(), pts.end(), std::mt19937(12345)); // fixed seed: deterministic
    std::vector<Point2> boundary;
    return welzl(pts, pts.size(), boundary);
}

std::string polygon_circle_json(const Polygon& poly, const Circle& circle, double radius_max,
                                const Centroid& region_centroid) {
    nlohmann::json j;
    auto vertices = nlohmann::json::array();
    for (const auto& v : poly.vertices) vertices.push_back({v.x, v.y});
    j["vertices"] = vertices;
    j["center"] = {circle.center.x, circle.center.y};
    j["radius"] = circle.radius;
    j["radius_max"] = radius_max;
    j["polygon_centroid"] = {circle.center.x, circle.center.y};
    j["region_centroid"] = {region_centroid.c_bar, region_centroid.r_bar};
    return j.dump(2) + "\n";
}

} // namespace mammo
