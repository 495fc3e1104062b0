#pragma once

#include <span>
#include <string>
#include <vector>

#include "mammo/signature.hpp"

namespace mammo {

/// Implicitly closed polygon: the last vertex connects back to the first.
struct Polygon {
    std::vector<Point2> vertices;
};

struct Circle {
    Point2 center;
    double radius = 0.0;
};

/// Vertices are the extrema converted to Cartesian about the region
/// centroid, in ascending-angle order. The result is verified simple;
/// throws DegenerateError if fewer than 3 extrema are given or the
/// sides intersect.
Polygon polygon_from_extrema(const SignatureExtrema& extrema, const Centroid& centroid);

/// Signed shoelace sum 0.5 * sum(x_i*y_{i+1} - x_{i+1}*y_i); positive
/// for counterclockwise vertex order when y grows upward.
double shoelace_area(const Polygon& poly);

/// Area-weighted centroid with the 1/(6A) prefactor; orientation
/// independent. Throws DegenerateError on (near-)zero area.
Point2 polygon_centroid(const Polygon& poly);

/// Center = polygon centroid, radius = mean distance from the center to
/// the vertices. Some vertices may fall outside: this is the mean-radius
/// construction, not a circumscribed circle.
Circle enclosing_circle(const Polygon& poly);

/// Largest center-to-vertex distance for the same center; reported
/// alongside the mean radius.
double max_vertex_distance(const Polygon& poly, const Point2& center);

/// True iff no two non-adjacent sides intersect and adjacent sides meet
/// only at their shared vertex.
bool is_simple(const Polygon& poly);

/// Welzl minimum enclosing circle; used only as the degenerate fallback
/// when the extrema polygon collapses.
Circle min_enclosing_circle(std::span<const Point2> points);

/// JSON record {vertices, center, radius, ...} for overlay rendering.
std::string polygon_circle_json(const Polygon& poly, const Circle& circle,
                                double radius_max, const Centroid& region_centroid);

} // namespace mammo
