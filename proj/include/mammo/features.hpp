#pragma once

#include <cstdint>

#include "mammo/signature.hpp"

namespace mammo {

/// Geometric shape descriptors of a segmented region.
struct GeoFeatures {
    std::int64_t area = 0;        // foreground pixel count
    double perimeter = 0.0;       // chain length, sqrt(2) per diagonal step
    std::int64_t perimeter_px = 0; // boundary pixel count
    double circularity = 0.0;     // 4*pi*A / P^2
    double roundness = 0.0;
    double compactness = 0.0;     // sqrt(roundness)
};

struct PerimeterResult {
    double weighted = 0.0;
    std::int64_t count = 0;
};

/// Number of foreground pixels.
std::int64_t region_area(const BinaryMask& mask);

/// Boundary extent: integer count = number of chain points; weighted
/// length sums 1 per axial step and sqrt(2) per diagonal step, closing
/// the loop.
PerimeterResult region_perimeter(const BoundaryChain& chain);

/// Circularity and roundness are both 4*pi*A/P^2 over the weighted
/// perimeter; compactness = sqrt(roundness). Throws on nonpositive
/// inputs.
GeoFeatures compute_features(std::int64_t area, double perimeter, std::int64_t perimeter_px = 0);

} // namespace mammo
