#pragma once

#include <cstdint>

#include "mammo/polygeom.hpp"

namespace mammo {

/// Gap pixels between the tumor mask and its enclosing disk.
/// fill_count (pixels added to round the boundary out to the disk) is
/// the classification feature; protrusions beyond the mean-radius disk
/// are reported separately.
struct InterpolationResult {
    std::int64_t fill_count = 0;       // disk \ tumor
    std::int64_t protrusion_count = 0; // tumor \ disk
    std::int64_t symmetric_diff = 0;   // fill_count + protrusion_count
    double fill_ratio = 0.0;           // fill_count / tumor area
    Circle circle;
};

/// Pixel (x, y) is set iff (x-cx)^2 + (y-cy)^2 <= radius^2 at integer
/// pixel centers; pixels outside the canvas are clipped.
BinaryMask rasterize_disk(const Circle& circle, int width, int height);

/// Exact set arithmetic between the tumor mask and the disk rasterized
/// on the same canvas. Throws DetectionError on an empty tumor mask.
InterpolationResult count_interpolated_pixels(const BinaryMask& tumor, const Circle& circle);

/// Grayscale overlay: tumor mid-gray, boundary ring light gray, fill
/// pixels white, protrusions dark gray.
RasterImage render_overlay(const BinaryMask& tumor, const BinaryMask& edges, const Circle& circle);

} // namespace mammo
