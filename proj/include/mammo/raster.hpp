#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "mammo/errors.hpp"

namespace mammo {

/// 8-bit grayscale image, row-major, origin at the top-left corner.
/// x is the column index (rightward), y is the row index (downward).
struct RasterImage {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> luminance;

    RasterImage() = default;
    RasterImage(int w, int h, std::uint8_t fill = 0);

    std::uint8_t at(int x, int y) const { return luminance[static_cast<std::size_t>(y) * width + x]; }
    std::uint8_t& at(int x, int y) { return luminance[static_cast<std::size_t>(y) * width + x]; }
    bool in_bounds(int x, int y) const { return x >= 0 && x < width && y >= 0 && y < height; }

    bool operator==(const RasterImage&) const = default;
};

/// Binary foreground mask on the same pixel grid as RasterImage.
struct BinaryMask {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> bits; // 0 = background, 1 = foreground

    BinaryMask() = default;
    BinaryMask(int w, int h, bool fill = false);

    bool get(int x, int y) const { return bits[static_cast<std::size_t>(y) * width + x] != 0; }
    void set(int x, int y, bool v) { bits[static_cast<std::size_t>(y) * width + x] = v ? 1 : 0; }
    bool in_bounds(int x, int y) const { return x >= 0 && x < width && y >= 0 && y < height; }

    /// Number of foreground pixels.
    std::int64_t count() const;

    bool operator==(const BinaryMask&) const = default;
};

/// Connected-component labelling of a mask. Labels are 1..K in
/// raster-scan discovery order; 0 marks background.
struct LabelMap {
    int width = 0;
    int height = 0;
    std::vector<int> labels;
    std::vector<std::int64_t> component_areas; // index k-1 holds area of label k

    int label_count() const { return static_cast<int>(component_areas.size()); }
    int label_at(int x, int y) const { return labels[static_cast<std::size_t>(y) * width + x]; }
    std::int64_t area(int label) const { return component_areas.at(static_cast<std::size_t>(label) - 1); }
};

/// Odd-sided boolean kernel anchored at its center cell.
struct StructuringElement {
    int side = 0;
    std::vector<std::uint8_t> bits;

    static StructuringElement square(int side);
    bool get(int i, int j) const { return bits[static_cast<std::size_t>(j) * side + i] != 0; }
    StructuringElement reflected() const; // rotated 180 degrees about the anchor
};

struct OtsuResult {
    BinaryMask mask;
    int threshold = 0;
    bool degenerate = false; // no split with both classes nonempty (constant image)
};

/// Decodes binary (P5) or ASCII (P2) PGM. Header comments are tolerated,
/// maxval up to 65535 is accepted and rescaled to [0,255].
RasterImage read_pgm(std::span<const std::uint8_t> bytes);
RasterImage read_pgm_file(const std::string& path);

/// Encodes as binary P5 with maxval 255. read_pgm(write_pgm(img)) == img.
std::vector<std::uint8_t> write_pgm(const RasterImage& img);
void write_pgm_file(const RasterImage& img, const std::string& path);

/// Global Otsu binarization: foreground = pixels strictly above the
/// threshold that maximizes between-class variance (smallest such
/// threshold on ties). A constant image yields an empty mask with the
/// degenerate flag set.
OtsuResult threshold_otsu(const RasterImage& img);

/// Output pixel is set iff the element, anchored there, fits entirely
/// inside the foreground. Out-of-bounds cells count as background.
BinaryMask erode(const BinaryMask& mask, const StructuringElement& se);

/// Output pixel is set iff any element cell, anchored there, overlaps
/// the foreground.
BinaryMask dilate(const BinaryMask& mask, const StructuringElement& se);

/// Erosion followed by dilation with the reflected element. Removes
/// foreground features smaller than the element; idempotent.
BinaryMask open(const BinaryMask& mask, const StructuringElement& se);

/// 8-connectivity labelling, labels assigned in raster-scan discovery
/// order starting at 1.
LabelMap connected_components(const BinaryMask& mask);

/// Mask of the single largest component with area >= min_area.
/// Ties are broken toward the smallest label.
/// Throws DetectionError when nothing qualifies.
BinaryMask largest_component(const LabelMap& lm, std::int64_t min_area);

/// 3x3 Sobel on the 0/1 mask; a pixel is an edge iff it is foreground
/// and its gradient magnitude is nonzero. Edge-of-image pixels replicate
/// their nearest in-bounds neighbor.
BinaryMask sobel_edges(const BinaryMask& mask);

} // namespace mammo
