#pragma once

#include <string>
#include <vector>

#include "mammo/classifier.hpp"
#include "mammo/signature.hpp"

namespace mammo {

enum class ShapeKind { Disk, Ellipse, Lobular, Spiculated };

const char* shape_kind_name(ShapeKind k);

/// Radial shape family with closed-form area and extrema:
/// r(theta) = R * (1 + a*cos(k*(theta - rotation))) for Lobular and
/// Spiculated, constant R for Disk, the standard ellipse radius for
/// Ellipse. Optional seeded radial noise perturbs r(theta).
struct ShapeSpec {
    ShapeKind kind = ShapeKind::Disk;
    double base_radius = 30.0;
    int lobe_count = 0;        // Lobular / Spiculated
    double amplitude = 0.0;    // in [0,1)
    double axis_ratio = 1.0;   // Ellipse: minor/major, in (0,1]
    double rotation = 0.0;     // radians
    Point2 center;
    double noise_amplitude = 0.0; // pixels
    unsigned seed = 0;
};

/// Rasterizes the spec onto the canvas: pixel foreground iff its
/// distance from the center is <= r(theta_pixel). Deterministic per
/// seed. Throws when the shape does not fit the canvas.
BinaryMask generate_shape(const ShapeSpec& spec, int width, int height);

struct LabeledShape {
    std::string name;
    ShapeSpec spec;
    BinaryMask mask;
    Label label = Label::Benign;
};

inline constexpr int kCorpusCanvas = 256;

/// Seeded benign/malignant proxy corpus: benign = disks, mild ellipses
/// and low-amplitude lobular shapes; malignant = spiculated shapes with
/// amplitude in [0.3, 0.6] and 5..12 lobes. Fully reproducible.
std::vector<LabeledShape> generate_corpus(int n_per_class, unsigned seed);

} // namespace mammo
