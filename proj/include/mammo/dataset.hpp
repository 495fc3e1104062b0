#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mammo/classifier.hpp"
#include "mammo/raster.hpp"

namespace mammo {

/// One line of the MIAS annotation file. Coordinates use the MIAS
/// convention: origin at the bottom-left of the 1024x1024 image.
struct MiasRecord {
    std::string refnum;      // e.g. mdb001
    char tissue = 'F';       // F, G or D
    std::string abnormality; // CALC CIRC SPIC MISC ARCH ASYM NORM
    std::optional<Label> severity;
    std::optional<int> center_x;
    std::optional<int> center_y;
    std::optional<int> approx_radius;

    bool has_coordinates() const { return center_x && center_y && approx_radius; }
};

struct MiasParseResult {
    struct Reject {
        int line_no = 0;
        std::string line;
        std::string reason;
    };
    std::vector<MiasRecord> records;
    std::vector<Reject> rejects;
};

/// Parses the whitespace-separated annotation format
///   refnum tissue abnormality [severity [x y radius]]
/// Lines failing the grammar land in `rejects` with their line number.
/// Throws DecodeError on empty input.
MiasParseResult parse_mias_info(const std::string& text);

/// Canonical single-line form of a record (round-trips through the parser).
std::string serialize_mias_record(const MiasRecord& rec);

struct RoiParams {
    int se_side = 3;
    std::int64_t min_area = 50;
};

/// Annotation-guided ROI extraction: converts the MIAS bottom-left y to
/// an image row, crops a window of side 2*margin_factor*radius, runs
/// Otsu -> opening -> largest component inside it, and re-embeds the
/// mask on the full canvas. Throws DetectionError when the record lacks
/// coordinates, the clamped window degenerates, or nothing segments.
BinaryMask extract_roi(const RasterImage& image, const MiasRecord& record,
                       double margin_factor, const RoiParams& params = {});

struct AnnotatedImage {
    MiasRecord record;
    RasterImage image;
    BinaryMask roi_mask;
};

} // namespace mammo
