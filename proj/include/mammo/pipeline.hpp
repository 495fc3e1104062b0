#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mammo/classifier.hpp"
#include "mammo/dataset.hpp"
#include "mammo/features.hpp"
#include "mammo/interp.hpp"
#include "mammo/polygeom.hpp"
#include "mammo/synth.hpp"

namespace mammo {

/// Every tunable of the pipeline, with its documented default.
/// Serialized beside every output artifact for reproducibility.
struct RunConfig {
    int n_bins = 360;
    int smooth_window = 5;
    double prominence = 2.0;  // pixels
    int min_separation = 5;   // bins
    int se_side = 3;
    std::int64_t min_area = 50;
    double margin_factor = 1.5;
    double regularization = 0.01;
    int epochs = 200;
    unsigned seed = 42;
    std::string feature_mode = "count-ratio"; // count-ratio | count-only | symdiff
    double holdout_fraction = 0.3;

    void validate() const; // throws ConfigError
};

std::string config_to_json(const RunConfig& cfg);
RunConfig config_from_json(const std::string& text);

/// One per-image row of the features CSV.
struct FeatureRecord {
    std::string image_id;
    std::int64_t area = 0;
    double perimeter_weighted = 0.0;
    std::int64_t perimeter_count = 0;
    double circularity = 0.0;
    double roundness = 0.0;
    double compactness = 0.0;
    int n_extrema = 0;
    double circle_center_x = 0.0;
    double circle_center_y = 0.0;
    double circle_radius = 0.0;
    std::int64_t fill_count = 0;
    std::int64_t protrusion_count = 0;
    std::int64_t symmetric_diff = 0;
    double fill_ratio = 0.0;
    std::optional<Label> label;
    std::vector<std::string> degenerate_flags;
};

/// Full per-image analysis with the intermediate artifacts kept for
/// overlays and exports.
struct AnalysisResult {
    FeatureRecord record;
    BinaryMask roi;
    BinaryMask edges;
    Centroid centroid; // region centroid (mean pixel location)
    RadialSignature signature;
    SignatureExtrema extrema;
    Polygon polygon;
    Circle circle;
    double circle_radius_max = 0.0;
    InterpolationResult interpolation;
};

/// Runs the geometry pipeline on an already segmented mask:
/// boundary -> signature -> extrema -> polygon -> circle -> gap counts.
AnalysisResult analyze_mask(const BinaryMask& roi, const std::string& image_id,
                            std::optional<Label> label, const RunConfig& cfg);

/// Segments and analyzes a grayscale image. With an annotation record
/// the ROI is extracted around it; otherwise the whole image goes
/// through Otsu -> opening -> largest component.
AnalysisResult analyze_image(const RasterImage& image,
                             const std::optional<MiasRecord>& annotation,
                             const std::string& image_id, const RunConfig& cfg);

std::string feature_csv_header();
std::string feature_csv_row(const FeatureRecord& rec);
std::string feature_csv(const std::vector<FeatureRecord>& records);
std::vector<FeatureRecord> feature_records_from_csv(const std::string& text);

/// Feature vector for classification, per cfg.feature_mode.
std::vector<double> classification_features(const FeatureRecord& rec, const RunConfig& cfg);

/// Builds labeled samples from rows that carry a label.
std::vector<Sample> samples_from_records(const std::vector<FeatureRecord>& records,
                                         const RunConfig& cfg);

/// Seeded stratified split; indices into `samples`.
struct SplitIndices {
    std::vector<std::size_t> train;
    std::vector<std::size_t> test;
};
SplitIndices stratified_split(const std::vector<Sample>& samples, double holdout_fraction,
                              unsigned seed);

/// Batch over a directory of <refnum>.pgm files driven by a MIAS info
/// file. Per-image failures become flagged rows; rows are refnum-sorted.
std::vector<FeatureRecord> run_batch(const std::string& image_dir, const std::string& info_path,
                                     const RunConfig& cfg,
                                     const std::string& overlay_dir = "");

/// Analyzes a generated corpus in memory (no files).
std::vector<FeatureRecord> analyze_corpus(const std::vector<LabeledShape>& corpus,
                                          const RunConfig& cfg);

struct EvalReport {
    ConfusionMatrix cm;
    Metrics metrics;
    std::int64_t evaluated = 0;
    std::string split; // "all" or "holdout"
};

/// Trains on all labeled rows of the CSV.
LinearModel train_from_records(const std::vector<FeatureRecord>& records, const RunConfig& cfg);

/// Evaluates a model over all labeled rows.
EvalReport evaluate_records(const LinearModel& model, const std::vector<FeatureRecord>& records,
                            const RunConfig& cfg);

/// Seeded stratified split: trains on the retained fraction, evaluates
/// on the holdout.
EvalReport split_train_eval(const std::vector<FeatureRecord>& records, const RunConfig& cfg,
                            LinearModel* model_out = nullptr);

/// Writes `text` to `path` and the serialized config to
/// `path + ".config.json"`. Throws Error on I/O failure.
void write_artifact(const std::string& path, const std::string& text, const RunConfig& cfg);

std::string read_text_file(const std::string& path);

} // namespace mammo
