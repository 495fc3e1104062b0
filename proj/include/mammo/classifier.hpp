#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mammo/errors.hpp"

namespace mammo {

enum class Label { Benign, Malignant };

const char* label_name(Label l);
std::optional<Label> label_from_string(const std::string& s);

struct Sample {
    std::vector<double> features;
    Label label = Label::Benign;
};

/// Linear max-margin model over standardized features.
/// Malignant iff w . standardize(x) + b > 0.
struct LinearModel {
    std::vector<double> weights;
    double bias = 0.0;
    std::vector<double> feature_means;
    std::vector<double> feature_scales;
    std::int64_t trained_on = 0;
    double regularization = 0.0;
    int epochs = 0;
    unsigned seed = 0;
};

struct Prediction {
    Label label = Label::Benign;
    double score = 0.0; // signed margin; > 0 means Malignant
};

/// Positive class is Malignant.
struct ConfusionMatrix {
    std::int64_t tp = 0;
    std::int64_t fp = 0;
    std::int64_t tn = 0;
    std::int64_t fn = 0;
    std::int64_t total() const { return tp + fp + tn + fn; }
};

/// Percentages in [0,100]; a field is empty when its denominator is 0.
struct Metrics {
    std::optional<double> sensitivity;
    std::optional<double> specificity;
    std::optional<double> accuracy;
    std::optional<double> precision;
};

/// Soft-margin hinge loss minimized by deterministic epoch-ordered
/// subgradient descent with step 1/(lambda*t). Features are standardized
/// to zero mean and unit scale first. Bit-reproducible for fixed inputs.
/// Throws on single-class input or mismatched dimensions.
LinearModel train_svm(const std::vector<Sample>& samples, double regularization,
                      int epochs, unsigned seed);

/// Ties (score exactly 0) go to Benign.
Prediction predict(const LinearModel& model, const std::vector<double>& features);

ConfusionMatrix confusion_matrix(const std::vector<Label>& predictions,
                                 const std::vector<Label>& truth);

Metrics compute_metrics(const ConfusionMatrix& cm);

std::string model_to_json(const LinearModel& model);
LinearModel model_from_json(const std::string& text);

std::string metrics_to_json(const ConfusionMatrix& cm, const Metrics& m);

/// Aligned text table with the columns Scheme TN TP FP FN
/// Sensitivity (%) Specificity (%) Accuracy (%) Precision (%).
std::string metrics_table(const ConfusionMatrix& cm, const Metrics& m,
                          const std::string& scheme = "SVM");

} // namespace mammo
