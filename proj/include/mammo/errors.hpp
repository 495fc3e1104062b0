#pragma once

#include <stdexcept>
#include <string>

namespace mammo {

/// Base class for all pipeline errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed or truncated input data (PGM decoding, CSV/JSON parsing).
class DecodeError : public Error {
public:
    explicit DecodeError(const std::string& msg) : Error(msg) {}
};

/// Segmentation produced no usable region (no contrast, nothing above
/// the minimum area, empty window after clamping).
class DetectionError : public Error {
public:
    explicit DetectionError(const std::string& msg) : Error(msg) {}
};

/// Geometry collapsed: zero-extent region, collinear vertices,
/// self-intersecting polygon.
class DegenerateError : public Error {
public:
    explicit DegenerateError(const std::string& msg) : Error(msg) {}
};

/// Bad tunable values or inconsistent options.
class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& msg) : Error(msg) {}
};

} // namespace mammo
