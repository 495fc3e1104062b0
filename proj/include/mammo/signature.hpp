#pragma once

#include <string>
#include <vector>

#include "mammo/raster.hpp"

namespace mammo {

/// Real point in image coordinates (x = column, y = row, y grows downward).
struct Point2 {
    double x = 0.0;
    double y = 0.0;
};

struct PixelPoint {
    int x = 0;
    int y = 0;
    bool operator==(const PixelPoint&) const = default;
};

/// Mean pixel location of a region, in (row, column) form.
struct Centroid {
    double r_bar = 0.0; // mean row
    double c_bar = 0.0; // mean column
};

/// Closed 8-connected boundary walk of a region. Consecutive points
/// (including last back to first) are 8-adjacent; 1-pixel-wide limbs
/// may be visited twice (out and back).
struct BoundaryChain {
    std::vector<PixelPoint> points;
};

/// Radial border signature r(theta): bin k covers theta in
/// [2*pi*k/n, 2*pi*(k+1)/n). Angles are counterclockwise from +x in the
/// mathematical frame (image y negated), so the function is periodic
/// over 2*pi.
struct RadialSignature {
    Centroid centroid;
    int n_bins = 0;
    std::vector<double> radii;

    double bin_angle(int bin) const;
};

/// Detected maxima of a signature, sorted by angle.
struct SignatureExtrema {
    struct Extremum {
        double theta = 0.0; // radians
        double r = 0.0;     // pixels
        int bin = 0;
    };
    std::vector<Extremum> points;
};

/// Mean row / mean column over foreground pixels.
/// Throws DetectionError on an empty mask.
Centroid region_centroid(const BinaryMask& mask);

/// Moore-neighbor tracing with Jacob's stopping criterion, starting at
/// the top-most then left-most foreground pixel, clockwise in image
/// coordinates. Expects a single 8-connected component.
/// Throws DetectionError on an empty mask.
BoundaryChain trace_boundary(const BinaryMask& mask);

/// Builds the border signature from a traced chain. Each point lands in
/// the bin of its angle about the centroid; a bin keeps the MAXIMUM
/// distance among its points so spicule tips survive; empty bins are
/// filled by circular linear interpolation between nonempty neighbors.
/// Throws DegenerateError when every chain point coincides with the
/// centroid.
RadialSignature radial_signature(const BoundaryChain& chain, const Centroid& centroid, int n_bins);

/// Circular moving average; window must be odd, >= 1 and < n_bins.
/// Window 1 is the identity.
RadialSignature smooth_signature(const RadialSignature& sig, int window);

/// Local maxima of the signature: bins where the circular first
/// difference changes sign + to - (plateaus count once, at their first
/// bin) and the circular second difference is negative. Candidates whose
/// prominence (height above the higher flanking minimum) is below
/// `prominence` are dropped; among candidates closer than
/// `min_separation` bins the larger radius wins, ties to the smaller
/// bin. May return empty.
SignatureExtrema find_maxima(const RadialSignature& sig, double prominence, int min_separation);

/// Fallback used when fewer than 3 maxima were detected: the largest
/// bin plus the best bins near one-third and two-thirds of a turn away,
/// so the downstream polygon always exists and a near-circular region
/// still yields a near-zero gap count.
SignatureExtrema fallback_extrema(const RadialSignature& sig);

/// x = c_bar + r*cos(theta); y = r_bar - r*sin(theta). Same angle
/// convention as radial_signature, so the round trip closes.
Point2 polar_to_cartesian(double r, double theta, const Centroid& centroid);

/// CSV export (bin_index,theta_radians,radius_px).
std::string signature_csv(const RadialSignature& sig);

/// CSV export (theta,r,x,y).
std::string extrema_csv(const SignatureExtrema& extrema, const Centroid& centroid);

} // namespace mammo
