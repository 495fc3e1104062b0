#include "mammo/signature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "mammo/format.hpp"

namespace mammo {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
} // namespace

double RadialSignature::bin_angle(int bin) const {
    return kTwoPi * bin / n_bins;
}

Centroid region_centroid(const BinaryMask& mask) {
    std::int64_t n = 0, sum_r = 0, sum_c = 0;
    for (int y = 0; y < mask.height; ++y) {
        for (int x = 0; x < mask.width; ++x) {
            if (!mask.get(x, y)) continue;
            ++n;
            sum_r += y;
            sum_c += x;
        }
    }
    if (n == 0) throw DetectionError("region_centroid: empty mask");
    return {static_cast<double>(sum_r) / n, static_cast<double>(sum_c) / n};
}

// ---------------------------------------------------------------------------
// Moore-neighbor tracing

namespace {

// 8-neighborhood in clockwise order (image coordinates, y down),
// starting at west.
constexpr int kDx[8] = {-1, -1, 0, 1, 1, 1, 0, -1};
constexpr int kDy[8] = {0, -1, -1, -1, 0, 1, 1, 1};

int direction_of(PixelPoint from, PixelPoint to) {
    for (int d = 0; d < 8; ++d)
        if (from.x + kDx[d] == to.x && from.y + kDy[d] == to.y) return d;
    throw Error("trace_boundary: backtrack not adjacent");
}

} // namespace

BoundaryChain trace_boundary(const BinaryMask& mask) {
    PixelPoint start{-1, -1};
    for (int y = 0; y < mask.height && start.x < 0; ++y)
        for (int x = 0; x < mask.width; ++x)
            if (mask.get(x, y)) {
                start = {x, y}; // top-most, then left-most
                break;
            }
    if (start.x < 0) throw DetectionError("trace_boundary: empty mask");

    auto fg = [&](int x, int y) { return mask.in_bounds(x, y) && mask.get(x, y); };

    BoundaryChain chain;
    chain.points.push_back(start);

    // The cell west of the raster-scan-first pixel is always background.
    const PixelPoint b0{start.x - 1, start.y};
    PixelPoint current = start;
    PixelPoint back = b0;

    const std::int64_t max_steps = 4 * static_cast<std::int64_t>(mask.width) * mask.height + 8;
    for (std::int64_t step = 0; step < max_steps; ++step) {
        const int dir_b = direction_of(current, back);
        PixelPoint next{-1, -1};
        PixelPoint new_back = back;
        for (int k = 1; k <= 8; ++k) {
            const int d = (dir_b + k) % 8;
            const int nx = current.x + kDx[d];
            const int ny = current.y + kDy[d];
            if (fg(nx, ny)) {
                next = {nx, ny};
                break;
            }
            new_back = {nx, ny};
        }
        if (next.x < 0) return chain; // isolated pixel

        current = next;
        back = new_back;
        // Jacob's stopping criterion: the trace state repeats once we
        // re-enter the start with the original backtrack.
        if (current == start && back.x == b0.x && back.y == b0.y) return chain;
        chain.points.push_back(current);
    }
    throw Error("trace_boundary: did not close");
}

// ---------------------------------------------------------------------------
// Radial signature

RadialSignature radial_signature(const BoundaryChain& chain, const Centroid& centroid,
                                 int n_bins) {
    if (n_bins < 8) throw ConfigError("radial_signature: n_bins must be >= 8");
    if (chain.points.empty()) throw Error("radial_signature: empty chain");

    RadialSignature sig;
    sig.centroid = centroid;
    sig.n_bins = n_bins;
    sig.radii.assign(static_cast<std::size_t>(n_bins), -1.0); // -1 marks empty

    const double bin_width = kTwoPi / n_bins;
    bool any = false;
    for (const auto& p : chain.points) {
        const double dx = p.x - centroid.c_bar;
        const double dy = -(p.y - centroid.r_bar); // math angles in the y-down frame
        const double dist = std::hypot(dx, dy);
        if (dist == 0.0) continue;
        any = true;
        double theta = std::atan2(dy, dx);
        if (theta < 0) theta += kTwoPi;
        int bin = static_cast<int>(theta / bin_width);
        if (bin >= n_bins) bin = 0; // 2*pi wraps to 0
        sig.radii[static_cast<std::size_t>(bin)] =
            std::max(sig.radii[static_cast<std::size_t>(bin)], dist);
    }
    if (!any)
        throw DegenerateError("radial_signature: zero-extent region (centroid on every point)");

    // Fill empty bins by circular linear interpolation between the
    // nearest nonempty neighbors.
    std::vector<int> filled;
    for (int i = 0; i < n_bins; ++i)
        if (sig.radii[static_cast<std::size_t>(i)] >= 0.0) filled.push_back(i);

    if (filled.size() == 1) {
        const double v = sig.radii[static_cast<std::size_t>(filled[0])];
        std::fill(sig.radii.begin(), sig.radii.end(), v);
        return sig;
    }
    for (std::size_t fi = 0; fi < filled.size(); ++fi) {
        const int left = filled[fi];
        const int right = filled[(fi + 1) % filled.size()];
        const int gap = (right - left + n_bins - 1) % n_bins; // empty bins in between
        if (gap == 0) continue;
        const double vl = sig.radii[static_cast<std::size_t>(left)];
        const double vr = sig.radii[static_cast<std::size_t>(right)];
        for (int j = 1; j <= gap; ++j) {
            const int bin = (left + j) % n_bins;
            sig.radii[static_cast<std::size_t>(bin)] = vl + (vr - vl) * j / (gap + 1);
        }
    }
    return sig;
}

RadialSignature smooth_signature(const RadialSignature& sig, int window) {
    if (window < 1 || window % 2 == 0 || window >= sig.n_bins)
        throw ConfigError("smooth_signature: window must be odd, >= 1 and < n_bins");
    if (window == 1) return sig;

    RadialSignature out = sig;
    const int n = sig.n_bins;
    const int half = window / 2;
    for (int i = 0; i < n; ++i) {
        double acc = 0.0;
        for (int j = -half; j <= half; ++j)
            acc += sig.radii[static_cast<std::size_t>(((i + j) % n + n) % n)];
        out.radii[static_cast<std::size_t>(i)] = acc / window;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Extrema detection

namespace {

int circular_distance(int a, int b, int n) {
    const int d = std::abs(a - b) % n;
    return std::min(d, n - d);
}

// Height of the peak above the higher of its two flanking minima,
// walking each way until a strictly higher bin (or a full turn).
double peak_prominence(const std::vector<double>& r, int i, int n) {
    const double v = r[static_cast<std::size_t>(i)];
    double mins[2];
    for (int side = 0; side < 2; ++side) {
        const int dir = side == 0 ? -1 : 1;
        double m = v;
        int j = i;
        for (int steps = 0; steps < n; ++steps) {
            j = ((j + dir) % n + n) % n;
            const double val = r[static_cast<std::size_t>(j)];
            if (val > v) break;
            m = std::min(m, val);
        }
        mins[side] = m;
    }
    return v - std::max(mins[0], mins[1]);
}

} // namespace

SignatureExtrema find_maxima(const RadialSignature& sig, double prominence, int min_separation) {
    const int n = sig.n_bins;
    const auto& r = sig.radii;

    // Candidate = first bin of a (possibly single-bin) plateau whose
    // circular first difference goes from + to - across it; the second
    // difference there is negative by the same comparison.
    std::vector<int> candidates;
    for (int i = 0; i < n; ++i) {
        const double prev = r[static_cast<std::size_t>((i + n - 1) % n)];
        if (r[static_cast<std::size_t>(i)] == prev) continue; // not a run start
        const double rise = r[static_cast<std::size_t>(i)] - prev;
        if (rise <= 0.0) continue;
        // extend over the plateau
        int j = i;
        while (r[static_cast<std::size_t>((j + 1) % n)] == r[static_cast<std::size_t>(i)] &&
               (j + 1) % n != i)
            j = (j + 1) % n;
        const double fall =
            r[static_cast<std::size_t>((j + 1) % n)] - r[static_cast<std::size_t>(j)];
        if (fall >= 0.0) continue;
        const double second_diff = j != i ? -rise : fall - rise;
        if (second_diff >= 0.0) continue;
        candidates.push_back(i);
    }

    // Prominence filter.
    std::vector<int> prominent;
    for (int c : candidates)
        if (peak_prominence(r, c, n) >= prominence) prominent.push_back(c);

    // Separation: larger radius wins, ties to the smaller bin.
    std::sort(prominent.begin(), prominent.end(), [&](int a, int b) {
        const double ra = r[static_cast<std::size_t>(a)];
        const double rb = r[static_cast<std::size_t>(b)];
        if (ra != rb) return ra > rb;
        return a < b;
    });
    std::vector<int> kept;
    for (int c : prominent) {
        bool ok = true;
        for (int k : kept)
            if (circular_distance(c, k, n) < min_separation) {
                ok = false;
                break;
            }
        if (ok) kept.push_back(c);
    }
    std::sort(kept.begin(), kept.end());

    SignatureExtrema out;
    for (int bin : kept)
        out.points.push_back({sig.bin_angle(bin), r[static_cast<std::size_t>(bin)], bin});
    return out;
}

SignatureExtrema fallback_extrema(const RadialSignature& sig) {
    const int n = sig.n_bins;
    const auto& r = sig.radii;

    auto argmax_window = [&](int center, int half) {
        int best = -1;
        for (int j = -half; j <= half; ++j) {
            const int bin = ((center + j) % n + n) % n;
            if (r[static_cast<std::size_t>(bin)] <= 0.0) continue;
            if (best < 0 || r[static_cast<std::size_t>(bin)] > r[static_cast<std::size_t>(best)])
                best = bin;
        }
        return best;
    };

    int b1 = 0;
    for (int i = 1; i < n; ++i)
        if (r[static_cast<std::size_t>(i)] > r[static_cast<std::size_t>(b1)]) b1 = i;

    // Near-equilateral spacing keeps the mean-radius circle inside a
    // near-circular region, so degenerate disks still count ~0 gap pixels.
    const int half = std::max(1, n / 72);
    std::vector<int> bins{b1};
    for (int third = 1; third <= 2; ++third) {
        int b = argmax_window(b1 + third * n / 3, half);
        if (b < 0) b = (b1 + third * n / 3) % n; // all-zero window; keep the slot
        bins.push_back(b);
    }
    std::sort(bins.begin(), bins.end());
    bins.erase(std::unique(bins.begin(), bins.end()), bins.end());

    SignatureExtrema out;
    for (int bin : bins) {
        const double radius = std::max(r[static_cast<std::size_t>(bin)], 1e-6);
        out.points.push_back({sig.bin_angle(bin), radius, bin});
    }
    return out;
}

Point2 polar_to_cartesian(double r, double theta, const Centroid& centroid) {
    return {centroid.c_bar + r * std::cos(theta), centroid.r_bar - r * std::sin(theta)};
}

std::string signature_csv(const RadialSignature& sig) {
    std::string out = "bin_index,theta_radians,radius_px\n";
    for (int i = 0; i < sig.n_bins; ++i) {
        out += std::to_string(i);
        out += ',';
        out += format_real(sig.bin_angle(i));
        out += ',';
        out += format_real(sig.radii[static_cast<std::size_t>(i)]);
        out += '\n';
    }
    return out;
}

std::string extrema_csv(const SignatureExtrema& extrema, const Centroid& centroid) {
    std::string out = "theta,r,x,y\n";
    for (const auto& e : extrema.points) {
        const Point2 p = polar_to_cartesian(e.r, e.theta, centroid);
        out += format_real(e.theta);
        out += ',';
        out += format_real(e.r);
        out += ',';
        out += format_real(p.x);
        out += ',';
        out += format_real(p.y);
        out += '\n';
    }
    return out;
}

} // namespace mammo
