#include "mammo/raster.hpp"

#include <array>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <numeric>

namespace mammo {

RasterImage::RasterImage(int w, int h, std::uint8_t fill) : width(w), height(h) {
    if (w < 1 || h < 1) throw Error("RasterImage dimensions must be >= 1");
    luminance.assign(static_cast<std::size_t>(w) * h, fill);
}

BinaryMask::BinaryMask(int w, int h, bool fill) : width(w), height(h) {
    if (w < 1 || h < 1) throw Error("BinaryMask dimensions must be >= 1");
    bits.assign(static_cast<std::size_t>(w) * h, fill ? 1 : 0);
}

std::int64_t BinaryMask::count() const {
    return std::accumulate(bits.begin(), bits.end(), std::int64_t{0});
}

StructuringElement StructuringElement::square(int side) {
    if (side < 1 || side % 2 == 0) throw Error("structuring element side must be odd and >= 1");
    StructuringElement se;
    se.side = side;
    se.bits.assign(static_cast<std::size_t>(side) * side, 1);
    return se;
}

StructuringElement StructuringElement::reflected() const {
    StructuringElement out;
    out.side = side;
    out.bits.resize(bits.size());
    for (int j = 0; j < side; ++j)
        for (int i = 0; i < side; ++i)
            out.bits[static_cast<std::size_t>(j) * side + i] =
                bits[static_cast<std::size_t>(side - 1 - j) * side + (side - 1 - i)];
    return out;
}

// ---------------------------------------------------------------------------
// PGM I/O

namespace {

class TokenReader {
public:
    explicit TokenReader(std::span<const std::uint8_t> bytes) : data_(bytes) {}

    // Next whitespace-delimited token; '#' starts a comment running to
    // end of line.
    std::string next_token() {
        skip_space_and_comments();
        std::string tok;
        while (pos_ < data_.size() && !std::isspace(data_[pos_]) && data_[pos_] != '#')
            tok.push_back(static_cast<char>(data_[pos_++]));
        if (tok.empty()) throw DecodeError("pgm: unexpected end of header");
        return tok;
    }

    int next_int(const char* what) {
        const std::string tok = next_token();
        int value = 0;
        for (char c : tok) {
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw DecodeError(std::string("pgm: malformed ") + what + " '" + tok + "'");
            value = value * 10 + (c - '0');
            if (value > 1 << 28) throw DecodeError(std::string("pgm: ") + what + " out of range");
        }
        return value;
    }

    // P5 payload begins after exactly one whitespace byte.
    void consume_single_whitespace() {
        if (pos_ >= data_.size() || !std::isspace(data_[pos_]))
            throw DecodeError("pgm: missing separator before pixel data");
        ++pos_;
    }

    std::span<const std::uint8_t> rest() const { return data_.subspan(pos_); }

private:
    void skip_space_and_comments() {
        while (pos_ < data_.size()) {
            if (std::isspace(data_[pos_])) {
                ++pos_;
            } else if (data_[pos_] == '#') {
                while (pos_ < data_.size() && data_[pos_] != '\n') ++pos_;
            } else {
                break;
            }
        }
    }

    std::span<const std::uint8_t> data_;
    std::size_t pos_ = 0;
};

std::uint8_t rescale(int value, int maxval) {
    if (maxval <= 255) return static_cast<std::uint8_t>(value);
    return static_cast<std::uint8_t>(value * 255 / maxval);
}

} // namespace

RasterImage read_pgm(std::span<const std::uint8_t> bytes) {
    if (bytes.size() < 2) throw DecodeError("pgm: input too short");
    const char m0 = static_cast<char>(bytes[0]);
    const char m1 = static_cast<char>(bytes[1]);
    if (m0 != 'P' || (m1 != '2' && m1 != '5'))
        throw DecodeError("pgm: unsupported magic (want P2 or P5)");
    const bool binary = m1 == '5';

    TokenReader reader(bytes.subspan(2));
    const int width = reader.next_int("width");
    const int height = reader.next_int("height");
    const int maxval = reader.next_int("maxval");
    if (width < 1 || height < 1) throw DecodeError("pgm: bad dimensions");
    if (maxval < 1 || maxval > 65535) throw DecodeError("pgm: maxval out of range");

    RasterImage img(width, height);
    const std::size_t n = img.luminance.size();

    if (binary) {
        reader.consume_single_whitespace();
        const auto payload = reader.rest();
        const int bytes_per_sample = maxval > 255 ? 2 : 1;
        if (payload.size() < n * bytes_per_sample)
            throw DecodeError("pgm: truncated payload");
        for (std::size_t i = 0; i < n; ++i) {
            int v;
            if (bytes_per_sample == 2)
                v = payload[2 * i] << 8 | payload[2 * i + 1]; // big-endian
            else
                v = payload[i];
            if (v > maxval) throw DecodeError("pgm: sample exceeds maxval");
            img.luminance[i] = rescale(v, maxval);
        }
    } else {
        for (std::size_t i = 0; i < n; ++i) {
            int v;
            try {
                v = reader.next_int("sample");
            } catch (const DecodeError&) {
                throw DecodeError("pgm: truncated payload");
            }
            if (v > maxval) throw DecodeError("pgm: sample exceeds maxval");
            img.luminance[i] = rescale(v, maxval);
        }
    }
    return img;
}

RasterImage read_pgm_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DecodeError("cannot open " + path);
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                    std::istreambuf_iterator<char>());
    return read_pgm(bytes);
}

std::vector<std::uint8_t> write_pgm(const RasterImage& img) {
    std::array<char, 64> header;
    const int len = std::snprintf(header.data(), header.size(), "P5\n%d %d\n255\n",
                                  img.width, img.height);
    std::vector<std::uint8_t> out(header.begin(), header.begin() + len);
    out.insert(out.end(), img.luminance.begin(), img.luminance.end());
    return out;
}

void write_pgm_file(const RasterImage& img, const std::string& path) {
    const auto bytes = write_pgm(img);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write " + path);
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
}

// ---------------------------------------------------------------------------
// Binarization

OtsuResult threshold_otsu(const RasterImage& img) {
    std::array<std::int64_t, 256> hist{};
    for (std::uint8_t v : img.luminance) ++hist[v];

    const std::int64_t total = static_cast<std::int64_t>(img.luminance.size());
    std::int64_t total_sum = 0;
    for (int v = 0; v < 256; ++v) total_sum += static_cast<std::int64_t>(v) * hist[v];

    // Between-class variance up to the n0*n1 denominator:
    // (s0*n1 - s1*n0)^2 / (n0*n1). The numerator difference stays exact
    // in 64-bit for any 8-bit image up to ~2^26 pixels.
    int best_t = -1;
    double best_var = -1.0;
    std::int64_t n0 = 0, s0 = 0;
    for (int t = 0; t < 256; ++t) {
        n0 += hist[t];
        s0 += static_cast<std::int64_t>(t) * hist[t];
        const std::int64_t n1 = total - n0;
        if (n0 == 0 || n1 == 0) continue;
        const std::int64_t s1 = total_sum - s0;
        const double diff = static_cast<double>(s0 * n1 - s1 * n0);
        const double var = diff * diff / (static_cast<double>(n0) * static_cast<double>(n1));
        if (var > best_var) {
            best_var = var;
            best_t = t;
        }
    }

    OtsuResult res;
    res.mask = BinaryMask(img.width, img.height);
    if (best_t < 0) { // constant image: no split has two nonempty classes
        res.threshold = 0;
        res.degenerate = true;
        return res;
    }
    res.threshold = best_t;
    for (std::size_t i = 0; i < img.luminance.size(); ++i)
        res.mask.bits[i] = img.luminance[i] > best_t ? 1 : 0;
    return res;
}

// ---------------------------------------------------------------------------
// Morphology

namespace {

struct Offset {
    int dx, dy;
};

std::vector<Offset> se_offsets(const StructuringElement& se) {
    std::vector<Offset> offs;
    const int anchor = se.side / 2;
    for (int j = 0; j < se.side; ++j)
        for (int i = 0; i < se.side; ++i)
            if (se.get(i, j)) offs.push_back({i - anchor, j - anchor});
    if (offs.empty()) throw Error("structuring element has no cells set");
    return offs;
}

} // namespace

BinaryMask erode(const BinaryMask& mask, const StructuringElement& se) {
    const auto offs = se_offsets(se);
    BinaryMask out(mask.width, mask.height);
    for (int y = 0; y < mask.height; ++y) {
        for (int x = 0; x < mask.width; ++x) {
            bool fits = true;
            for (const auto& o : offs) {
                const int nx = x + o.dx, ny = y + o.dy;
                if (!mask.in_bounds(nx, ny) || !mask.get(nx, ny)) {
                    fits = false;
                    break;
                }
            }
            if (fits) out.set(x, y, true);
        }
    }
    return out;
}

BinaryMask dilate(const BinaryMask& mask, const StructuringElement& se) {
    const auto offs = se_offsets(se);
    BinaryMask out(mask.width, mask.height);
    for (int y = 0; y < mask.height; ++y) {
        for (int x = 0; x < mask.width; ++x) {
            for (const auto& o : offs) {
                const int nx = x + o.dx, ny = y + o.dy;
                if (mask.in_bounds(nx, ny) && mask.get(nx, ny)) {
                    out.set(x, y, true);
                    break;
                }
            }
        }
    }
    return out;
}

BinaryMask open(const BinaryMask& mask, const StructuringElement& se) {
    return dilate(erode(mask, se), se.reflected());
}

// ---------------------------------------------------------------------------
// Connected components (two-pass union-find, 8-connectivity)

namespace {

int uf_find(std::vector<int>& parent, int i) {
    while (parent[i] != i) {
        parent[i] = parent[parent[i]]; // path halving
        i = parent[i];
    }
    return i;
}

void uf_union(std::vector<int>& parent, int a, int b) {
    a = uf_find(parent, a);
    b = uf_find(parent, b);
    if (a < b)
        parent[b] = a;
    else
        parent[a] = b;
}

} // namespace

LabelMap connected_components(const BinaryMask& mask) {
    const int w = mask.width, h = mask.height;
    std::vector<int> parent(static_cast<std::size_t>(w) * h);
    for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);

    auto idx = [w](int x, int y) { return y * w + x; };
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            if (!mask.get(x, y)) continue;
            // union with the four already-scanned neighbors (W, NW, N, NE)
            static constexpr int ndx[4] = {-1, -1, 0, 1};
            static constexpr int ndy[4] = {0, -1, -1, -1};
            for (int k = 0; k < 4; ++k) {
                const int nx = x + ndx[k], ny = y + ndy[k];
                if (mask.in_bounds(nx, ny) && mask.get(nx, ny))
                    uf_union(parent, idx(x, y), idx(nx, ny));
            }
        }
    }

    LabelMap lm;
    lm.width = w;
    lm.height = h;
    lm.labels.assign(static_cast<std::size_t>(w) * h, 0);
    std::vector<int> root_label(parent.size(), 0);
    int next = 0;
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            if (!mask.get(x, y)) continue;
            const int root = uf_find(parent, idx(x, y));
            if (root_label[root] == 0) {
                root_label[root] = ++next; // raster-scan discovery order
                lm.component_areas.push_back(0);
            }
            const int label = root_label[root];
            lm.labels[static_cast<std::size_t>(idx(x, y))] = label;
            ++lm.component_areas[static_cast<std::size_t>(label) - 1];
        }
    }
    return lm;
}

BinaryMask largest_component(const LabelMap& lm, std::int64_t min_area) {
    int best = 0;
    std::int64_t best_area = 0;
    for (int k = 1; k <= lm.label_count(); ++k) {
        const std::int64_t a = lm.area(k);
        if (a < min_area) continue;
        if (a > best_area) { // strict: ties keep the smaller label
            best_area = a;
            best = k;
        }
    }
    if (best == 0)
        throw DetectionError("no component with area >= " + std::to_string(min_area));

    BinaryMask out(lm.width, lm.height);
    for (std::size_t i = 0; i < lm.labels.size(); ++i)
        out.bits[i] = lm.labels[i] == best ? 1 : 0;
    return out;
}

// ---------------------------------------------------------------------------
// Sobel

BinaryMask sobel_edges(const BinaryMask& mask) {
    const int w = mask.width, h = mask.height;
    BinaryMask out(w, h);
    auto sample = [&](int x, int y) { // replicate edge-of-image pixels
        x = x < 0 ? 0 : (x >= w ? w - 1 : x);
        y = y < 0 ? 0 : (y >= h ? h - 1 : y);
        return mask.get(x, y) ? 1 : 0;
    };
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            if (!mask.get(x, y)) continue;
            const int gx = (sample(x + 1, y - 1) + 2 * sample(x + 1, y) + sample(x + 1, y + 1)) -
                           (sample(x - 1, y - 1) + 2 * sample(x - 1, y) + sample(x - 1, y + 1));
            const int gy = (sample(x - 1, y + 1) + 2 * sample(x, y + 1) + sample(x + 1, y + 1)) -
                           (sample(x - 1, y - 1) + 2 * sample(x, y - 1) + sample(x + 1, y - 1));
            if (gx != 0 || gy != 0) out.set(x, y, true);
        }
    }
    return out;
}

} // namespace mammo
