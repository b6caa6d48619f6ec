#include "texdesc/lbp.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <optional>

#include "ring_tap.hpp"

namespace texdesc {

using detail::interior_margin;
using detail::make_tap;
using detail::sample_tap;
using detail::TapWeights;

namespace {

constexpr double kOffsetGrid = 1048576.0;  // 2^20

void validate_spec(const NeighborhoodSpec& spec) {
    if (spec.P < 4 || spec.P > 30)
        throw InvalidArgument("NeighborhoodSpec: P must be in [4, 30]");
    if (!(spec.R > 0.0))
        throw InvalidArgument("NeighborhoodSpec: R must be positive");
}

double quantize(double v) { return std::round(v * kOffsetGrid) / kOffsetGrid; }

}  // namespace

std::string scale_string(const NeighborhoodSpec& spec) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%d,%g", spec.P, spec.R);
    return buf;
}

std::vector<RingOffset> ring_offsets(const NeighborhoodSpec& spec) {
    validate_spec(spec);
    std::vector<RingOffset> off(spec.P);
    const double step = 2.0 * std::numbers::pi / spec.P;
    if (spec.P % 4 == 0) {
        const int q = spec.P / 4;
        for (int p = 0; p < q; ++p)
            off[p] = {quantize(spec.R * std::cos(step * p)),
                      quantize(spec.R * std::sin(step * p))};
        for (int p = q; p < spec.P; ++p)
            off[p] = {-off[p - q].dy, off[p - q].dx};
    } else {
        for (int p = 0; p < spec.P; ++p)
            off[p] = {quantize(spec.R * std::cos(step * p)),
                      quantize(spec.R * std::sin(step * p))};
    }
    return off;
}

double bilinear_at(const GrayImage& img, double x, double y) {
    if (x < 0) x = 0;
    if (y < 0) y = 0;
    if (x > img.width - 1) x = img.width - 1;
    if (y > img.height - 1) y = img.height - 1;
    const double fx0 = std::floor(x);
    const double fy0 = std::floor(y);
    const int x0 = static_cast<int>(fx0);
    const int y0 = static_cast<int>(fy0);
    const double fx = x - fx0;
    const double fy = y - fy0;
    const int x1 = x0 + 1 < img.width ? x0 + 1 : x0;
    const int y1 = y0 + 1 < img.height ? y0 + 1 : y0;
    return (1.0 - fx) * (1.0 - fy) * img.at(x0, y0) + fx * (1.0 - fy) * img.at(x1, y0) +
           (1.0 - fx) * fy * img.at(x0, y1) + fx * fy * img.at(x1, y1);
}

std::vector<double> sample_neighbors(const GrayImage& img, int xc, int yc,
                                     const NeighborhoodSpec& spec) {
    validate_spec(spec);
    if (xc - spec.R < 0 || yc - spec.R < 0 || xc + spec.R > img.width - 1 ||
        yc + spec.R > img.height - 1)
        throw BorderViolation("neighborhood disk leaves the image");
    const auto offsets = ring_offsets(spec);
    std::vector<double> out(spec.P);
    for (int p = 0; p < spec.P; ++p) {
        const TapWeights t = make_tap(offsets[p]);
        out[p] = sample_tap(img, xc, yc, t);
    }
    return out;
}

std::uint32_t lbp_code(std::span<const double> neighbors, double center) {
    std::uint32_t code = 0;
    for (std::size_t p = 0; p < neighbors.size(); ++p)
        if (neighbors[p] >= center)
            code |= std::uint32_t{1} << p;
    return code;
}

std::uint32_t min_rotation(std::uint32_t code, int P) {
    const std::uint64_t mask = (std::uint64_t{1} << P) - 1;
    const std::uint64_t c = code & mask;
    std::uint64_t best = c;
    for (int i = 1; i < P; ++i) {
        const std::uint64_t rotated = ((c >> i) | (c << (P - i))) & mask;
        best = std::min(best, rotated);
    }
    return static_cast<std::uint32_t>(best);
}

int uniformity(std::uint32_t code, int P) {
    int transitions = 0;
    for (int p = 0; p < P; ++p) {
        const int bit = (code >> p) & 1;
        const int prev = (code >> ((p + P - 1) % P)) & 1;
        transitions += bit != prev;
    }
    return transitions;
}

int riu2_bin(std::uint32_t code, int P) {
    if (uniformity(code, P) <= 2)
        return std::popcount(code);
    return P + 1;
}

U2Table::U2Table(int P) {
    uniform_codes_.reserve(static_cast<std::size_t>(P) * (P - 1) + 2);
    const std::uint64_t mask = (std::uint64_t{1} << P) - 1;
    uniform_codes_.push_back(0);
    uniform_codes_.push_back(static_cast<std::uint32_t>(mask));
    for (int ones = 1; ones < P; ++ones) {
        const std::uint64_t run = (std::uint64_t{1} << ones) - 1;
        for (int r = 0; r < P; ++r)
            uniform_codes_.push_back(
                static_cast<std::uint32_t>(((run << r) | (run >> (P - r))) & mask));
    }
    std::sort(uniform_codes_.begin(), uniform_codes_.end());
}

int U2Table::bin(std::uint32_t code) const {
    const auto it = std::lower_bound(uniform_codes_.begin(), uniform_codes_.end(), code);
    if (it != uniform_codes_.end() && *it == code)
        return static_cast<int>(it - uniform_codes_.begin());
    return static_cast<int>(uniform_codes_.size());
}

std::size_t lbp_histogram_size(int P, LbpVariant variant) {
    if (variant == LbpVariant::U2)
        return static_cast<std::size_t>(P) * (P - 1) + 3;
    return static_cast<std::size_t>(P) + 2;
}

FeatureVector lbp_histogram(const GrayImage& img, const NeighborhoodSpec& spec,
                            LbpVariant variant) {
    validate_spec(spec);
    const int margin = interior_margin(spec.R);
    if (img.width < 2 * margin + 1 || img.height < 2 * margin + 1)
        throw ImageTooSmall("image smaller than the neighborhood margin");

    const auto offsets = ring_offsets(spec);
    std::vector<TapWeights> taps(offsets.size());
    for (std::size_t p = 0; p < offsets.size(); ++p)
        taps[p] = make_tap(offsets[p]);

    std::optional<U2Table> u2;
    if (variant == LbpVariant::U2)
        u2.emplace(spec.P);

    FeatureVector fv;
    fv.descriptor = (variant == LbpVariant::U2 ? "LBP@" : "riLBP@") + scale_string(spec);
    fv.values.assign(lbp_histogram_size(spec.P, variant), 0.0);

    std::size_t count = 0;
    for (int y = margin; y < img.height - margin; ++y) {
        for (int x = margin; x < img.width - margin; ++x) {
            const double center = img.at(x, y);
            std::uint32_t code = 0;
            for (int p = 0; p < spec.P; ++p)
                if (sample_tap(img, x, y, taps[p]) >= center)
                    code |= std::uint32_t{1} << p;
            const int bin = variant == LbpVariant::U2 ? u2->bin(code) : riu2_bin(code, spec.P);
            fv.values[static_cast<std::size_t>(bin)] += 1.0;
            ++count;
        }
    }
    for (double& v : fv.values)
        v /= static_cast<double>(count);
    return fv;
}

}  // namespace texdesc
