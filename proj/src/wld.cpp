#include "texdesc/wld.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "ring_tap.hpp"

namespace texdesc {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

void check_border(const GrayImage& img, int xc, int yc, double R) {
    if (xc - R < 0 || yc - R < 0 || xc + R > img.width - 1 || yc + R > img.height - 1)
        throw BorderViolation("neighborhood disk leaves the image");
}

void check_quantization(const WldQuantization& q) {
    if (q.excitation_bins < 1 || q.orientation_bins < 1)
        throw InvalidArgument("WldQuantization: bin counts must be positive");
}

double wrap_angle(double a) {
    if (a >= kTwoPi) a -= kTwoPi;
    if (a < 0) a += kTwoPi;
    return a;
}


double raw_angle(double num, double den) {
    if (num == 0.0 && den == 0.0)
        return 0.0;
    return wrap_angle(std::atan2(num, den) + kPi);
}

// min over the P cyclic shifts of the compass filter applied to the ring
double min_shift_angle(const std::vector<double>& s, int P) {
    const int q = P / 4;
    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i < P; ++i) {
        const double num = s[(i + 2 * q) % P] - s[i];
        const double den = s[(i + q) % P] - s[(i + 3 * q) % P];
        best = std::min(best, raw_angle(num, den));
    }
    return best;
}

}  // namespace

double differential_excitation(std::span<const double> neighbors, double center) {
    std::vector<double> terms(neighbors.size());
    for (std::size_t i = 0; i < neighbors.size(); ++i)
        terms[i] = (neighbors[i] - center) / std::max(neighbors[i], 1.0);
    std::sort(terms.begin(), terms.end());
    double sum = 0.0;
    for (double t : terms)
        sum += t;
    return std::atan(sum);
}

double differential_excitation(const GrayImage& img, int xc, int yc,
                               const NeighborhoodSpec& spec) {
    const auto samples = sample_neighbors(img, xc, yc, spec);
    return differential_excitation(samples, img.at(xc, yc));
}

double orientation(const GrayImage& img, int xc, int yc, const NeighborhoodSpec& spec) {
    check_border(img, xc, yc, spec.R);
    const double left = bilinear_at(img, xc - spec.R, yc);
    const double right = bilinear_at(img, xc + spec.R, yc);
    const double down = bilinear_at(img, xc, yc + spec.R);
    const double up = bilinear_at(img, xc, yc - spec.R);
    return raw_angle(left - right, down - up);
}

int quantize_orientation(double theta_prime, int bins) {
    if (bins < 1)
        throw InvalidArgument("quantize_orientation: bins must be positive");
    const double cell = kTwoPi / bins;
    const long t = static_cast<long>(std::floor(theta_prime / cell + 0.5)) % bins;
    return static_cast<int>(t < 0 ? t + bins : t);
}

double orientation_ri(const GrayImage& img, int xc, int yc, const NeighborhoodSpec& spec) {
    if (spec.P % 4 != 0)
        throw InvalidArgument("orientation_ri requires P divisible by 4");
    const auto samples = sample_neighbors(img, xc, yc, spec);
    return min_shift_angle(samples, spec.P);
}

FeatureVector wld_histogram(const GrayImage& img, const NeighborhoodSpec& spec,
                            const WldQuantization& q, bool rotation_invariant) {
    check_quantization(q);
    if (rotation_invariant && spec.P % 4 != 0)
        throw InvalidArgument("rotation-invariant WLD requires P divisible by 4");
    const int margin = detail::interior_margin(spec.R);
    if (img.width < 2 * margin + 1 || img.height < 2 * margin + 1)
        throw ImageTooSmall("image smaller than the neighborhood margin");

    const auto offsets = ring_offsets(spec);
    std::vector<detail::TapWeights> taps(offsets.size());
    for (std::size_t p = 0; p < offsets.size(); ++p)
        taps[p] = detail::make_tap(offsets[p]);
    const bool axes_on_ring = spec.P % 4 == 0;
    const int quarter = spec.P / 4;

    FeatureVector fv;
    fv.descriptor = (rotation_invariant ? "WLDRI@" : "WLD@") + scale_string(spec);
    fv.values.assign(static_cast<std::size_t>(q.excitation_bins) * q.orientation_bins, 0.0);

    const double exc_cell = kPi / q.excitation_bins;
    std::vector<double> samples(spec.P);
    std::vector<double> terms(spec.P);
    std::size_t count = 0;
    for (int y = margin; y < img.height - margin; ++y) {
        for (int x = margin; x < img.width - margin; ++x) {
            for (int p = 0; p < spec.P; ++p)
                samples[p] = detail::sample_tap(img, x, y, taps[p]);

            const double center = img.at(x, y);
            for (int p = 0; p < spec.P; ++p)
                terms[p] = (samples[p] - center) / std::max(samples[p], 1.0);
            std::sort(terms.begin(), terms.end());
            double sum = 0.0;
            for (double t : terms)
                sum += t;
            const double xi = std::atan(sum);

            int ebin = static_cast<int>(std::floor((xi + kPi / 2) / exc_cell));
            if (ebin < 0) ebin = 0;
            if (ebin >= q.excitation_bins) ebin = q.excitation_bins - 1;

            double theta;
            if (rotation_invariant) {
                theta = min_shift_angle(samples, spec.P);
            } else if (axes_on_ring) {
                theta = raw_angle(samples[2 * quarter] - samples[0],
                                  samples[quarter] - samples[3 * quarter]);
            } else {
                theta = orientation(img, x, y, spec);
            }
            const int t = quantize_orientation(theta, q.orientation_bins);
            fv.values[static_cast<std::size_t>(ebin) * q.orientation_bins + t] += 1.0;
            ++count;
        }
    }
    for (double& v : fv.values)
        v /= static_cast<double>(count);
    return fv;
}

}  // namespace texdesc
