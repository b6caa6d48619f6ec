#pragma once

#include <span>

#include "texdesc/feature.hpp"
#include "texdesc/image.hpp"
#include "texdesc/lbp.hpp"

namespace texdesc {

// Bin counts for the 2-D excitation x orientation histogram.
struct WldQuantization {
    int excitation_bins = 6;
    int orientation_bins = 8;
};

// Differential excitation: arctan of the summed relative differences between
// the neighbor samples and the center, with each denominator clamped to at
// least 1. The terms are summed in ascending order so the result does not
// depend on where the neighbor enumeration starts.
double differential_excitation(std::span<const double> neighbors, double center);

// Image-level form over the P ring samples of lbp::sample_neighbors.
double differential_excitation(const GrayImage& img, int xc, int yc,
                               const NeighborhoodSpec& spec);

// Raw gradient angle in [0, 2*pi) from the four compass samples at radius R:
//   dI_h = I(x - R, y) - I(x + R, y),  dI_v = I(x, y + R) - I(x, y - R)
//   theta' = atan2(dI_h, dI_v) + pi, wrapped; 0 when both differences vanish.
double orientation(const GrayImage& img, int xc, int yc, const NeighborhoodSpec& spec);

// t = mod(floor(theta' / (2*pi/bins) + 1/2), bins), theta' in [0, 2*pi).
int quantize_orientation(double theta_prime, int bins);

// Rotation-invariant orientation: the compass filter is evaluated at all P
// cyclic shifts of the ring indexing and the minimum raw angle is returned.
// Requires P divisible by 4; under 90-degree image rotation the shift family
// is permuted, so the minimum is preserved exactly.
double orientation_ri(const GrayImage& img, int xc, int yc, const NeighborhoodSpec& spec);

// L1-normalized 2-D histogram flattened excitation-major; the excitation
// axis is split into equal-width bins over (-pi/2, pi/2).
FeatureVector wld_histogram(const GrayImage& img, const NeighborhoodSpec& spec,
                            const WldQuantization& q, bool rotation_invariant);

}  // namespace texdesc
