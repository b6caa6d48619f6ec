#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "texdesc/feature.hpp"
#include "texdesc/image.hpp"

namespace texdesc {

// Circular neighborhood: P samples on a ring of radius R around the center.
struct NeighborhoodSpec {
    int P = 8;
    double R = 1.0;
};

// "P,R" with R printed minimally, e.g. "16,2" or "8,1.5".
std::string scale_string(const NeighborhoodSpec& spec);

enum class LbpVariant {
    U2,    // each uniform code gets its own bin, one shared non-uniform bin
    RIU2,  // uniform codes binned by popcount, one shared non-uniform bin
};

struct RingOffset {
    double dx = 0.0;
    double dy = 0.0;
};

// Sample offsets for the ring. Offset p sits at angle 2*pi*p/P from the +x
// axis, with y growing downward. Coordinates are quantized to multiples of
// 2^-20, and when P is divisible by 4 the later quadrants are built as exact
// 90-degree rotations (-dy, dx) of the first. Together with 8-bit pixels this
// keeps every bilinear sample value exact in double arithmetic, so ring
// descriptors are bit-identical under 90-degree image rotations.
std::vector<RingOffset> ring_offsets(const NeighborhoodSpec& spec);

// Bilinear read at real coordinates; coordinates are clamped to the image.
double bilinear_at(const GrayImage& img, double x, double y);

// The P ring samples around (xc, yc); integer sample positions read the
// pixel exactly. Throws BorderViolation when the radius-R disk leaves the
// image.
std::vector<double> sample_neighbors(const GrayImage& img, int xc, int yc,
                                     const NeighborhoodSpec& spec);

// Bit p is set iff neighbors[p] >= center.
std::uint32_t lbp_code(std::span<const double> neighbors, double center);

// Minimum over all P circular bit-rotations of code.
std::uint32_t min_rotation(std::uint32_t code, int P);

// Number of circular 0<->1 transitions in the bit pattern.
int uniformity(std::uint32_t code, int P);

// popcount(code) for uniform codes (U <= 2), P+1 otherwise.
int riu2_bin(std::uint32_t code, int P);

// Bin lookup for uniform-u2 histograms. Uniform codes in increasing numeric
// order get bins 0 .. P(P-1)+1; all non-uniform codes share the last bin.
class U2Table {
public:
    explicit U2Table(int P);
    int bin(std::uint32_t code) const;
    int bins() const { return static_cast<int>(uniform_codes_.size()) + 1; }
    const std::vector<std::uint32_t>& uniform_codes() const { return uniform_codes_; }

private:
    std::vector<std::uint32_t> uniform_codes_;  // sorted
};

// U2: P(P-1)+3 bins; RIU2: P+2 bins.
std::size_t lbp_histogram_size(int P, LbpVariant variant);

// L1-normalized code histogram over every center whose neighborhood fits
// (interior margin ceil(R)).
FeatureVector lbp_histogram(const GrayImage& img, const NeighborhoodSpec& spec,
                            LbpVariant variant);

}  // namespace texdesc
