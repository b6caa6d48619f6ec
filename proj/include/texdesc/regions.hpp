#pragma once

#include <array>
#include <string>
#include <vector>

#include "texdesc/feature.hpp"
#include "texdesc/image.hpp"
#include "texdesc/lbp.hpp"
#include "texdesc/wld.hpp"

namespace texdesc {

enum class DescriptorBase { Lbp, RiLbp, Wld, Wldri, Glcm, Dct, Dft };

// One protocol feature set: a base descriptor, the scales it runs at,
// whether it is extracted per cog quadrant, and whether the matching WLD
// histogram is concatenated after each LBP block (the Weber fusion; only
// valid for the LBP bases, rotation invariance follows the base).
struct DescriptorConfig {
    DescriptorBase base = DescriptorBase::RiLbp;
    std::vector<NeighborhoodSpec> scales = {{8, 1.0}};
    bool cog = false;
    bool fuse_weber = false;

    int glcm_distance = 1;
    int glcm_levels = 16;
    std::size_t spectral_k = 64;
    WldQuantization wld_q;

    // Canonical form, e.g. "cogriWeberLBP@8,1+16,2+24,3", "GLCM@d1,l16",
    // "DCT@k64".
    std::string to_string() const;
    static DescriptorConfig parse(const std::string& text);
};

// Intensity-weighted centroid; falls back to the geometric center
// ((W-1)/2, (H-1)/2) for an all-zero image.
struct CogPoint {
    double cx = 0.0;
    double cy = 0.0;
};

CogPoint center_of_gravity(const GrayImage& img);

// Geometric center, available for comparison runs.
CogPoint geometric_center(const GrayImage& img);

// Quadrants [top-left, top-right, bottom-left, bottom-right], split at
// (round(cx), round(cy)) with round-half-up. The quadrants tile the image
// exactly. Throws DegenerateSplit when any quadrant side is below min_side.
std::array<GrayImage, 4> split_quadrants(const GrayImage& img, const CogPoint& c,
                                         int min_side = 1);

// Closed-form dimension of extract(img, cfg).
std::size_t expected_dimension(const DescriptorConfig& cfg);

// Concatenation order: quadrant-major (TL, TR, BL, BR), scale-major within a
// quadrant, LBP block before WLD block when fused.
FeatureVector extract(const GrayImage& img, const DescriptorConfig& cfg);

// The full dimension table of every protocol feature set.
struct LedgerRow {
    std::string group;   // "single", "multi", "cog", "cogmulti"
    std::string config;  // canonical string
    std::size_t dimension;
};
std::vector<LedgerRow> dimension_ledger();

}  // namespace texdesc
