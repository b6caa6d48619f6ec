#pragma once

// Internal helpers for ring sampling. The bilinear weights depend only on
// the ring offset, never on the center, so histogram loops precompute one
// TapWeights per ring position.

#include <cmath>

#include "texdesc/image.hpp"
#include "texdesc/lbp.hpp"

namespace texdesc::detail {

struct TapWeights {
    int ix0 = 0, iy0 = 0, ix1 = 0, iy1 = 0;  // relative pixel indices
    double w00 = 0, w10 = 0, w01 = 0, w11 = 0;
};

inline TapWeights make_tap(const RingOffset& off) {
    TapWeights t;
    const double fx0 = std::floor(off.dx);
    const double fy0 = std::floor(off.dy);
    t.ix0 = static_cast<int>(fx0);
    t.iy0 = static_cast<int>(fy0);
    const double fx = off.dx - fx0;
    const double fy = off.dy - fy0;
    // zero-weight taps reuse the base index so reads stay in bounds
    t.ix1 = fx == 0.0 ? t.ix0 : t.ix0 + 1;
    t.iy1 = fy == 0.0 ? t.iy0 : t.iy0 + 1;
    t.w00 = (1.0 - fx) * (1.0 - fy);
    t.w10 = fx * (1.0 - fy);
    t.w01 = (1.0 - fx) * fy;
    t.w11 = fx * fy;
    return t;
}

inline double sample_tap(const GrayImage& img, int xc, int yc, const TapWeights& t) {
    return t.w00 * img.at(xc + t.ix0, yc + t.iy0) + t.w10 * img.at(xc + t.ix1, yc + t.iy0) +
           t.w01 * img.at(xc + t.ix0, yc + t.iy1) + t.w11 * img.at(xc + t.ix1, yc + t.iy1);
}

inline int interior_margin(double R) { return static_cast<int>(std::ceil(R)); }

}  // namespace texdesc::detail
