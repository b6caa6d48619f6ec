#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "texdesc/feature.hpp"
#include "texdesc/image.hpp"

namespace texdesc {

// Transform output with the same dimensions as the source image; (a, b)
// indexes the x- and y-frequency.
template <typename T>
struct CoefficientGrid {
    int width = 0;
    int height = 0;
    std::vector<T> values;

    T at(int a, int b) const {
        return values[static_cast<std::size_t>(b) * width + a];
    }
};

using DctGrid = CoefficientGrid<double>;
using DftGrid = CoefficientGrid<std::complex<double>>;

// F(a,b) = 1/sqrt(MN) * alpha(a) alpha(b) *
//          sum_{x,y} f(x,y) cos((2x+1) a pi / 2M) cos((2y+1) b pi / 2N)
// with alpha(0) = 1/sqrt(2) and alpha(J != 0) = 1; M = width, N = height.
DctGrid dct2(const GrayImage& img);

// Unnormalized forward transform
// F(a,b) = sum_{x,y} I(x,y) e^{-i 2 pi a x / M} e^{-i 2 pi b y / N}.
DftGrid dft2(const GrayImage& img);

// Zigzag enumeration of an M x N index grid starting at (0,0): antidiagonals
// a+b = s in order, walked with a ascending for odd s and descending for
// even s.
std::vector<std::pair<int, int>> zigzag_order(int m, int n);

// First k DCT coefficients in zigzag order.
FeatureVector dct_features(const GrayImage& img, std::size_t k);

// Magnitudes of the k lowest-frequency DFT coefficients, ordered by
// fa^2 + fb^2 with indices folded to [-M/2, M/2), ties broken by raw (a, b).
FeatureVector dft_features(const GrayImage& img, std::size_t k);

}  // namespace texdesc
