#pragma once

#include <vector>

#include "texdesc/feature.hpp"
#include "texdesc/image.hpp"

namespace texdesc {

enum class GlcmDirection { Deg0, Deg45, Deg90, Deg135 };

// Normalized symmetric co-occurrence matrix: probs is levels x levels,
// row-major, sums to 1, equals its own transpose.
struct CooccurrenceMatrix {
    int levels = 0;
    std::vector<double> probs;
    int distance = 1;
    GlcmDirection direction = GlcmDirection::Deg0;

    double at(int i, int j) const {
        return probs[static_cast<std::size_t>(i) * levels + j];
    }
};

// Intensities are requantized as floor(v * levels / 256); pairs are counted
// for the (d, direction) offset and its negation.
CooccurrenceMatrix glcm_matrix(const GrayImage& img, int distance, GlcmDirection direction,
                               int levels);

// The sixteen statistics, in order: Energy, Entropy, Inertia, Inverse
// Difference Moment, Sum Average, Sum of Square Variance, Sum Entropy,
// Difference Average, Difference Variance, Difference Entropy, Contrast,
// Correlation, Information Measure of Correlation 1 and 2, Cluster
// Prominence, Cluster Shade. Logs are base 2 with 0*log(0) = 0; the
// correlation of a zero-variance matrix is defined as 0. The exact formulas
// are spelled out in glcm.cpp.
FeatureVector haralick_features(const CooccurrenceMatrix& m);

// Concatenation over directions 0, 45, 90, 135 degrees; dimension 64.
FeatureVector glcm_feature_vector(const GrayImage& img, int distance, int levels);

}  // namespace texdesc
