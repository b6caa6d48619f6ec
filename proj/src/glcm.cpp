#include "texdesc/glcm.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

// Statistic definitions, for a normalized symmetric GLCM p(i,j) over L
// levels with marginals p_x(i) = sum_j p(i,j) (= p_y by symmetry),
// mu = sum_i i p_x(i), sigma^2 = sum_i (i-mu)^2 p_x(i),
// p_sum(k) = sum_{i+j=k} p(i,j), p_diff(k) = sum_{|i-j|=k} p(i,j):
//
//   Energy                   sum p(i,j)^2
//   Entropy                  -sum p(i,j) log2 p(i,j)
//   Inertia                  sum (i-j)^2 p(i,j)
//   Inverse Difference Mom.  sum p(i,j) / (1 + (i-j)^2)
//   Sum Average              sum_k k p_sum(k)
//   Sum of Square Variance   sum (i-mu)^2 p(i,j)
//   Sum Entropy              -sum_k p_sum(k) log2 p_sum(k)
//   Difference Average       sum_k k p_diff(k)
//   Difference Variance      sum_k (k - DiffAvg)^2 p_diff(k)
//   Difference Entropy       -sum_k p_diff(k) log2 p_diff(k)
//   Contrast                 sum (i-j)^2 p(i,j)   (the classical synonym of inertia)
//   Correlation              (sum i*j*p(i,j) - mu^2) / sigma^2, 0 when sigma = 0
//   Info. Corr. 1            (HXY - HXY1) / max(HX, HY), 0 when the max is 0
//   Info. Corr. 2            sqrt(1 - exp(-2 (HXY2 - HXY)))
//   Cluster Prominence       sum (i + j - 2 mu)^4 p(i,j)
//   Cluster Shade            sum (i + j - 2 mu)^3 p(i,j)
//
// where HXY is the entropy, HX = HY the marginal entropy,
// HXY1 = -sum p(i,j) log2(p_x(i) p_y(j)) and
// HXY2 = -sum p_x(i) p_y(j) log2(p_x(i) p_y(j)).

namespace texdesc {

namespace {

double plog2(double p) { return p > 0.0 ? p * std::log2(p) : 0.0; }

void direction_offset(GlcmDirection dir, int d, int* dx, int* dy) {
    switch (dir) {
        case GlcmDirection::Deg0: *dx = d; *dy = 0; break;
        case GlcmDirection::Deg45: *dx = d; *dy = -d; break;
        case GlcmDirection::Deg90: *dx = 0; *dy = -d; break;
        case GlcmDirection::Deg135: *dx = -d; *dy = -d; break;
    }
}

}  // namespace

CooccurrenceMatrix glcm_matrix(const GrayImage& img, int distance, GlcmDirection direction,
                               int levels) {
    if (levels < 2 || levels > 256)
        throw BadLevels("levels must be in [2, 256]");
    if (distance < 1)
        throw InvalidArgument("distance must be at least 1");

    int dx = 0, dy = 0;
    direction_offset(direction, distance, &dx, &dy);

    CooccurrenceMatrix m;
    m.levels = levels;
    m.distance = distance;
    m.direction = direction;
    m.probs.assign(static_cast<std::size_t>(levels) * levels, 0.0);

    std::vector<long> counts(m.probs.size(), 0);
    long total = 0;
    const int x_lo = std::max(0, -dx);
    const int x_hi = img.width - std::max(0, dx);
    const int y_lo = std::max(0, -dy);
    const int y_hi = img.height - std::max(0, dy);
    for (int y = y_lo; y < y_hi; ++y) {
        for (int x = x_lo; x < x_hi; ++x) {
            const int i = img.at(x, y) * levels >> 8;
            const int j = img.at(x + dx, y + dy) * levels >> 8;
            counts[static_cast<std::size_t>(i) * levels + j] += 1;
            counts[static_cast<std::size_t>(j) * levels + i] += 1;
            total += 2;
        }
    }
    if (total == 0)
        throw ImageTooSmall("no pixel pair fits the requested offset");
    for (std::size_t k = 0; k < counts.size(); ++k)
        m.probs[k] = static_cast<double>(counts[k]) / static_cast<double>(total);
    return m;
}

FeatureVector haralick_features(const CooccurrenceMatrix& m) {
    const int L = m.levels;
    if (L < 1 || m.probs.size() != static_cast<std::size_t>(L) * L)
        throw InvalidArgument("malformed co-occurrence matrix");

    std::vector<double> px(L, 0.0);
    std::vector<double> psum(2 * L - 1, 0.0);
    std::vector<double> pdiff(L, 0.0);
    for (int i = 0; i < L; ++i) {
        for (int j = 0; j < L; ++j) {
            const double p = m.at(i, j);
            px[i] += p;
            psum[i + j] += p;
            pdiff[std::abs(i - j)] += p;
        }
    }

    double mu = 0.0;
    for (int i = 0; i < L; ++i)
        mu += i * px[i];
    double sigma2 = 0.0;
    for (int i = 0; i < L; ++i)
        sigma2 += (i - mu) * (i - mu) * px[i];

    double energy = 0.0, entropy = 0.0, inertia = 0.0, idm = 0.0;
    double variance = 0.0, cross = 0.0, hxy1 = 0.0;
    double prominence = 0.0, shade = 0.0;
    for (int i = 0; i < L; ++i) {
        for (int j = 0; j < L; ++j) {
            const double p = m.at(i, j);
            const double dij = i - j;
            energy += p * p;
            entropy -= plog2(p);
            inertia += dij * dij * p;
            idm += p / (1.0 + dij * dij);
            variance += (i - mu) * (i - mu) * p;
            cross += static_cast<double>(i) * j * p;
            const double marg = px[i] * px[j];
            if (p > 0.0 && marg > 0.0)
                hxy1 -= p * std::log2(marg);
            const double c = i + j - 2.0 * mu;
            prominence += c * c * c * c * p;
            shade += c * c * c * p;
        }
    }

    double sum_avg = 0.0, sum_entropy = 0.0;
    for (int k = 0; k < 2 * L - 1; ++k) {
        sum_avg += k * psum[k];
        sum_entropy -= plog2(psum[k]);
    }
    double diff_avg = 0.0, diff_entropy = 0.0;
    for (int k = 0; k < L; ++k) {
        diff_avg += k * pdiff[k];
        diff_entropy -= plog2(pdiff[k]);
    }
    double diff_var = 0.0;
    for (int k = 0; k < L; ++k)
        diff_var += (k - diff_avg) * (k - diff_avg) * pdiff[k];

    const double correlation = sigma2 > 0.0 ? (cross - mu * mu) / sigma2 : 0.0;

    double hx = 0.0;
    for (int i = 0; i < L; ++i)
        hx -= plog2(px[i]);
    double hxy2 = 0.0;
    for (int i = 0; i < L; ++i)
        for (int j = 0; j < L; ++j)
            hxy2 -= plog2(px[i] * px[j]);
    const double imc1 = hx > 0.0 ? (entropy - hxy1) / hx : 0.0;
    const double imc2_arg = 1.0 - std::exp(-2.0 * (hxy2 - entropy));
    const double imc2 = std::sqrt(std::max(0.0, imc2_arg));

    FeatureVector fv;
    fv.descriptor = "haralick16";
    fv.values = {energy,   entropy,      inertia, idm,         sum_avg, variance,
                 sum_entropy, diff_avg,  diff_var, diff_entropy, inertia, correlation,
                 imc1,     imc2,         prominence, shade};
    return fv;
}

FeatureVector glcm_feature_vector(const GrayImage& img, int distance, int levels) {
    FeatureVector fv;
    char tag[48];
    std::snprintf(tag, sizeof(tag), "GLCM@d%d,l%d", distance, levels);
    fv.descriptor = tag;
    fv.values.reserve(64);
    for (GlcmDirection dir : {GlcmDirection::Deg0, GlcmDirection::Deg45, GlcmDirection::Deg90,
                              GlcmDirection::Deg135}) {
        const auto block = haralick_features(glcm_matrix(img, distance, dir, levels));
        fv.values.insert(fv.values.end(), block.values.begin(), block.values.end());
    }
    return fv;
}

}  // namespace texdesc
