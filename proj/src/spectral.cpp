#include "texdesc/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <numeric>

namespace texdesc {

namespace {

constexpr double kPi = std::numbers::pi;

void check_nonempty(const GrayImage& img) {
    if (img.width < 1 || img.height < 1)
        throw InvalidArgument("transform of an empty image");
}

}  // namespace

DctGrid dct2(const GrayImage& img) {
    check_nonempty(img);
    const int M = img.width;
    const int N = img.height;

    // cosine tables: cm[a][x] = cos((2x+1) a pi / 2M), cn[b][y] likewise
    std::vector<double> cm(static_cast<std::size_t>(M) * M);
    for (int a = 0; a < M; ++a)
        for (int x = 0; x < M; ++x)
            cm[static_cast<std::size_t>(a) * M + x] = std::cos((2 * x + 1) * a * kPi / (2.0 * M));
    std::vector<double> cn(static_cast<std::size_t>(N) * N);
    for (int b = 0; b < N; ++b)
        for (int y = 0; y < N; ++y)
            cn[static_cast<std::size_t>(b) * N + y] = std::cos((2 * y + 1) * b * kPi / (2.0 * N));

    // column pass: g[b][x] = sum_y f(x,y) cn[b][y]
    std::vector<double> g(static_cast<std::size_t>(N) * M, 0.0);
    for (int b = 0; b < N; ++b) {
        const double* cb = &cn[static_cast<std::size_t>(b) * N];
        for (int y = 0; y < N; ++y) {
            const double w = cb[y];
            for (int x = 0; x < M; ++x)
                g[static_cast<std::size_t>(b) * M + x] += w * img.at(x, y);
        }
    }

    DctGrid out;
    out.width = M;
    out.height = N;
    out.values.assign(static_cast<std::size_t>(M) * N, 0.0);
    const double norm = 1.0 / std::sqrt(static_cast<double>(M) * N);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    for (int b = 0; b < N; ++b) {
        for (int a = 0; a < M; ++a) {
            const double* ca = &cm[static_cast<std::size_t>(a) * M];
            const double* gb = &g[static_cast<std::size_t>(b) * M];
            double sum = 0.0;
            for (int x = 0; x < M; ++x)
                sum += ca[x] * gb[x];
            const double alpha = (a == 0 ? inv_sqrt2 : 1.0) * (b == 0 ? inv_sqrt2 : 1.0);
            out.values[static_cast<std::size_t>(b) * M + a] = norm * alpha * sum;
        }
    }
    return out;
}

DftGrid dft2(const GrayImage& img) {
    check_nonempty(img);
    const int M = img.width;
    const int N = img.height;
    using cplx = std::complex<double>;

    // twiddle tables: wm[a*x mod M], wn[b*y mod N]
    std::vector<cplx> wm(M), wn(N);
    for (int k = 0; k < M; ++k)
        wm[k] = std::polar(1.0, -2.0 * kPi * k / M);
    for (int k = 0; k < N; ++k)
        wn[k] = std::polar(1.0, -2.0 * kPi * k / N);

    // column pass: g[b][x] = sum_y I(x,y) wn[(b*y) mod N]
    std::vector<cplx> g(static_cast<std::size_t>(N) * M, cplx{0.0, 0.0});
    for (int b = 0; b < N; ++b) {
        for (int y = 0; y < N; ++y) {
            const cplx w = wn[static_cast<std::size_t>(b) * y % N];
            for (int x = 0; x < M; ++x)
                g[static_cast<std::size_t>(b) * M + x] += w * static_cast<double>(img.at(x, y));
        }
    }

    DftGrid out;
    out.width = M;
    out.height = N;
    out.values.assign(static_cast<std::size_t>(M) * N, cplx{0.0, 0.0});
    for (int b = 0; b < N; ++b) {
        for (int a = 0; a < M; ++a) {
            cplx sum{0.0, 0.0};
            const cplx* gb = &g[static_cast<std::size_t>(b) * M];
            for (int x = 0; x < M; ++x)
                sum += wm[static_cast<std::size_t>(a) * x % M] * gb[x];
            out.values[static_cast<std::size_t>(b) * M + a] = sum;
        }
    }
    return out;
}

std::vector<std::pair<int, int>> zigzag_order(int m, int n) {
    if (m < 1 || n < 1)
        throw InvalidArgument("zigzag over an empty grid");
    std::vector<std::pair<int, int>> order;
    order.reserve(static_cast<std::size_t>(m) * n);
    for (int s = 0; s <= m + n - 2; ++s) {
        const int lo = std::max(0, s - (n - 1));
        const int hi = std::min(m - 1, s);
        if (s % 2 == 1) {
            for (int a = lo; a <= hi; ++a)
                order.emplace_back(a, s - a);
        } else {
            for (int a = hi; a >= lo; --a)
                order.emplace_back(a, s - a);
        }
    }
    return order;
}

FeatureVector dct_features(const GrayImage& img, std::size_t k) {
    check_nonempty(img);
    if (k > static_cast<std::size_t>(img.width) * img.height)
        throw BadK("k exceeds the coefficient count");
    const DctGrid grid = dct2(img);
    const auto order = zigzag_order(img.width, img.height);

    FeatureVector fv;
    char tag[32];
    std::snprintf(tag, sizeof(tag), "DCT@k%zu", k);
    fv.descriptor = tag;
    fv.values.reserve(k);
    for (std::size_t i = 0; i < k; ++i)
        fv.values.push_back(grid.at(order[i].first, order[i].second));
    return fv;
}

FeatureVector dft_features(const GrayImage& img, std::size_t k) {
    check_nonempty(img);
    const int M = img.width;
    const int N = img.height;
    if (k > static_cast<std::size_t>(M) * N)
        throw BadK("k exceeds the coefficient count");
    const DftGrid grid = dft2(img);

    struct Entry {
        long freq2;
        int a, b;
    };
    std::vector<Entry> entries;
    entries.reserve(static_cast<std::size_t>(M) * N);
    for (int a = 0; a < M; ++a) {
        const long fa = a >= (M + 1) / 2 ? a - M : a;
        for (int b = 0; b < N; ++b) {
            const long fb = b >= (N + 1) / 2 ? b - N : b;
            entries.push_back({fa * fa + fb * fb, a, b});
        }
    }
    std::sort(entries.begin(), entries.end(), [](const Entry& l, const Entry& r) {
        if (l.freq2 != r.freq2) return l.freq2 < r.freq2;
        if (l.a != r.a) return l.a < r.a;
        return l.b < r.b;
    });

    FeatureVector fv;
    char tag[32];
    std::snprintf(tag, sizeof(tag), "DFT@k%zu", k);
    fv.descriptor = tag;
    fv.values.reserve(k);
    for (std::size_t i = 0; i < k; ++i)
        fv.values.push_back(std::abs(grid.at(entries[i].a, entries[i].b)));
    return fv;
}

}  // namespace texdesc
