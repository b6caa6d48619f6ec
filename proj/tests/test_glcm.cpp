#include <doctest.h>

#include <cmath>

#include "support.hpp"
#include "texdesc/glcm.hpp"

using namespace texdesc;
using namespace testsupport;

namespace {

// brute-force co-occurrence counting over all pixel pairs
CooccurrenceMatrix naive_glcm(const GrayImage& img, int d, GlcmDirection dir, int levels) {
    int dx = 0, dy = 0;
    switch (dir) {
        case GlcmDirection::Deg0: dx = d; dy = 0; break;
        case GlcmDirection::Deg45: dx = d; dy = -d; break;
        case GlcmDirection::Deg90: dx = 0; dy = -d; break;
        case GlcmDirection::Deg135: dx = -d; dy = -d; break;
    }
    std::vector<long> counts(static_cast<std::size_t>(levels) * levels, 0);
    long total = 0;
    for (int y = 0; y < img.height; ++y)
        for (int x = 0; x < img.width; ++x)
            for (int sgn : {1, -1}) {
                const int x2 = x + sgn * dx;
                const int y2 = y + sgn * dy;
                if (x2 < 0 || y2 < 0 || x2 >= img.width || y2 >= img.height)
                    continue;
                const int i = img.at(x, y) * levels / 256;
                const int j = img.at(x2, y2) * levels / 256;
                counts[static_cast<std::size_t>(i) * levels + j] += 1;
                ++total;
            }
    CooccurrenceMatrix m;
    m.levels = levels;
    m.distance = d;
    m.direction = dir;
    m.probs.resize(counts.size());
    for (std::size_t k = 0; k < counts.size(); ++k)
        m.probs[k] = static_cast<double>(counts[k]) / static_cast<double>(total);
    return m;
}

GrayImage checker2x2() {
    GrayImage img(2, 2);
    img.at(0, 0) = 0;
    img.at(1, 0) = 128;
    img.at(0, 1) = 128;
    img.at(1, 1) = 0;
    return img;
}

}  // namespace

TEST_CASE("glcm_matrix") {
    SUBCASE("constant image has a single nonzero entry") {
        const GrayImage img(6, 6, 200);
        const auto m = glcm_matrix(img, 1, GlcmDirection::Deg0, 16);
        const int g = 200 * 16 / 256;
        for (int i = 0; i < 16; ++i)
            for (int j = 0; j < 16; ++j)
                CHECK(m.at(i, j) == (i == g && j == g ? 1.0 : 0.0));
    }
    SUBCASE("2x2 checkerboard at two levels") {
        const auto m = glcm_matrix(checker2x2(), 1, GlcmDirection::Deg0, 2);
        CHECK(m.at(0, 1) == 0.5);
        CHECK(m.at(1, 0) == 0.5);
        CHECK(m.at(0, 0) == 0.0);
        CHECK(m.at(1, 1) == 0.0);
    }
    SUBCASE("symmetry and unit mass on random input") {
        const GrayImage img = random_image(12, 12, 21);
        for (auto dir : {GlcmDirection::Deg0, GlcmDirection::Deg45, GlcmDirection::Deg90,
                         GlcmDirection::Deg135}) {
            const auto m = glcm_matrix(img, 1, dir, 16);
            double sum = 0;
            for (int i = 0; i < 16; ++i)
                for (int j = 0; j < 16; ++j) {
                    CHECK(m.at(i, j) == m.at(j, i));
                    CHECK(m.at(i, j) >= 0.0);
                    sum += m.at(i, j);
                }
            CHECK(sum == doctest::Approx(1.0).epsilon(1e-9));
        }
    }
    SUBCASE("matches naive double-loop counting exactly") {
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            const GrayImage img = random_image(12, 12, 500 + seed);
            for (auto dir : {GlcmDirection::Deg0, GlcmDirection::Deg45, GlcmDirection::Deg90,
                             GlcmDirection::Deg135}) {
                const auto fast = glcm_matrix(img, 1, dir, 8);
                const auto slow = naive_glcm(img, 1, dir, 8);
                CHECK(fast.probs == slow.probs);
            }
        }
    }
    SUBCASE("error contracts") {
        const GrayImage img(4, 4, 0);
        CHECK_THROWS_AS(glcm_matrix(img, 1, GlcmDirection::Deg0, 1), BadLevels);
        CHECK_THROWS_AS(glcm_matrix(img, 1, GlcmDirection::Deg0, 300), BadLevels);
        const GrayImage tiny(1, 1, 0);
        CHECK_THROWS_AS(glcm_matrix(tiny, 1, GlcmDirection::Deg0, 16), ImageTooSmall);
    }
}

TEST_CASE("haralick_features") {
    SUBCASE("constant image") {
        const GrayImage img(8, 8, 100);
        const auto f = haralick_features(glcm_matrix(img, 1, GlcmDirection::Deg0, 16));
        REQUIRE(f.dim() == 16);
        CHECK(f.values[0] == 1.0);   // energy
        CHECK(f.values[1] == 0.0);   // entropy
        CHECK(f.values[2] == 0.0);   // inertia
        CHECK(f.values[10] == 0.0);  // contrast
        CHECK(f.values[11] == 0.0);  // correlation defined as 0 at zero variance
    }
    SUBCASE("checkerboard matrix") {
        const auto f = haralick_features(glcm_matrix(checker2x2(), 1, GlcmDirection::Deg0, 2));
        CHECK(f.values[10] == doctest::Approx(1.0).epsilon(1e-12));  // contrast
        CHECK(f.values[2] == doctest::Approx(1.0).epsilon(1e-12));   // inertia
        CHECK(f.values[0] == doctest::Approx(0.5).epsilon(1e-12));   // energy
    }
    SUBCASE("ranges on random input") {
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
            const GrayImage img = random_image(16, 16, 700 + seed);
            const auto f = haralick_features(glcm_matrix(img, 1, GlcmDirection::Deg45, 16));
            CHECK(f.values[0] > 0.0);
            CHECK(f.values[0] <= 1.0);
            CHECK(f.values[1] >= 0.0);
            CHECK(f.values[10] >= 0.0);
        }
    }
}

TEST_CASE("glcm_feature_vector") {
    SUBCASE("dimension is 64") {
        const GrayImage img = random_image(16, 16, 3);
        CHECK(glcm_feature_vector(img, 1, 16).dim() == 64);
    }
    SUBCASE("constant image repeats the same block in all four directions") {
        const GrayImage img(10, 10, 77);
        const auto f = glcm_feature_vector(img, 1, 16);
        for (int d = 1; d < 4; ++d)
            for (int i = 0; i < 16; ++i)
                CHECK(f.values[static_cast<std::size_t>(16 * d + i)] ==
                      f.values[static_cast<std::size_t>(i)]);
    }
    SUBCASE("direction blocks permute under a quarter turn") {
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            const GrayImage img = random_image(16, 16, 900 + seed);
            const GrayImage rot = rotate90(img);
            const auto f = glcm_feature_vector(img, 1, 16);
            const auto g = glcm_feature_vector(rot, 1, 16);
            for (int i = 0; i < 16; ++i) {
                CHECK(f.values[static_cast<std::size_t>(i)] ==
                      g.values[static_cast<std::size_t>(32 + i)]);  // 0 -> 90
                CHECK(f.values[static_cast<std::size_t>(32 + i)] ==
                      g.values[static_cast<std::size_t>(i)]);  // 90 -> 0
                CHECK(f.values[static_cast<std::size_t>(16 + i)] ==
                      g.values[static_cast<std::size_t>(48 + i)]);  // 45 -> 135
                CHECK(f.values[static_cast<std::size_t>(48 + i)] ==
                      g.values[static_cast<std::size_t>(16 + i)]);  // 135 -> 45
            }
        }
    }
}
