#include "texdesc/synth.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <numbers>

#include "texdesc/rng.hpp"

namespace texdesc {

namespace {

constexpr double kPi = std::numbers::pi;

std::uint64_t splitmix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

std::uint64_t image_seed(std::uint64_t seed, std::size_t class_idx, int index) {
    return splitmix(splitmix(seed ^ (0x1000 + class_idx)) ^ static_cast<std::uint64_t>(index));
}

std::uint8_t to_pixel(double v) {
    long r = std::lround(v);
    if (r < 0) r = 0;
    if (r > 255) r = 255;
    return static_cast<std::uint8_t>(r);
}

// Stripes and checks deliberately share one spatial-frequency band, one
// contrast regime and a uniformly random orientation, so telling them apart
// hinges on orientation-pooled micro-structure rather than on any fixed
// direction or on gross statistics.
GrayImage stripes(int size, Rng& rng) {
    const double angle = rng.uniform(0.0, kPi);
    const double period = rng.uniform(5.0, 10.0);
    const double phase = rng.uniform(0.0, 2.0 * kPi);
    const double amp = rng.uniform(35.0, 55.0);
    const double noise = rng.uniform(12.0, 20.0);
    const double ux = std::cos(angle) / period;
    const double uy = std::sin(angle) / period;
    GrayImage img(size, size);
    for (int y = 0; y < size; ++y)
        for (int x = 0; x < size; ++x) {
            const double v = 128.0 + amp * std::sin(2.0 * kPi * (ux * x + uy * y) + phase) +
                             noise * rng.gaussian();
            img.at(x, y) = to_pixel(v);
        }
    return img;
}

GrayImage checks(int size, Rng& rng) {
    const double angle = rng.uniform(0.0, kPi / 2);
    const double cell = rng.uniform(5.0, 10.0);
    const double amp = rng.uniform(35.0, 55.0);
    const double noise = rng.uniform(12.0, 20.0);
    const double ox = rng.uniform(0.0, cell);
    const double oy = rng.uniform(0.0, cell);
    const double c = std::cos(angle), s = std::sin(angle);
    GrayImage img(size, size);
    for (int y = 0; y < size; ++y)
        for (int x = 0; x < size; ++x) {
            const double u = (c * x + s * y + ox) / cell;
            const double v = (-s * x + c * y + oy) / cell;
            const bool dark = (static_cast<long>(std::floor(u)) +
                               static_cast<long>(std::floor(v))) % 2 != 0;
            const double val = 128.0 + (dark ? -amp : amp) + noise * rng.gaussian();
            img.at(x, y) = to_pixel(val);
        }
    return img;
}

GrayImage speckle(int size, Rng& rng) {
    const double sigma = rng.uniform(25.0, 55.0);
    GrayImage img(size, size);
    for (int y = 0; y < size; ++y)
        for (int x = 0; x < size; ++x)
            img.at(x, y) = to_pixel(128.0 + sigma * rng.gaussian());
    return img;
}

GrayImage blobs(int size, Rng& rng) {
    const int count = 30 + static_cast<int>(rng.next_below(31));
    const double noise = rng.uniform(12.0, 20.0);
    std::vector<double> canvas(static_cast<std::size_t>(size) * size, 110.0);
    for (int b = 0; b < count; ++b) {
        const double cx = rng.uniform(0.0, size);
        const double cy = rng.uniform(0.0, size);
        const double radius = rng.uniform(3.0, 7.0);
        const double amp = rng.uniform(35.0, 70.0) * (rng.next_double() < 0.5 ? -1.0 : 1.0);
        const int lo_x = std::max(0, static_cast<int>(cx - 3 * radius));
        const int hi_x = std::min(size - 1, static_cast<int>(cx + 3 * radius));
        const int lo_y = std::max(0, static_cast<int>(cy - 3 * radius));
        const int hi_y = std::min(size - 1, static_cast<int>(cy + 3 * radius));
        for (int y = lo_y; y <= hi_y; ++y)
            for (int x = lo_x; x <= hi_x; ++x) {
                const double d2 = (x - cx) * (x - cx) + (y - cy) * (y - cy);
                canvas[static_cast<std::size_t>(y) * size + x] +=
                    amp * std::exp(-d2 / (2.0 * radius * radius));
            }
    }
    GrayImage img(size, size);
    for (int y = 0; y < size; ++y)
        for (int x = 0; x < size; ++x)
            img.at(x, y) =
                to_pixel(canvas[static_cast<std::size_t>(y) * size + x] + noise * rng.gaussian());
    return img;
}

}  // namespace

const std::vector<std::string>& synth_classes() {
    static const std::vector<std::string> classes = {"blobs", "checks", "speckle", "stripes"};
    return classes;
}

GrayImage synth_image(const std::string& klass, const SynthOptions& opts, int index) {
    const auto& classes = synth_classes();
    std::size_t class_idx = classes.size();
    for (std::size_t i = 0; i < classes.size(); ++i)
        if (classes[i] == klass)
            class_idx = i;
    if (class_idx == classes.size())
        throw InvalidArgument("unknown synthetic class: " + klass);
    Rng rng(image_seed(opts.seed, class_idx, index));
    if (klass == "stripes")
        return stripes(opts.size, rng);
    if (klass == "checks")
        return checks(opts.size, rng);
    if (klass == "speckle")
        return speckle(opts.size, rng);
    return blobs(opts.size, rng);
}

DatasetManifest generate_corpus(const std::string& out_dir, const SynthOptions& opts) {
    if (opts.per_class < 1 || opts.size < 8)
        throw InvalidArgument("corpus needs per_class >= 1 and size >= 8");
    std::filesystem::create_directories(out_dir);
    DatasetManifest m;
    for (const auto& klass : synth_classes()) {
        for (int i = 0; i < opts.per_class; ++i) {
            char name[64];
            std::snprintf(name, sizeof(name), "%s_%03d.pgm", klass.c_str(), i);
            const std::string path = (std::filesystem::path(out_dir) / name).string();
            save_pgm(synth_image(klass, opts, i), path);
            m.entries.push_back({path, klass, SplitTag::None});
        }
    }
    return m;
}

}  // namespace texdesc
