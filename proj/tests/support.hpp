#pragma once

// Shared helpers for the test suites.

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "texdesc/image.hpp"
#include "texdesc/rng.hpp"

namespace testsupport {

inline texdesc::GrayImage random_image(int w, int h, std::uint64_t seed) {
    texdesc::Rng rng(seed);
    texdesc::GrayImage img(w, h);
    for (auto& px : img.data)
        px = static_cast<std::uint8_t>(rng.next_below(256));
    return img;
}

// clockwise quarter turn: out(h-1-y, x) = in(x, y)
inline texdesc::GrayImage rotate90(const texdesc::GrayImage& img) {
    texdesc::GrayImage out(img.height, img.width);
    for (int y = 0; y < img.height; ++y)
        for (int x = 0; x < img.width; ++x)
            out.at(img.height - 1 - y, x) = img.at(x, y);
    return out;
}

inline texdesc::GrayImage rotate180(const texdesc::GrayImage& img) {
    return rotate90(rotate90(img));
}

inline texdesc::GrayImage rotate270(const texdesc::GrayImage& img) {
    return rotate90(rotate180(img));
}

// Unique path under the build-time working directory; removed on destruction.
class TempPath {
public:
    explicit TempPath(const std::string& suffix) {
        static int counter = 0;
        path_ = "texdesc_test_" + std::to_string(counter++) + suffix;
    }
    ~TempPath() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    const std::string& str() const { return path_; }

private:
    std::string path_;
};

inline void write_bytes(const std::string& path, const std::vector<std::uint8_t>& bytes) {
    std::ofstream out(path, std::ios::binary);
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
}

// Minimal uncompressed 24-bit BMP writer (bottom-up rows, BGR pixels).
inline std::vector<std::uint8_t> make_bmp24(const std::vector<std::vector<std::uint32_t>>& rgb) {
    const int h = static_cast<int>(rgb.size());
    const int w = static_cast<int>(rgb[0].size());
    const int stride = (3 * w + 3) & ~3;
    const std::uint32_t data_size = static_cast<std::uint32_t>(stride) * h;
    const std::uint32_t file_size = 54 + data_size;

    std::vector<std::uint8_t> out(file_size, 0);
    auto put32 = [&](std::size_t off, std::uint32_t v) {
        out[off] = v & 0xff;
        out[off + 1] = (v >> 8) & 0xff;
        out[off + 2] = (v >> 16) & 0xff;
        out[off + 3] = (v >> 24) & 0xff;
    };
    out[0] = 'B';
    out[1] = 'M';
    put32(2, file_size);
    put32(10, 54);
    put32(14, 40);
    put32(18, static_cast<std::uint32_t>(w));
    put32(22, static_cast<std::uint32_t>(h));
    out[26] = 1;
    out[28] = 24;
    put32(34, data_size);
    for (int y = 0; y < h; ++y) {
        const std::size_t row_off = 54 + static_cast<std::size_t>(stride) * (h - 1 - y);
        for (int x = 0; x < w; ++x) {
            const std::uint32_t px = rgb[static_cast<std::size_t>(y)][static_cast<std::size_t>(x)];
            out[row_off + 3 * x] = px & 0xff;            // B
            out[row_off + 3 * x + 1] = (px >> 8) & 0xff;  // G
            out[row_off + 3 * x + 2] = (px >> 16) & 0xff; // R
        }
    }
    return out;
}

}  // namespace testsupport
