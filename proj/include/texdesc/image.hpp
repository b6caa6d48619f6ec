#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "texdesc/errors.hpp"

namespace texdesc {

// 8-bit grayscale image. Row-major, origin at the top-left, y grows down.
struct GrayImage {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> data;

    GrayImage() = default;
    GrayImage(int w, int h, std::uint8_t fill = 0);
    GrayImage(int w, int h, std::vector<std::uint8_t> pixels);

    std::uint8_t at(int x, int y) const {
        return data[static_cast<std::size_t>(y) * width + x];
    }
    std::uint8_t& at(int x, int y) {
        return data[static_cast<std::size_t>(y) * width + x];
    }
    std::size_t pixel_count() const { return data.size(); }
};

struct Rect {
    int x = 0;
    int y = 0;
    int w = 0;
    int h = 0;
};

// Decodes BMP (uncompressed 24-bit and 8-bit), PNG (8-bit gray and RGB) and
// binary PGM (P5). Color inputs are converted with the BT.601 luma weights
// 0.299 R + 0.587 G + 0.114 B, rounded to nearest.
GrayImage load_image(const std::string& path);

// Pixel (i, j) of the result equals pixel (r.x + i, r.y + j) of the input.
GrayImage crop(const GrayImage& img, const Rect& r);

// Bilinear resize with half-pixel-centered sample mapping and edge clamping;
// outputs are rounded to the nearest integer in [0, 255].
GrayImage resize(const GrayImage& img, int w, int h);

// Debug dump as binary PGM (P5, maxval 255).
void save_pgm(const GrayImage& img, const std::string& path);

}  // namespace texdesc
