#include "texdesc/image.hpp"

#include <png.h>

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>

namespace texdesc {

GrayImage::GrayImage(int w, int h, std::uint8_t fill) : width(w), height(h) {
    if (w < 0 || h < 0)
        throw InvalidArgument("GrayImage: negative dimensions");
    data.assign(static_cast<std::size_t>(w) * h, fill);
}

GrayImage::GrayImage(int w, int h, std::vector<std::uint8_t> pixels)
    : width(w), height(h), data(std::move(pixels)) {
    if (w < 0 || h < 0)
        throw InvalidArgument("GrayImage: negative dimensions");
    if (data.size() != static_cast<std::size_t>(w) * h)
        throw InvalidArgument("GrayImage: pixel buffer size does not match dimensions");
}

namespace {

std::uint8_t luma(int r, int g, int b) {
    const double v = 0.299 * r + 0.587 * g + 0.114 * b;
    long rounded = std::lround(v);
    if (rounded < 0) rounded = 0;
    if (rounded > 255) rounded = 255;
    return static_cast<std::uint8_t>(rounded);
}

std::uint32_t read_u32le(const std::uint8_t* p) {
    return static_cast<std::uint32_t>(p[0]) | (static_cast<std::uint32_t>(p[1]) << 8) |
           (static_cast<std::uint32_t>(p[2]) << 16) | (static_cast<std::uint32_t>(p[3]) << 24);
}

std::uint16_t read_u16le(const std::uint8_t* p) {
    return static_cast<std::uint16_t>(p[0] | (p[1] << 8));
}

GrayImage decode_bmp(const std::vector<std::uint8_t>& buf, const std::string& path) {
    if (buf.size() < 54)
        throw CorruptImage("BMP too short: " + path);
    const std::uint32_t data_offset = read_u32le(&buf[10]);
    const std::uint32_t header_size = read_u32le(&buf[14]);
    if (header_size < 40)
        throw UnsupportedFormat("BMP with pre-BITMAPINFOHEADER header: " + path);
    const std::int32_t raw_w = static_cast<std::int32_t>(read_u32le(&buf[18]));
    const std::int32_t raw_h = static_cast<std::int32_t>(read_u32le(&buf[22]));
    const std::uint16_t bpp = read_u16le(&buf[28]);
    const std::uint32_t compression = read_u32le(&buf[30]);
    if (compression != 0)
        throw UnsupportedFormat("compressed BMP not supported: " + path);
    if (bpp != 24 && bpp != 8)
        throw UnsupportedFormat("BMP bit depth " + std::to_string(bpp) + " not supported: " + path);
    if (raw_w <= 0 || raw_h == 0)
        throw CorruptImage("BMP with bad dimensions: " + path);
    const bool bottom_up = raw_h > 0;
    const int w = raw_w;
    const int h = bottom_up ? raw_h : -raw_h;

    // 8-bit BMPs carry a BGRA palette right after the info header
    std::vector<std::uint8_t> palette_gray;
    if (bpp == 8) {
        std::uint32_t colors = read_u32le(&buf[46]);
        if (colors == 0) colors = 256;
        const std::size_t pal_off = 14 + header_size;
        if (pal_off + 4 * colors > buf.size())
            throw CorruptImage("BMP palette truncated: " + path);
        palette_gray.resize(256, 0);
        for (std::uint32_t i = 0; i < colors && i < 256; ++i) {
            const std::uint8_t* e = &buf[pal_off + 4 * i];
            palette_gray[i] = luma(e[2], e[1], e[0]);
        }
    }

    const std::size_t bytes_per_px = bpp / 8;
    const std::size_t row_stride = (static_cast<std::size_t>(w) * bytes_per_px + 3) & ~std::size_t{3};
    if (data_offset + row_stride * h > buf.size())
        throw CorruptImage("BMP pixel data truncated: " + path);

    GrayImage img(w, h);
    for (int y = 0; y < h; ++y) {
        const int src_row = bottom_up ? (h - 1 - y) : y;
        const std::uint8_t* row = &buf[data_offset + row_stride * src_row];
        for (int x = 0; x < w; ++x) {
            if (bpp == 24) {
                const std::uint8_t* px = row + 3 * x;  // BGR
                img.at(x, y) = luma(px[2], px[1], px[0]);
            } else {
                img.at(x, y) = palette_gray[row[x]];
            }
        }
    }
    return img;
}

GrayImage decode_pgm(const std::vector<std::uint8_t>& buf, const std::string& path) {
    std::size_t pos = 2;  // past "P5"
    auto next_token = [&](const char* what) -> long {
        // skip whitespace and '#' comments
        while (pos < buf.size()) {
            if (std::isspace(buf[pos])) {
                ++pos;
            } else if (buf[pos] == '#') {
                while (pos < buf.size() && buf[pos] != '\n') ++pos;
            } else {
                break;
            }
        }
        long v = 0;
        bool any = false;
        while (pos < buf.size() && std::isdigit(buf[pos])) {
            v = v * 10 + (buf[pos] - '0');
            ++pos;
            any = true;
        }
        if (!any)
            throw CorruptImage(std::string("PGM header missing ") + what + ": " + path);
        return v;
    };
    const long w = next_token("width");
    const long h = next_token("height");
    const long maxval = next_token("maxval");
    if (maxval > 255)
        throw UnsupportedFormat("16-bit PGM not supported: " + path);
    if (maxval < 1 || w < 1 || h < 1)
        throw CorruptImage("PGM with bad header values: " + path);
    ++pos;  // single whitespace after maxval
    const std::size_t need = static_cast<std::size_t>(w) * h;
    if (pos + need > buf.size())
        throw CorruptImage("PGM pixel data truncated: " + path);
    std::vector<std::uint8_t> pixels(buf.begin() + pos, buf.begin() + pos + need);
    return GrayImage(static_cast<int>(w), static_cast<int>(h), std::move(pixels));
}

struct PngReadState {
    const std::uint8_t* data;
    std::size_t size;
    std::size_t pos;
};

void png_mem_read(png_structp png, png_bytep out, png_size_t n) {
    auto* st = static_cast<PngReadState*>(png_get_io_ptr(png));
    if (st->pos + n > st->size) {
        png_error(png, "read past end of buffer");
        return;
    }
    std::memcpy(out, st->data + st->pos, n);
    st->pos += n;
}

// setjmp frame kept free of non-trivial locals; buffers live in the caller
bool png_decode_rows(png_structp png, png_infop info, PngReadState* st,
                     std::uint32_t* w, std::uint32_t* h, int* color_type,
                     int* bit_depth, std::vector<std::uint8_t>* raster,
                     std::vector<png_bytep>* rows) {
    if (setjmp(png_jmpbuf(png)))
        return false;
    png_set_read_fn(png, st, png_mem_read);
    png_read_info(png, info);
    *w = png_get_image_width(png, info);
    *h = png_get_image_height(png, info);
    *color_type = png_get_color_type(png, info);
    *bit_depth = png_get_bit_depth(png, info);
    if (*bit_depth != 8)
        return true;  // caller rejects with UnsupportedFormat
    if (*color_type != PNG_COLOR_TYPE_GRAY && *color_type != PNG_COLOR_TYPE_RGB)
        return true;
    png_set_interlace_handling(png);
    png_read_update_info(png, info);
    const std::size_t rowbytes = png_get_rowbytes(png, info);
    raster->assign(rowbytes * *h, 0);
    rows->resize(*h);
    for (std::uint32_t y = 0; y < *h; ++y)
        (*rows)[y] = raster->data() + y * rowbytes;
    png_read_image(png, rows->data());
    png_read_end(png, nullptr);
    return true;
}

GrayImage decode_png(const std::vector<std::uint8_t>& buf, const std::string& path) {
    png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    if (!png)
        throw Error("libpng init failed");
    png_infop info = png_create_info_struct(png);
    if (!info) {
        png_destroy_read_struct(&png, nullptr, nullptr);
        throw Error("libpng init failed");
    }

    PngReadState st{buf.data(), buf.size(), 0};
    std::uint32_t w = 0, h = 0;
    int color_type = -1, bit_depth = 0;
    std::vector<std::uint8_t> raster;
    std::vector<png_bytep> rows;
    const bool ok = png_decode_rows(png, info, &st, &w, &h, &color_type, &bit_depth,
                                    &raster, &rows);
    png_destroy_read_struct(&png, &info, nullptr);
    if (!ok)
        throw CorruptImage("PNG decode failed: " + path);
    if (bit_depth != 8)
        throw UnsupportedFormat("PNG bit depth " + std::to_string(bit_depth) +
                                " not supported: " + path);
    if (color_type != PNG_COLOR_TYPE_GRAY && color_type != PNG_COLOR_TYPE_RGB)
        throw UnsupportedFormat("PNG color type not supported (8-bit gray or RGB only): " + path);

    GrayImage img(static_cast<int>(w), static_cast<int>(h));
    const std::size_t rowbytes = raster.size() / h;
    for (std::uint32_t y = 0; y < h; ++y) {
        const std::uint8_t* row = raster.data() + y * rowbytes;
        for (std::uint32_t x = 0; x < w; ++x) {
            if (color_type == PNG_COLOR_TYPE_GRAY) {
                img.at(static_cast<int>(x), static_cast<int>(y)) = row[x];
            } else {
                const std::uint8_t* px = row + 3 * x;
                img.at(static_cast<int>(x), static_cast<int>(y)) = luma(px[0], px[1], px[2]);
            }
        }
    }
    return img;
}

}  // namespace

GrayImage load_image(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw FileNotFound("cannot open " + path);
    std::vector<std::uint8_t> buf((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
    if (buf.size() >= 8 && buf[0] == 0x89 && buf[1] == 'P' && buf[2] == 'N' && buf[3] == 'G')
        return decode_png(buf, path);
    if (buf.size() >= 2 && buf[0] == 'B' && buf[1] == 'M')
        return decode_bmp(buf, path);
    if (buf.size() >= 2 && buf[0] == 'P' && buf[1] == '5')
        return decode_pgm(buf, path);
    throw UnsupportedFormat("not a BMP, PNG or PGM file: " + path);
}

GrayImage crop(const GrayImage& img, const Rect& r) {
    if (r.w < 1 || r.h < 1 || r.x < 0 || r.y < 0 || r.x + r.w > img.width ||
        r.y + r.h > img.height)
        throw OutOfBounds("crop rect outside image");
    GrayImage out(r.w, r.h);
    for (int j = 0; j < r.h; ++j)
        for (int i = 0; i < r.w; ++i)
            out.at(i, j) = img.at(r.x + i, r.y + j);
    return out;
}

GrayImage resize(const GrayImage& img, int w, int h) {
    if (w < 1 || h < 1)
        throw ZeroDimension("resize target must be at least 1x1");
    if (img.width < 1 || img.height < 1)
        throw ZeroDimension("resize source is empty");
    if (w == img.width && h == img.height)
        return img;

    GrayImage out(w, h);
    const double sx = static_cast<double>(img.width) / w;
    const double sy = static_cast<double>(img.height) / h;
    for (int yd = 0; yd < h; ++yd) {
        double fy = (yd + 0.5) * sy - 0.5;
        if (fy < 0) fy = 0;
        if (fy > img.height - 1) fy = img.height - 1;
        const int y0 = static_cast<int>(fy);
        const int y1 = y0 + 1 < img.height ? y0 + 1 : y0;
        const double wy = fy - y0;
        for (int xd = 0; xd < w; ++xd) {
            double fx = (xd + 0.5) * sx - 0.5;
            if (fx < 0) fx = 0;
            if (fx > img.width - 1) fx = img.width - 1;
            const int x0 = static_cast<int>(fx);
            const int x1 = x0 + 1 < img.width ? x0 + 1 : x0;
            const double wx = fx - x0;
            const double v = (1 - wx) * (1 - wy) * img.at(x0, y0) +
                             wx * (1 - wy) * img.at(x1, y0) +
                             (1 - wx) * wy * img.at(x0, y1) +
                             wx * wy * img.at(x1, y1);
            long rounded = std::lround(v);
            if (rounded < 0) rounded = 0;
            if (rounded > 255) rounded = 255;
            out.at(xd, yd) = static_cast<std::uint8_t>(rounded);
        }
    }
    return out;
}

void save_pgm(const GrayImage& img, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw IoError("cannot open for writing: " + path);
    out << "P5\n" << img.width << " " << img.height << "\n255\n";
    out.write(reinterpret_cast<const char*>(img.data.data()),
              static_cast<std::streamsize>(img.data.size()));
    if (!out)
        throw IoError("write failed: " + path);
}

}  // namespace texdesc
