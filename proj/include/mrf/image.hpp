#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mrf {

// 8-bit grayscale image, row-major.
struct GrayImage {
    int width = 0;
    int height = 0;
    std::vector<int> pixels;

    GrayImage() = default;
    GrayImage(int w, int h, int fill = 0)
        : width(w), height(h), pixels(static_cast<std::size_t>(w) * h, fill) {}

    int pixel_count() const { return width * height; }
    int at(int x, int y) const { return pixels[static_cast<std::size_t>(y) * width + x]; }
    int& at(int x, int y) { return pixels[static_cast<std::size_t>(y) * width + x]; }

    void validate() const;  // dimensions positive, values in [0, 255]
};

// Reads P2 or P5 PGM (maxval <= 255). Throws std::runtime_error on parse
// failure or I/O trouble.
GrayImage read_pgm(const std::string& path);
GrayImage read_pgm(std::istream& in);

// Writes plain (P2) PGM, maxval 255.
void write_pgm(const std::string& path, const GrayImage& image);
void write_pgm(std::ostream& out, const GrayImage& image);

}  // namespace mrf
