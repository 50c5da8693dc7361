#include "mrf/image.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace mrf {

void GrayImage::validate() const {
    if (width <= 0 || height <= 0) throw std::invalid_argument("image: dimensions must be positive");
    if (static_cast<int>(pixels.size()) != width * height)
        throw std::invalid_argument("image: pixel count mismatch");
    for (int v : pixels)
        if (v < 0 || v > 255) throw std::invalid_argument("image: pixel outside [0,255]");
}

namespace {

// Next whitespace-delimited token, skipping '#' comments.
std::string next_token(std::istream& in) {
    std::string token;
    int c;
    while ((c = in.get()) != EOF) {
        if (c == '#') {
            while ((c = in.get()) != EOF && c != '\n') {
            }
            continue;
        }
        if (std::isspace(c)) {
            if (!token.empty()) break;
            continue;
        }
        token.push_back(static_cast<char>(c));
    }
    if (token.empty()) throw std::runtime_error("pgm: unexpected end of header");
    return token;
}

int parse_int(const std::string& token) {
    try {
        std::size_t used = 0;
        const int v = std::stoi(token, &used);
        if (used != token.size()) throw std::invalid_argument(token);
        return v;
    } catch (const std::exception&) {
        throw std::runtime_error("pgm: bad integer '" + token + "'");
    }
}

}  // namespace

GrayImage read_pgm(std::istream& in) {
    const std::string magic = next_token(in);
    if (magic != "P2" && magic != "P5") throw std::runtime_error("pgm: unsupported magic " + magic);
    GrayImage image;
    image.width = parse_int(next_token(in));
    image.height = parse_int(next_token(in));
    const int maxval = parse_int(next_token(in));
    if (image.width <= 0 || image.height <= 0) throw std::runtime_error("pgm: bad dimensions");
    if (maxval <= 0 || maxval > 255) throw std::runtime_error("pgm: only maxval <= 255 supported");

    const int count = image.width * image.height;
    image.pixels.resize(count);
    if (magic == "P2") {
        for (int i = 0; i < count; ++i) image.pixels[i] = parse_int(next_token(in));
    } else {
        // single whitespace after maxval already consumed by tokenizer? No:
        // next_token stops at the first whitespace after the token, which is
        // exactly the separator byte, so raster bytes follow immediately.
        for (int i = 0; i < count; ++i) {
            const int c = in.get();
            if (c == EOF) throw std::runtime_error("pgm: truncated raster");
            image.pixels[i] = c;
        }
    }
    for (int v : image.pixels)
        if (v < 0 || v > maxval) throw std::runtime_error("pgm: sample exceeds maxval");
    return image;
}

GrayImage read_pgm(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("pgm: cannot open " + path);
    return read_pgm(in);
}

void write_pgm(std::ostream& out, const GrayImage& image) {
    image.validate();
    out << "P2\n" << image.width << ' ' << image.height << "\n255\n";
    for (int y = 0; y < image.height; ++y) {
        for (int x = 0; x < image.width; ++x) {
            if (x) out << ' ';
            out << image.at(x, y);
        }
        out << '\n';
    }
}

void write_pgm(const std::string& path, const GrayImage& image) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("pgm: cannot open " + path + " for writing");
    write_pgm(out, image);
    if (!out) throw std::runtime_error("pgm: write failed for " + path);
}

}  // namespace mrf
