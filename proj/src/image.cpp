#include "holescan/image.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace holescan {

namespace {

[[noreturn]] void fail(const std::filesystem::path& path, const std::string& what) {
    throw std::runtime_error(path.string() + ": " + what);
}

// Next whitespace-delimited token, skipping '#' comments (PNM convention).
bool next_token(std::istream& is, std::string& token) {
    token.clear();
    char ch;
    while (is.get(ch)) {
        if (ch == '#') {
            std::string rest;
            std::getline(is, rest);
            continue;
        }
        if (!std::isspace(static_cast<unsigned char>(ch))) {
            token.push_back(ch);
            break;
        }
    }
    if (token.empty()) return false;
    while (is.get(ch)) {
        if (std::isspace(static_cast<unsigned char>(ch))) break;
        if (ch == '#') {
            std::string rest;
            std::getline(is, rest);
            break;
        }
        token.push_back(ch);
    }
    return true;
}

int parse_int(const std::string& token, const std::filesystem::path& path) {
    std::size_t used = 0;
    int value = 0;
    try {
        value = std::stoi(token, &used);
    } catch (const std::exception&) {
        fail(path, "expected an integer, got '" + token + "'");
    }
    if (used != token.size()) fail(path, "expected an integer, got '" + token + "'");
    return value;
}

GrayscaleImage load_pnm(std::istream& in, const std::string& magic,
                        const std::filesystem::path& path) {
    std::string token;
    if (!next_token(in, token)) fail(path, "truncated header");
    const int width = parse_int(token, path);
    if (!next_token(in, token)) fail(path, "truncated header");
    const int height = parse_int(token, path);
    if (width <= 0 || height <= 0) fail(path, "non-positive dimensions in header");

    int maxval = 1;
    if (magic != "P1") {
        if (!next_token(in, token)) fail(path, "truncated header");
        maxval = parse_int(token, path);
        if (maxval <= 0) fail(path, "non-positive maxval");
        if (magic == "P5" && maxval > 255) fail(path, "P5 maxval above 255 is not supported");
    }

    const std::size_t count = static_cast<std::size_t>(width) * height;
    std::vector<int> values;
    values.reserve(count);

    if (magic == "P5") {
        // Single whitespace byte separates the header from the raster.
        std::vector<unsigned char> raw(count);
        in.read(reinterpret_cast<char*>(raw.data()), static_cast<std::streamsize>(count));
        if (static_cast<std::size_t>(in.gcount()) != count) fail(path, "truncated P5 raster");
        values.assign(raw.begin(), raw.end());
    } else if (magic == "P2") {
        for (std::size_t i = 0; i < count; ++i) {
            if (!next_token(in, token)) fail(path, "truncated P2 raster");
            values.push_back(parse_int(token, path));
        }
        if (next_token(in, token)) fail(path, "trailing data after raster");
    } else {  // P1: bits may be packed without whitespace; ink (1) is black.
        char ch;
        while (values.size() < count && in.get(ch)) {
            if (std::isspace(static_cast<unsigned char>(ch))) continue;
            if (ch == '#') {
                std::string rest;
                std::getline(in, rest);
                continue;
            }
            if (ch == '1')
                values.push_back(0);
            else if (ch == '0')
                values.push_back(255);
            else
                fail(path, std::string("unexpected character '") + ch + "' in P1 raster");
        }
        if (values.size() != count) fail(path, "truncated P1 raster");
    }
    return GrayscaleImage(width, height, std::move(values));
}

GrayscaleImage load_text_grid(std::istream& in, const std::filesystem::path& path) {
    std::vector<int> values;
    int width = -1;
    int height = 0;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream row(line);
        std::vector<int> entries;
        std::string token;
        while (row >> token) entries.push_back(parse_int(token, path));
        if (entries.empty()) continue;  // blank line
        if (width < 0)
            width = static_cast<int>(entries.size());
        else if (static_cast<int>(entries.size()) != width)
            fail(path, "ragged text grid: row " + std::to_string(height) + " has " +
                           std::to_string(entries.size()) + " entries, expected " +
                           std::to_string(width));
        values.insert(values.end(), entries.begin(), entries.end());
        ++height;
    }
    if (width <= 0 || height == 0) fail(path, "empty text grid");
    return GrayscaleImage(width, height, std::move(values));
}

void append_decimal(std::string& out, double v) {
    // Heat values are integers by construction; print them without a
    // decimal point. Anything else falls back to shortest %g.
    if (v == std::floor(v) && std::abs(v) < 1e15) {
        out += std::to_string(static_cast<long long>(v));
    } else {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.17g", v);
        out += buf;
    }
}

}  // namespace

GrayscaleImage::GrayscaleImage(int width, int height, std::vector<int> values)
    : width_(width), height_(height), values_(std::move(values)) {
    if (width_ <= 0 || height_ <= 0) throw std::invalid_argument("image dimensions must be positive");
    if (values_.size() != static_cast<std::size_t>(width_) * height_)
        throw std::invalid_argument("image payload does not match dimensions");
    for (int v : values_)
        if (v < 0) throw std::invalid_argument("grayscale values must be non-negative");
}

int GrayscaleImage::max_value() const {
    return *std::max_element(values_.begin(), values_.end());
}

BinaryImage::BinaryImage(int width, int height)
    : width_(width), height_(height), mask_(static_cast<std::size_t>(width) * height, 0) {
    if (width <= 0 || height <= 0) throw std::invalid_argument("image dimensions must be positive");
}

BinaryImage BinaryImage::from_pixels(int width, int height, const PixelSet& black) {
    BinaryImage img(width, height);
    for (const Pixel& p : black) {
        if (p.row < 0 || p.row >= height || p.col < 0 || p.col >= width)
            throw std::invalid_argument("black pixel outside the grid");
        img.set_black(p.row, p.col);
    }
    return img;
}

void BinaryImage::set_black(int row, int col, bool value) {
    std::uint8_t& slot = mask_[static_cast<std::size_t>(row) * width_ + col];
    black_count_ += static_cast<int>(value) - static_cast<int>(slot);
    slot = value ? 1 : 0;
}

PixelSet BinaryImage::black_pixels() const {
    PixelSet out;
    out.reserve(black_count_);
    for (int r = 0; r < height_; ++r)
        for (int c = 0; c < width_; ++c)
            if (black(r, c)) out.push_back(Pixel{r, c});
    return out;
}

Heatmap::Heatmap(int width, int height)
    : width_(width), height_(height), heat_(static_cast<std::size_t>(width) * height, 0.0) {
    if (width <= 0 || height <= 0) throw std::invalid_argument("heatmap dimensions must be positive");
}

double Heatmap::max_value() const {
    return *std::max_element(heat_.begin(), heat_.end());
}

GrayscaleImage load_grayscale(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(path, "cannot open file");

    std::string magic;
    if (!next_token(in, magic)) fail(path, "empty file");
    if (magic == "P1" || magic == "P2" || magic == "P5") return load_pnm(in, magic, path);

    // Not a PNM signature: parse the whole file as a text grid.
    in.clear();
    in.seekg(0);
    return load_text_grid(in, path);
}

void write_text_grid(const GrayscaleImage& img, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) fail(path, "cannot open file for writing");
    for (int r = 0; r < img.height(); ++r) {
        for (int c = 0; c < img.width(); ++c) {
            if (c) out << ' ';
            out << img.at(r, c);
        }
        out << '\n';
    }
    if (!out) fail(path, "write failed");
}

BinaryImage threshold_sublevel(const GrayscaleImage& img, int threshold) {
    BinaryImage out(img.width(), img.height());
    for (int r = 0; r < img.height(); ++r)
        for (int c = 0; c < img.width(); ++c)
            if (img.at(r, c) <= threshold) out.set_black(r, c);
    return out;
}

void write_heatmap(const Heatmap& h, const std::filesystem::path& path, HeatmapFormat format) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(path, "cannot open file for writing");

    std::string body;
    if (format == HeatmapFormat::csv) {
        for (int r = 0; r < h.height(); ++r) {
            for (int c = 0; c < h.width(); ++c) {
                if (c) body += ',';
                append_decimal(body, h.at(r, c));
            }
            body += '\n';
        }
    } else {
        const double max = h.max_value();
        body = "P2\n" + std::to_string(h.width()) + " " + std::to_string(h.height()) + "\n255\n";
        for (int r = 0; r < h.height(); ++r) {
            for (int c = 0; c < h.width(); ++c) {
                int v = 0;
                if (max > 0.0) {
                    v = static_cast<int>(std::floor(h.at(r, c) * 255.0 / max));
                    v = std::clamp(v, 0, 255);
                }
                if (c) body += ' ';
                body += std::to_string(v);
            }
            body += '\n';
        }
    }
    out << body;
    if (!out) fail(path, "write failed");
}

}  // namespace holescan
