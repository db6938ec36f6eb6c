#pragma once

#include <compare>
#include <cstdint>
#include <filesystem>
#include <vector>

namespace holescan {

struct Pixel {
    int row = 0;
    int col = 0;
    friend auto operator<=>(const Pixel&, const Pixel&) = default;
};

/// A pixel set, kept sorted and duplicate-free by every operation that
/// produces one.
using PixelSet = std::vector<Pixel>;

/// Rectangular grid of non-negative integer intensities, row-major.
class GrayscaleImage {
public:
    GrayscaleImage(int width, int height, std::vector<int> values);

    int width() const { return width_; }
    int height() const { return height_; }
    int at(int row, int col) const { return values_[static_cast<std::size_t>(row) * width_ + col]; }
    const std::vector<int>& values() const { return values_; }
    int max_value() const;

    friend bool operator==(const GrayscaleImage&, const GrayscaleImage&) = default;

private:
    int width_;
    int height_;
    std::vector<int> values_;
};

/// Rectangular grid with a designated black-pixel set (the zeros of a
/// binary image).
class BinaryImage {
public:
    BinaryImage(int width, int height);
    static BinaryImage from_pixels(int width, int height, const PixelSet& black);

    int width() const { return width_; }
    int height() const { return height_; }
    bool black(int row, int col) const { return mask_[static_cast<std::size_t>(row) * width_ + col] != 0; }
    void set_black(int row, int col, bool value = true);
    int black_count() const { return black_count_; }
    PixelSet black_pixels() const;

private:
    int width_;
    int height_;
    int black_count_ = 0;
    std::vector<std::uint8_t> mask_;
};

/// Real-valued grid aligned with an image; the accumulator the sliding
/// window detectors write into.
class Heatmap {
public:
    Heatmap(int width, int height);

    int width() const { return width_; }
    int height() const { return height_; }
    double at(int row, int col) const { return heat_[static_cast<std::size_t>(row) * width_ + col]; }
    double& at(int row, int col) { return heat_[static_cast<std::size_t>(row) * width_ + col]; }
    const std::vector<double>& values() const { return heat_; }
    double max_value() const;

    friend bool operator==(const Heatmap&, const Heatmap&) = default;

private:
    int width_;
    int height_;
    std::vector<double> heat_;
};

enum class HeatmapFormat { csv, pgm };

/// Reads a PGM file (P1, P2 or P5) or a plain-text integer grid.
/// P1 bitmaps map ink bits (1) to value 0 and background bits to 255.
GrayscaleImage load_grayscale(const std::filesystem::path& path);

/// Writes the image as a plain-text grid, one row per line.
void write_text_grid(const GrayscaleImage& img, const std::filesystem::path& path);

/// black = { p : g(p) <= threshold }.
BinaryImage threshold_sublevel(const GrayscaleImage& img, int threshold);

/// csv: one row per line, comma-separated, integral values printed without
/// a decimal point. pgm: P2 with values rescaled so the maximum maps to 255
/// (all-zero and negative entries write as 0).
void write_heatmap(const Heatmap& h, const std::filesystem::path& path, HeatmapFormat format);

}  // namespace holescan
