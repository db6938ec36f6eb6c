#pragma once

#include <cstdint>
#include <filesystem>
#include <queue>
#include <random>
#include <string>
#include <unordered_set>
#include <vector>

#include "holescan/cubical.hpp"
#include "holescan/image.hpp"

namespace holescan::fixtures {

// '#' = black pixel, anything else white.
inline BinaryImage image_from_art(const std::vector<std::string>& rows) {
    const int height = static_cast<int>(rows.size());
    const int width = static_cast<int>(rows.front().size());
    BinaryImage img(width, height);
    for (int r = 0; r < height; ++r)
        for (int c = 0; c < width; ++c)
            if (rows[r][c] == '#') img.set_black(r, c);
    return img;
}

// The worked 6x6 grayscale grid: zero border, diagonal of ones, sub-level
// persistence diagrams {(0,inf)} in dim 0 and {(0,3),(2,3)} in dim 1.
inline GrayscaleImage sample_grayscale_6x6() {
    return GrayscaleImage(6, 6,
                          {0, 0, 0, 0, 0, 0,  //
                           0, 1, 3, 3, 3, 0,  //
                           0, 2, 1, 2, 3, 0,  //
                           0, 3, 2, 1, 2, 0,  //
                           0, 3, 3, 3, 2, 0,  //
                           0, 0, 0, 0, 0, 0});
}

// The worked 6x6 local-system image: one component, one hole, and with the
// 4x4 window at (1,1) the profile m0=3, o0=0, m1=0, o1=1.
inline BinaryImage sample_local_system_image() {
    return image_from_art({
        "...#..",
        "...#..",
        "######",
        "#..#..",
        "#..#..",
        "####..",
    });
}

inline WindowRect sample_window() { return WindowRect{1, 1, 4, 4}; }

// Rectangular annulus: the border ring of the box, `thickness` pixels deep.
inline PixelSet ring_pixels(int top, int left, int rows, int cols, int thickness = 1) {
    PixelSet out;
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            const bool deep = r >= thickness && r < rows - thickness && c >= thickness &&
                              c < cols - thickness;
            if (!deep) out.push_back(Pixel{top + r, left + c});
        }
    return out;
}

// Independent connectivity oracle: 8-connected component count by breadth
// first search, no linear algebra involved.
inline int flood_fill_components(const PixelSet& pixels) {
    auto pack = [](int r, int c) {
        return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(r)) << 32) |
               static_cast<std::uint32_t>(c);
    };
    std::unordered_set<std::uint64_t> todo;
    for (const Pixel& p : pixels) todo.insert(pack(p.row, p.col));
    int components = 0;
    while (!todo.empty()) {
        ++components;
        std::queue<std::uint64_t> frontier;
        const std::uint64_t seed = *todo.begin();
        todo.erase(todo.begin());
        frontier.push(seed);
        while (!frontier.empty()) {
            const std::uint64_t key = frontier.front();
            frontier.pop();
            const int r = static_cast<std::int32_t>(key >> 32);
            const int c = static_cast<std::int32_t>(key & 0xffffffffu);
            for (int dr = -1; dr <= 1; ++dr)
                for (int dc = -1; dc <= 1; ++dc) {
                    const auto it = todo.find(pack(r + dr, c + dc));
                    if (it != todo.end()) {
                        frontier.push(*it);
                        todo.erase(it);
                    }
                }
        }
    }
    return components;
}

inline BinaryImage random_image(std::mt19937& rng, int height, int width, double density) {
    std::bernoulli_distribution black(density);
    BinaryImage img(width, height);
    for (int r = 0; r < height; ++r)
        for (int c = 0; c < width; ++c)
            if (black(rng)) img.set_black(r, c);
    return img;
}

inline PixelSet random_pixels(std::mt19937& rng, int height, int width, double density) {
    return random_image(rng, height, width, density).black_pixels();
}

inline WindowRect random_window(std::mt19937& rng, int height, int width) {
    std::uniform_int_distribution<int> rows_dist(3, std::min(8, height));
    std::uniform_int_distribution<int> cols_dist(3, std::min(8, width));
    const int rows = rows_dist(rng);
    const int cols = cols_dist(rng);
    std::uniform_int_distribution<int> top_dist(0, height - rows);
    std::uniform_int_distribution<int> left_dist(0, width - cols);
    return WindowRect{top_dist(rng), left_dist(rng), rows, cols};
}

// Hole-free by construction: every row is one interval and all intervals
// share a common column, so every white pixel escapes along its row.
inline BinaryImage staircase_blob(std::mt19937& rng, int height, int width) {
    BinaryImage img(width, height);
    std::uniform_int_distribution<int> col_dist(1, width - 2);
    const int spine = col_dist(rng);
    std::uniform_int_distribution<int> row_range(0, height - 1);
    int top = row_range(rng);
    int bottom = row_range(rng);
    if (top > bottom) std::swap(top, bottom);
    std::uniform_int_distribution<int> lo_dist(0, spine);
    std::uniform_int_distribution<int> hi_dist(spine, width - 1);
    for (int r = top; r <= bottom; ++r) {
        const int lo = lo_dist(rng);
        const int hi = hi_dist(rng);
        for (int c = lo; c <= hi; ++c) img.set_black(r, c);
    }
    return img;
}

inline std::filesystem::path temp_path(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("holescan_test_" + name);
}

}  // namespace holescan::fixtures
