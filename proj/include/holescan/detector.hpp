#pragma once

#include <vector>

#include "holescan/image.hpp"

namespace holescan {

enum class DetectorMode { detect, size };

struct DetectorConfig {
    int window_size = 3;  // n, square window, >= 3
    int step = 1;         // k >= 1
    DetectorMode mode = DetectorMode::detect;
    std::vector<int> scales;  // size-mode window sizes, each >= 3
};

/// Sliding-window hole location heatmap: every n x n window deposits
/// (interior + outer_merging counts of its dimension-1 profile) onto its
/// interior, and the result is masked to black pixels.
Heatmap detect_holes(const BinaryImage& img, const DetectorConfig& cfg);

/// Same sweep with deposit n^2 * (outer_merging - interior); holes already
/// bounded inside a window interior are punished, so entries may be
/// negative.
Heatmap estimate_sizes(const BinaryImage& img, const DetectorConfig& cfg);

/// Pointwise sum of estimate_sizes over each window size in scales.
Heatmap multiscale(const BinaryImage& img, const std::vector<int>& scales, int step);

}  // namespace holescan
