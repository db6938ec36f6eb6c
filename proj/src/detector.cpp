#include "holescan/detector.hpp"

#include <atomic>
#include <stdexcept>
#include <thread>
#include <vector>

#include "holescan/cubical.hpp"
#include "holescan/persistence.hpp"

namespace holescan {

namespace {

void check_config(const DetectorConfig& cfg, DetectorMode expected) {
    if (cfg.mode != expected) throw std::invalid_argument("detector mode does not match operation");
    if (cfg.window_size < 3) throw std::invalid_argument("window size must be at least 3");
    if (cfg.step < 1) throw std::invalid_argument("step must be at least 1");
}

// The sliding sweep shared by both algorithms. Every n x n window placed on
// the step grid and fitting inside the image deposits its score onto the
// window interior; the accumulated map is finally masked to black pixels.
//
// Window evaluations are independent, so they are farmed out to a small
// thread pool; each worker owns a partial heatmap and the partials are
// merged by pointwise addition. Scores are integers, so the merge order
// cannot change the result.
template <typename Score>
Heatmap sweep(const BinaryImage& img, int n, int k, Score score) {
    std::vector<int> tops, lefts;
    for (int top = 0; top + n <= img.height(); top += k) tops.push_back(top);
    for (int left = 0; left + n <= img.width(); left += k) lefts.push_back(left);
    const std::size_t placements = tops.size() * lefts.size();

    const unsigned hw = std::thread::hardware_concurrency();
    const std::size_t workers =
        std::min<std::size_t>(placements == 0 ? 1 : placements, hw == 0 ? 1 : hw);

    std::vector<Heatmap> partials(workers, Heatmap(img.width(), img.height()));
    std::atomic<std::size_t> next{0};

    auto work = [&](Heatmap& heat) {
        for (std::size_t i = next.fetch_add(1); i < placements; i = next.fetch_add(1)) {
            const int top = tops[i / lefts.size()];
            const int left = lefts[i % lefts.size()];
            const LocalSystem ls = build_local_system(img, WindowRect{top, left, n, n});
            const MergingProfile profile = merging_profile(persistence(short_filtration(ls)), 1);
            const double m = score(profile);
            if (m == 0.0) continue;
            for (int r = top + 1; r < top + n - 1; ++r)
                for (int c = left + 1; c < left + n - 1; ++c) heat.at(r, c) += m;
        }
    };

    if (workers == 1) {
        work(partials[0]);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work, std::ref(partials[w]));
        for (std::thread& t : pool) t.join();
    }

    Heatmap heat = std::move(partials[0]);
    for (std::size_t w = 1; w < workers; ++w)
        for (int r = 0; r < img.height(); ++r)
            for (int c = 0; c < img.width(); ++c) heat.at(r, c) += partials[w].at(r, c);

    for (int r = 0; r < img.height(); ++r)
        for (int c = 0; c < img.width(); ++c)
            if (!img.black(r, c)) heat.at(r, c) = 0.0;
    return heat;
}

}  // namespace

Heatmap detect_holes(const BinaryImage& img, const DetectorConfig& cfg) {
    check_config(cfg, DetectorMode::detect);
    return sweep(img, cfg.window_size, cfg.step, [](const MergingProfile& p) {
        return static_cast<double>(p.interior + p.outer_merging);
    });
}

Heatmap estimate_sizes(const BinaryImage& img, const DetectorConfig& cfg) {
    check_config(cfg, DetectorMode::size);
    const double volume = static_cast<double>(cfg.window_size) * cfg.window_size;
    return sweep(img, cfg.window_size, cfg.step, [volume](const MergingProfile& p) {
        return volume * (p.outer_merging - p.interior);
    });
}

Heatmap multiscale(const BinaryImage& img, const std::vector<int>& scales, int step) {
    if (scales.empty()) throw std::invalid_argument("at least one scale required");
    Heatmap sum(img.width(), img.height());
    for (int n : scales) {
        DetectorConfig cfg;
        cfg.window_size = n;
        cfg.step = step;
        cfg.mode = DetectorMode::size;
        const Heatmap h = estimate_sizes(img, cfg);
        for (int r = 0; r < img.height(); ++r)
            for (int c = 0; c < img.width(); ++c) sum.at(r, c) += h.at(r, c);
    }
    return sum;
}

}  // namespace holescan
