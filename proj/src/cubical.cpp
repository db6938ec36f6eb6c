#include "holescan/cubical.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace holescan {

namespace {

std::uint64_t pack(int row, int col) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(row)) << 32) |
           static_cast<std::uint32_t>(col);
}

void require_window_size(const WindowRect& w) {
    if (w.size_rows < 3 || w.size_cols < 3)
        throw std::invalid_argument("window must be at least 3x3, got " +
                                    std::to_string(w.size_rows) + "x" + std::to_string(w.size_cols));
}

}  // namespace

CubicalComplex CubicalComplex::from_cells(std::vector<Cell> cells) {
    std::sort(cells.begin(), cells.end(), canonical_less);
    cells.erase(std::unique(cells.begin(), cells.end()), cells.end());

    CubicalComplex c;
    c.cells_ = std::move(cells);
    c.build_index();
    return c;
}

void CubicalComplex::build_index() {
    index_.reserve(cells_.size() * 2);
    for (std::int32_t i = 0; i < static_cast<std::int32_t>(cells_.size()); ++i)
        index_.emplace(pack(cells_[i].row, cells_[i].col), i);

    dim_begin_ = {0, 0, 0, 0};
    for (const Cell& c : cells_) ++dim_begin_[c.dimension() + 1];
    for (int d = 0; d < 3; ++d) dim_begin_[d + 1] += dim_begin_[d];

    offsets_.assign(cells_.size() + 1, 0);
    incidence_.clear();
    incidence_.reserve(cells_.size() * 2);
    std::array<Cell, 4> faces;
    for (std::size_t i = 0; i < cells_.size(); ++i) {
        const int n = cell_boundary(cells_[i], faces);
        for (int k = 0; k < n; ++k) {
            const int idx = index_of(faces[k]);
            if (idx < 0) throw std::invalid_argument("cell set is not closed under taking faces");
            incidence_.push_back(idx);
        }
        offsets_[i + 1] = static_cast<std::int32_t>(incidence_.size());
    }
}

int CubicalComplex::index_of(const Cell& c) const {
    const auto it = index_.find(pack(c.row, c.col));
    return it == index_.end() ? -1 : it->second;
}

std::span<const std::int32_t> CubicalComplex::boundary(int index) const {
    return {incidence_.data() + offsets_[index],
            static_cast<std::size_t>(offsets_[index + 1] - offsets_[index])};
}

bool CubicalComplex::contains(const CubicalComplex& sub) const {
    for (const Cell& c : sub.cells_)
        if (!contains_cell(c)) return false;
    return true;
}

CubicalComplex realize(const PixelSet& pixels) {
    std::vector<Cell> cells;
    cells.reserve(pixels.size() * 9);
    for (const Pixel& p : pixels) {
        const int r = 2 * p.row + 1;
        const int c = 2 * p.col + 1;
        for (int dr = -1; dr <= 1; ++dr)
            for (int dc = -1; dc <= 1; ++dc) cells.push_back(Cell{r + dr, c + dc});
    }
    return CubicalComplex::from_cells(std::move(cells));
}

PixelSet boundary_band(const WindowRect& w) {
    require_window_size(w);
    const int bottom = w.top + w.size_rows - 1;
    const int right = w.left + w.size_cols - 1;
    PixelSet band;
    band.reserve(2 * w.size_rows + 2 * w.size_cols - 4);
    for (int c = w.left; c <= right; ++c) band.push_back(Pixel{w.top, c});
    for (int r = w.top + 1; r < bottom; ++r) {
        band.push_back(Pixel{r, w.left});
        band.push_back(Pixel{r, right});
    }
    for (int c = w.left; c <= right; ++c) band.push_back(Pixel{bottom, c});
    std::sort(band.begin(), band.end());
    return band;
}

LocalSystem build_local_system(const BinaryImage& img, const WindowRect& w) {
    require_window_size(w);
    if (w.top < 0 || w.left < 0 || w.top + w.size_rows > img.height() ||
        w.left + w.size_cols > img.width())
        throw std::invalid_argument("window does not lie inside the image grid");

    const int bottom = w.top + w.size_rows - 1;
    const int right = w.left + w.size_cols - 1;

    LocalSystem ls;
    ls.window = w;
    ls.ambient = img.black_pixels();
    for (const Pixel& p : ls.ambient) {
        const bool in_window =
            p.row >= w.top && p.row <= bottom && p.col >= w.left && p.col <= right;
        const bool in_interior =
            p.row > w.top && p.row < bottom && p.col > w.left && p.col < right;
        if (in_interior)
            ls.x1.push_back(p);
        else if (!in_window)
            ls.x2.push_back(p);
    }
    return ls;
}

bool closure_disjoint(const PixelSet& a, const PixelSet& b) {
    const PixelSet& small = a.size() <= b.size() ? a : b;
    const PixelSet& large = a.size() <= b.size() ? b : a;
    std::unordered_set<std::uint64_t> lookup;
    lookup.reserve(large.size() * 2);
    for (const Pixel& p : large) lookup.insert(pack(p.row, p.col));
    for (const Pixel& p : small)
        for (int dr = -1; dr <= 1; ++dr)
            for (int dc = -1; dc <= 1; ++dc)
                if (lookup.count(pack(p.row + dr, p.col + dc))) return false;
    return true;
}

}  // namespace holescan
