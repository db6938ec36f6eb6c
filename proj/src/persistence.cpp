#include "holescan/persistence.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

#include "holescan/homology.hpp"

namespace holescan {

namespace {

std::uint64_t pack(int row, int col) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(row)) << 32) |
           static_cast<std::uint32_t>(col);
}

// Symmetric difference of two sorted index vectors, reusing a scratch
// buffer; this is the column addition of the reduction.
void xor_merge(std::vector<std::int32_t>& dst, const std::vector<std::int32_t>& src,
               std::vector<std::int32_t>& scratch) {
    scratch.clear();
    std::set_symmetric_difference(dst.begin(), dst.end(), src.begin(), src.end(),
                                  std::back_inserter(scratch));
    dst.swap(scratch);
}

void check_local_system(const LocalSystem& ls) {
    std::unordered_set<std::uint64_t> ambient;
    ambient.reserve(ls.ambient.size() * 2);
    for (const Pixel& p : ls.ambient) ambient.insert(pack(p.row, p.col));
    for (const Pixel& p : ls.x1)
        if (!ambient.count(pack(p.row, p.col)))
            throw std::invalid_argument("x1 is not contained in the ambient pixel set");
    for (const Pixel& p : ls.x2)
        if (!ambient.count(pack(p.row, p.col)))
            throw std::invalid_argument("x2 is not contained in the ambient pixel set");
    if (!closure_disjoint(ls.x1, ls.x2))
        throw std::invalid_argument("x1 and x2 have touching closures");
}

// Levels for the faces of already-leveled squares: the minimum over the
// incident pixel squares present in the complex.
std::vector<int> spread_levels(const CubicalComplex& complex,
                               const std::vector<int>& square_level) {
    std::vector<int> level(complex.size(), 0);
    const int sq_base = complex.dim_begin(2);
    for (int i = 0; i < complex.size(); ++i) {
        const Cell& cell = complex.cell(i);
        if (cell.dimension() == 2) {
            level[i] = square_level[i - sq_base];
            continue;
        }
        const int rows[2] = {cell.row & 1 ? cell.row : cell.row - 1,
                             cell.row & 1 ? cell.row : cell.row + 1};
        const int cols[2] = {cell.col & 1 ? cell.col : cell.col - 1,
                             cell.col & 1 ? cell.col : cell.col + 1};
        int best = kInfiniteDeath;
        for (int r : rows)
            for (int c : cols) {
                const int idx = complex.index_of(Cell{r, c});
                if (idx >= 0) best = std::min(best, square_level[idx - sq_base]);
            }
        level[i] = best;
    }
    return level;
}

}  // namespace

Filtration::Filtration(CubicalComplex complex, std::vector<int> levels)
    : complex_(std::move(complex)), levels_(std::move(levels)) {
    if (levels_.size() != static_cast<std::size_t>(complex_.size()))
        throw std::invalid_argument("one filtration level per cell required");
    for (int i = 0; i < complex_.size(); ++i)
        for (std::int32_t f : complex_.boundary(i))
            if (levels_[f] > levels_[i])
                throw std::invalid_argument("filtration levels must be monotone along faces");
    levels_attained_ = levels_;
    std::sort(levels_attained_.begin(), levels_attained_.end());
    levels_attained_.erase(std::unique(levels_attained_.begin(), levels_attained_.end()),
                           levels_attained_.end());
}

CubicalComplex Filtration::subcomplex_at(int t) const {
    std::vector<Cell> cells;
    for (int i = 0; i < complex_.size(); ++i)
        if (levels_[i] <= t) cells.push_back(complex_.cell(i));
    return CubicalComplex::from_cells(std::move(cells));
}

PersistenceDiagram::PersistenceDiagram(std::vector<Bar> bars) : bars_(std::move(bars)) {
    std::sort(bars_.begin(), bars_.end());
}

int PersistenceDiagram::count(int q, int birth, int death) const {
    int n = 0;
    for (const Bar& b : bars_)
        if (b.dim == q && b.birth == birth && b.death == death) ++n;
    return n;
}

int PersistenceDiagram::alive_count(int q, int t) const {
    int n = 0;
    for (const Bar& b : bars_)
        if (b.dim == q && b.birth <= t && b.death > t) ++n;
    return n;
}

Filtration sublevel_filtration(const GrayscaleImage& img) {
    PixelSet all;
    all.reserve(static_cast<std::size_t>(img.width()) * img.height());
    for (int r = 0; r < img.height(); ++r)
        for (int c = 0; c < img.width(); ++c) all.push_back(Pixel{r, c});
    CubicalComplex complex = realize(all);

    std::vector<int> square_level(complex.count(2), 0);
    const int sq_base = complex.dim_begin(2);
    for (int i = 0; i < complex.count(2); ++i) {
        const Cell& sq = complex.cell(sq_base + i);
        square_level[i] = img.at((sq.row - 1) / 2, (sq.col - 1) / 2);
    }
    std::vector<int> levels = spread_levels(complex, square_level);
    return Filtration(std::move(complex), std::move(levels));
}

Filtration short_filtration(const LocalSystem& ls) {
    check_local_system(ls);

    CubicalComplex complex = realize(ls.ambient);
    std::unordered_set<std::uint64_t> in_x1;
    std::unordered_set<std::uint64_t> in_x2;
    for (const Pixel& p : ls.x1) in_x1.insert(pack(p.row, p.col));
    for (const Pixel& p : ls.x2) in_x2.insert(pack(p.row, p.col));

    std::vector<int> square_level(complex.count(2), 3);
    const int sq_base = complex.dim_begin(2);
    for (int i = 0; i < complex.count(2); ++i) {
        const Cell& sq = complex.cell(sq_base + i);
        const std::uint64_t key = pack((sq.row - 1) / 2, (sq.col - 1) / 2);
        if (in_x1.count(key))
            square_level[i] = 1;
        else if (in_x2.count(key))
            square_level[i] = 2;
    }
    std::vector<int> levels = spread_levels(complex, square_level);
    return Filtration(std::move(complex), std::move(levels));
}

PersistenceDiagram persistence(const Filtration& f) {
    const CubicalComplex& complex = f.complex();
    const int n = complex.size();

    // Cells by (level, dimension, canonical order); the complex is already
    // canonically ordered, so the index is the tie-break.
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return f.level(a) < f.level(b); });
    std::vector<int> pos(n);
    for (int j = 0; j < n; ++j) pos[order[j]] = j;

    std::vector<std::vector<std::int32_t>> cols(n);
    for (int j = 0; j < n; ++j) {
        auto bd = complex.boundary(order[j]);
        cols[j].assign(bd.begin(), bd.end());
        for (auto& v : cols[j]) v = pos[v];
        std::sort(cols[j].begin(), cols[j].end());
    }

    std::vector<int> pivot_owner(n, -1);
    std::vector<std::int32_t> scratch;
    std::vector<Bar> bars;
    std::vector<bool> killed(n, false);
    for (int j = 0; j < n; ++j) {
        auto& col = cols[j];
        while (!col.empty() && pivot_owner[col.back()] >= 0)
            xor_merge(col, cols[pivot_owner[col.back()]], scratch);
        if (col.empty()) continue;
        const int i = col.back();
        pivot_owner[i] = j;
        killed[i] = true;
        const int birth = f.level(order[i]);
        const int death = f.level(order[j]);
        if (birth != death)
            bars.push_back(Bar{complex.cell(order[i]).dimension(), birth, death});
    }
    for (int j = 0; j < n; ++j) {
        if (killed[j] || !cols[j].empty()) continue;
        bars.push_back(Bar{complex.cell(order[j]).dimension(), f.level(order[j]), kInfiniteDeath});
    }
    return PersistenceDiagram(std::move(bars));
}

MergingProfile merging_profile(const PersistenceDiagram& d, int q) {
    MergingProfile p;
    p.q = q;
    for (const Bar& b : d.bars()) {
        const bool birth_ok = b.birth >= 1 && b.birth <= 3;
        const bool death_ok = !b.finite() || (b.death >= 1 && b.death <= 3);
        if (!birth_ok || !death_ok)
            throw std::invalid_argument("diagram contains levels outside {1,2,3}");
        if (b.dim != q) continue;
        if (b.birth == 2 && b.death == 3) ++p.merging;
        if (b.birth == 3 && !b.finite()) ++p.outer_merging;
        if (b.birth == 1 && !b.finite()) ++p.interior;
    }
    return p;
}

MergingProfile rank_oracle_counts(const LocalSystem& ls, int q) {
    check_local_system(ls);

    PixelSet x12 = ls.x1;
    x12.insert(x12.end(), ls.x2.begin(), ls.x2.end());
    std::sort(x12.begin(), x12.end());

    const CubicalComplex cx1 = realize(ls.x1);
    const CubicalComplex cx2 = realize(ls.x2);
    const CubicalComplex cx12 = realize(x12);
    const CubicalComplex cx = realize(ls.ambient);

    const BitMatrix a = induced_matrix(cx1, cx12, q);
    const BitMatrix b = induced_matrix(cx12, cx, q);
    const int rank_b = rank_z2(b);
    const int rank_ba = rank_z2(multiply(b, a));

    MergingProfile p;
    p.q = q;
    p.merging = betti(cx2, q) - rank_b + rank_ba;
    p.outer_merging = betti(cx, q) - rank_b;
    p.interior = rank_ba;
    return p;
}

}  // namespace holescan
