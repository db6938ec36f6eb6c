#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "holescan/image.hpp"

namespace holescan {

// Cells live in "doubled" coordinates: pixel (r,c) occupies the square cell
// (2r+1, 2c+1). A coordinate is odd exactly in the directions the cell
// extends, so dimension = number of odd coordinates and the boundary of a
// cell is obtained by replacing each odd coordinate o with o-1 and o+1.
struct Cell {
    int row = 0;
    int col = 0;

    int dimension() const { return (row & 1) + (col & 1); }
    friend bool operator==(const Cell&, const Cell&) = default;
};

// Canonical order: dimension, then row, then column. Fixes tie-breaking
// everywhere downstream so persistence pairing is deterministic.
inline bool canonical_less(const Cell& a, const Cell& b) {
    const int da = a.dimension();
    const int db = b.dimension();
    if (da != db) return da < db;
    if (a.row != b.row) return a.row < b.row;
    return a.col < b.col;
}

// Writes the 2*dim boundary cells into out and returns the count.
inline int cell_boundary(const Cell& c, std::array<Cell, 4>& out) {
    int n = 0;
    if (c.row & 1) {
        out[n++] = Cell{c.row - 1, c.col};
        out[n++] = Cell{c.row + 1, c.col};
    }
    if (c.col & 1) {
        out[n++] = Cell{c.row, c.col - 1};
        out[n++] = Cell{c.row, c.col + 1};
    }
    return n;
}

/// Finite set of cells closed under taking faces, with cells stored in
/// canonical order (all 0-cells first, then 1-cells, then 2-cells).
class CubicalComplex {
public:
    CubicalComplex() = default;

    /// Builds a complex from an explicit cell list; throws if the list is
    /// not closed under taking faces.
    static CubicalComplex from_cells(std::vector<Cell> cells);

    int size() const { return static_cast<int>(cells_.size()); }
    const Cell& cell(int index) const { return cells_[index]; }
    const std::vector<Cell>& cells() const { return cells_; }

    /// Index in canonical order, or -1 when the cell is absent.
    int index_of(const Cell& c) const;
    bool contains_cell(const Cell& c) const { return index_of(c) >= 0; }

    /// Indices of the boundary cells of the cell at `index`.
    std::span<const std::int32_t> boundary(int index) const;

    int count(int dim) const { return dim_begin_[dim + 1] - dim_begin_[dim]; }
    /// First canonical index of the given dimension block.
    int dim_begin(int dim) const { return dim_begin_[dim]; }

    /// Cell-wise subset test.
    bool contains(const CubicalComplex& sub) const;

    friend bool operator==(const CubicalComplex& a, const CubicalComplex& b) {
        return a.cells_ == b.cells_;
    }

private:
    void build_index();

    std::vector<Cell> cells_;                 // canonical order
    std::vector<std::int32_t> incidence_;     // flattened boundary lists
    std::vector<std::int32_t> offsets_;       // per-cell slice of incidence_
    std::array<int, 4> dim_begin_ = {0, 0, 0, 0};
    std::unordered_map<std::uint64_t, std::int32_t> index_;
};

/// Geometric realization of a pixel set: the closed unit square of every
/// pixel together with all its edges and vertices. Monotone in the input,
/// so nested pixel sets realize to nested complexes.
CubicalComplex realize(const PixelSet& pixels);

/// R = rows [top, top+size_rows-1] x cols [left, left+size_cols-1].
struct WindowRect {
    int top = 0;
    int left = 0;
    int size_rows = 0;
    int size_cols = 0;

    friend bool operator==(const WindowRect&, const WindowRect&) = default;
};

/// The outermost one-pixel ring B of the window. Requires both sizes >= 3,
/// otherwise the interior R \ B would be empty.
PixelSet boundary_band(const WindowRect& w);

/// The triad (X, X1, X2): X1 = X intersected with the window interior,
/// X2 = X minus the window. X1 and X2 pixels always differ by >= 2 in some
/// axis, which is what makes their closed-square realizations disjoint.
struct LocalSystem {
    PixelSet ambient;  // X
    WindowRect window;
    PixelSet x1;  // X ∩ R̂
    PixelSet x2;  // X \ R

    /// The companion triad (X, X2, X1); drives the other short filtration.
    LocalSystem swapped() const { return LocalSystem{ambient, window, x2, x1}; }
};

LocalSystem build_local_system(const BinaryImage& img, const WindowRect& w);

/// True when every pair of pixels drawn from a and b is at Chebyshev
/// distance >= 2, i.e. the closed squares of a and b do not touch.
bool closure_disjoint(const PixelSet& a, const PixelSet& b);

}  // namespace holescan
