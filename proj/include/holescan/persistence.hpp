#pragma once

#include <limits>
#include <vector>

#include "holescan/cubical.hpp"
#include "holescan/image.hpp"

namespace holescan {

inline constexpr int kInfiniteDeath = std::numeric_limits<int>::max();

/// A complex whose cells each carry an integer filtration level, monotone
/// along the face relation (validated on construction).
class Filtration {
public:
    Filtration(CubicalComplex complex, std::vector<int> levels);

    const CubicalComplex& complex() const { return complex_; }
    int level(int cell_index) const { return levels_[cell_index]; }
    const std::vector<int>& levels() const { return levels_; }
    const std::vector<int>& levels_attained() const { return levels_attained_; }

    /// Subcomplex of all cells at level <= t.
    CubicalComplex subcomplex_at(int t) const;

private:
    CubicalComplex complex_;
    std::vector<int> levels_;
    std::vector<int> levels_attained_;  // sorted, distinct
};

struct Bar {
    int dim = 0;
    int birth = 0;
    int death = kInfiniteDeath;

    bool finite() const { return death != kInfiniteDeath; }
    friend auto operator<=>(const Bar&, const Bar&) = default;
};

/// Multiset of (dimension, birth, death) bars, zero-length pairs dropped.
class PersistenceDiagram {
public:
    PersistenceDiagram() = default;
    explicit PersistenceDiagram(std::vector<Bar> bars);

    const std::vector<Bar>& bars() const { return bars_; }
    int count(int q, int birth, int death) const;
    /// Bars born at or before t and still alive after t; matches the Betti
    /// number of the level-t subcomplex.
    int alive_count(int q, int t) const;

    friend bool operator==(const PersistenceDiagram&, const PersistenceDiagram&) = default;

private:
    std::vector<Bar> bars_;  // sorted by (dim, birth, death)
};

/// Bar counts of a short filtration in one dimension:
///   merging       m_q  = #(2,3) bars,
///   outer_merging o_q  = #(3,inf) bars,
///   interior      i_q  = #(1,inf) bars.
struct MergingProfile {
    int q = 0;
    int merging = 0;
    int outer_merging = 0;
    int interior = 0;

    friend bool operator==(const MergingProfile&, const MergingProfile&) = default;
};

/// Levels on the realization of the full pixel grid: each pixel square at
/// its gray value, each face at the minimum over its incident pixels.
Filtration sublevel_filtration(const GrayscaleImage& img);

/// The three-step filtration of a local system: X1 squares at level 1, X2
/// squares at level 2, the rest of X at level 3, faces at the minimum over
/// incident squares. Closure-disjointness guarantees the level-1 and
/// level-2 subcomplexes are exactly realize(X1) and realize(X1 ∪ X2).
Filtration short_filtration(const LocalSystem& ls);

/// Standard left-to-right boundary-matrix column reduction with cells
/// ordered by (level, dimension, canonical order).
PersistenceDiagram persistence(const Filtration& f);

/// Extracts the q-dimensional counts; requires a diagram whose levels all
/// lie in {1,2,3}.
MergingProfile merging_profile(const PersistenceDiagram& d, int q);

/// The same counts computed purely from ranks of inclusion-induced maps on
/// homology, never from barcode reduction. Independent cross-check of
/// merging_profile.
MergingProfile rank_oracle_counts(const LocalSystem& ls, int q);

}  // namespace holescan
