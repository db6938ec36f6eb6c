#pragma once

#include <cstdint>
#include <vector>

#include "holescan/bitmatrix.hpp"
#include "holescan/cubical.hpp"

namespace holescan {

/// A chain over the two-element field: a set of cells, sorted canonically.
using Chain = std::vector<Cell>;

/// Representative cycles spanning the q-th homology of a complex,
/// independent modulo boundaries. Deterministic given the canonical cell
/// order, so identical complexes always get identical bases.
struct HomologyBasis {
    int dim = 0;
    std::vector<Chain> representatives;

    int rank() const { return static_cast<int>(representatives.size()); }
};

/// Matrix of the q-th boundary map: rows index (q-1)-cells, columns index
/// q-cells, both within their canonical dimension blocks.
BitMatrix boundary_matrix(const CubicalComplex& c, int q);

/// dim ker boundary_q - dim im boundary_{q+1}.
int betti(const CubicalComplex& c, int q);

HomologyBasis homology_basis(const CubicalComplex& c, int q);

/// Coordinates of the cycle's class in the basis: the unique lambda with
/// cycle - sum(lambda_i * rep_i) a boundary. Throws when the chain is not a
/// cycle of the basis dimension.
std::vector<std::uint8_t> express_in_basis(const Chain& cycle, const CubicalComplex& c,
                                           const HomologyBasis& basis);

/// Matrix of the inclusion-induced map on q-th homology in the deterministic
/// bases of sub and amb. Throws when sub is not a subcomplex of amb.
BitMatrix induced_matrix(const CubicalComplex& sub, const CubicalComplex& amb, int q);

}  // namespace holescan
