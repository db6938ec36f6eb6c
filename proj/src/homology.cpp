#include "holescan/homology.hpp"

#include <algorithm>
#include <bit>
#include <optional>
#include <stdexcept>

namespace holescan {

namespace {

// Columns of [boundary_{q+1} | representatives] reduced to column echelon
// form, with companion columns recording the combination of original
// columns behind each reduced one. One elimination then answers membership
// and coordinate queries for any number of cycles.
class ColumnEchelon {
public:
    explicit ColumnEchelon(BitMatrix matrix)
        : reduced_(std::move(matrix)),
          companion_(BitMatrix::identity(reduced_.cols())),
          owner_(reduced_.rows(), -1) {
        for (int c = 0; c < reduced_.cols(); ++c) {
            int p = reduced_.first_set_row(c);
            while (p >= 0 && owner_[p] >= 0) {
                reduced_.xor_col(c, owner_[p]);
                companion_.xor_col(c, owner_[p]);
                p = reduced_.first_set_row(c);
            }
            if (p >= 0) owner_[p] = c;
        }
    }

    // True when column c is dependent on the columns before it.
    bool dependent(int c) const { return reduced_.col_empty(c); }

    // Expresses rhs (a bit-vector over rows) as a combination of the
    // original columns, or nullopt when rhs is outside their span.
    std::optional<std::vector<std::uint8_t>> solve(std::vector<std::uint64_t> rhs) const {
        std::vector<std::uint8_t> combo(reduced_.cols(), 0);
        int p = first_set(rhs);
        while (p >= 0) {
            const int o = owner_[p];
            if (o < 0) return std::nullopt;
            auto col = reduced_.col_words(o);
            for (std::size_t w = 0; w < rhs.size(); ++w) rhs[w] ^= col[w];
            for (int j = 0; j < companion_.rows(); ++j)
                combo[j] ^= companion_.get(j, o) ? 1 : 0;
            p = first_set(rhs);
        }
        return combo;
    }

private:
    static int first_set(const std::vector<std::uint64_t>& v) {
        for (std::size_t w = 0; w < v.size(); ++w)
            if (v[w]) return static_cast<int>(w << 6) + std::countr_zero(v[w]);
        return -1;
    }

    BitMatrix reduced_;
    BitMatrix companion_;
    std::vector<int> owner_;
};

void require_dim(int q) {
    if (q < 0 || q > 2) throw std::invalid_argument("dimension must be 0, 1 or 2");
}

// Chain as a bit-vector over the local q-cell indices of the complex.
// Throws when a cell is missing or has the wrong dimension.
std::vector<std::uint64_t> chain_bits(const Chain& chain, const CubicalComplex& c, int q) {
    const int n = c.count(q);
    std::vector<std::uint64_t> bits((n + 63) / 64, 0);
    for (const Cell& cell : chain) {
        if (cell.dimension() != q)
            throw std::invalid_argument("chain contains a cell of the wrong dimension");
        const int idx = c.index_of(cell);
        if (idx < 0) throw std::invalid_argument("chain contains a cell outside the complex");
        const int local = idx - c.dim_begin(q);
        bits[local >> 6] ^= std::uint64_t{1} << (local & 63);
    }
    return bits;
}

bool is_cycle(const Chain& chain, const CubicalComplex& c, int q) {
    if (q == 0) return true;
    const int faces = c.count(q - 1);
    std::vector<std::uint64_t> bd((faces + 63) / 64, 0);
    for (const Cell& cell : chain) {
        const int idx = c.index_of(cell);
        for (std::int32_t f : c.boundary(idx)) {
            const int local = f - c.dim_begin(q - 1);
            bd[local >> 6] ^= std::uint64_t{1} << (local & 63);
        }
    }
    for (std::uint64_t w : bd)
        if (w) return false;
    return true;
}

BitMatrix representative_matrix(const HomologyBasis& basis, const CubicalComplex& c) {
    BitMatrix reps(c.count(basis.dim), basis.rank());
    for (int j = 0; j < basis.rank(); ++j) {
        auto bits = chain_bits(basis.representatives[j], c, basis.dim);
        auto dst = reps.col_words(j);
        std::copy(bits.begin(), bits.end(), dst.begin());
    }
    return reps;
}

}  // namespace

BitMatrix boundary_matrix(const CubicalComplex& c, int q) {
    if (q < 0 || q > 3) throw std::invalid_argument("boundary map index must be in 0..3");
    const int rows = q == 0 ? 0 : c.count(q - 1);
    const int cols = q == 3 ? 0 : c.count(q);
    BitMatrix m(rows, cols);
    if (q == 0 || q == 3) return m;
    const int col_base = c.dim_begin(q);
    const int row_base = c.dim_begin(q - 1);
    for (int j = 0; j < cols; ++j)
        for (std::int32_t f : c.boundary(col_base + j)) m.set(f - row_base, j);
    return m;
}

int betti(const CubicalComplex& c, int q) {
    require_dim(q);
    // dim ker d_q = n_q - rank d_q; subtract rank d_{q+1} for the image.
    return c.count(q) - rank_z2(boundary_matrix(c, q)) - rank_z2(boundary_matrix(c, q + 1));
}

HomologyBasis homology_basis(const CubicalComplex& c, int q) {
    require_dim(q);
    const int nq = c.count(q);
    const int base = c.dim_begin(q);

    // Kernel basis of d_q: reduce its columns left to right, mirroring the
    // operations on an identity companion; columns that vanish hand over
    // their companion as a kernel vector.
    BitMatrix d = boundary_matrix(c, q);
    BitMatrix companion = BitMatrix::identity(nq);
    std::vector<int> owner(d.rows(), -1);
    std::vector<int> kernel_cols;
    for (int j = 0; j < nq; ++j) {
        int p = d.first_set_row(j);
        while (p >= 0 && owner[p] >= 0) {
            d.xor_col(j, owner[p]);
            companion.xor_col(j, owner[p]);
            p = d.first_set_row(j);
        }
        if (p >= 0)
            owner[p] = j;
        else
            kernel_cols.push_back(j);
    }

    BitMatrix kernel(nq, static_cast<int>(kernel_cols.size()));
    for (int k = 0; k < kernel.cols(); ++k) {
        auto dst = kernel.col_words(k);
        auto src = companion.col_words(kernel_cols[k]);
        std::copy(src.begin(), src.end(), dst.begin());
    }

    // Quotient by boundaries: kernel columns still independent after the
    // d_{q+1} columns are eliminated become the representatives.
    const BitMatrix bd_next = boundary_matrix(c, q + 1);
    const int bd_cols = bd_next.cols();
    ColumnEchelon echelon(hstack(bd_next, kernel));

    HomologyBasis basis;
    basis.dim = q;
    for (int k = 0; k < kernel.cols(); ++k) {
        if (echelon.dependent(bd_cols + k)) continue;
        Chain rep;
        for (int r = 0; r < nq; ++r)
            if (kernel.get(r, k)) rep.push_back(c.cell(base + r));
        basis.representatives.push_back(std::move(rep));
    }
    return basis;
}

std::vector<std::uint8_t> express_in_basis(const Chain& cycle, const CubicalComplex& c,
                                           const HomologyBasis& basis) {
    const int q = basis.dim;
    require_dim(q);
    auto bits = chain_bits(cycle, c, q);
    if (!is_cycle(cycle, c, q)) throw std::invalid_argument("chain is not a cycle");

    const BitMatrix bd_next = boundary_matrix(c, q + 1);
    const int bd_cols = bd_next.cols();
    ColumnEchelon echelon(hstack(bd_next, representative_matrix(basis, c)));

    auto combo = echelon.solve(std::move(bits));
    if (!combo) throw std::logic_error("cycle not expressible in basis plus boundaries");
    std::vector<std::uint8_t> coords(basis.rank(), 0);
    for (int j = 0; j < basis.rank(); ++j) coords[j] = (*combo)[bd_cols + j];
    return coords;
}

BitMatrix induced_matrix(const CubicalComplex& sub, const CubicalComplex& amb, int q) {
    require_dim(q);
    if (!amb.contains(sub)) throw std::invalid_argument("sub is not a subcomplex of amb");

    const HomologyBasis sub_basis = homology_basis(sub, q);
    const HomologyBasis amb_basis = homology_basis(amb, q);

    // One echelon of [d_{q+1}(amb) | reps(amb)] serves every column.
    const BitMatrix bd_next = boundary_matrix(amb, q + 1);
    const int bd_cols = bd_next.cols();
    ColumnEchelon echelon(hstack(bd_next, representative_matrix(amb_basis, amb)));

    BitMatrix m(amb_basis.rank(), sub_basis.rank());
    for (int j = 0; j < sub_basis.rank(); ++j) {
        // Cells are shared coordinates, so a representative of sub is
        // already a cycle of amb.
        auto combo = echelon.solve(chain_bits(sub_basis.representatives[j], amb, q));
        if (!combo) throw std::logic_error("included cycle not expressible in ambient homology");
        for (int i = 0; i < amb_basis.rank(); ++i)
            if ((*combo)[bd_cols + i]) m.set(i, j);
    }
    return m;
}

}  // namespace holescan
