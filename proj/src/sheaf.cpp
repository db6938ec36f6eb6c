#include "holescan/sheaf.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "holescan/bitmatrix.hpp"
#include "holescan/homology.hpp"

namespace holescan {

namespace {

std::uint64_t pack(int row, int col) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(row)) << 32) |
           static_cast<std::uint32_t>(col);
}

void check_n_system(const NSystem& sys) {
    if (sys.parts.size() < 2)
        throw std::invalid_argument("an n-system needs at least two parts");
    std::unordered_set<std::uint64_t> ambient;
    ambient.reserve(sys.ambient.size() * 2);
    for (const Pixel& p : sys.ambient) ambient.insert(pack(p.row, p.col));
    for (const PixelSet& part : sys.parts)
        for (const Pixel& p : part)
            if (!ambient.count(pack(p.row, p.col)))
                throw std::invalid_argument("part is not contained in the ambient pixel set");
    for (std::size_t i = 0; i < sys.parts.size(); ++i)
        for (std::size_t j = i + 1; j < sys.parts.size(); ++j)
            if (!closure_disjoint(sys.parts[i], sys.parts[j]))
                throw std::invalid_argument("parts are not pairwise closure-disjoint");
}

}  // namespace

SectionSpace global_section_dim(const LocalSystem& ls, int q) {
    const CubicalComplex cx = realize(ls.ambient);
    const BitMatrix rho1 = induced_matrix(realize(ls.x1), cx, q);
    const BitMatrix rho2 = induced_matrix(realize(ls.x2), cx, q);

    // Over the two-element field f(v) - g(w) is f(v) + g(w), so phi is just
    // the two restriction matrices side by side.
    const BitMatrix phi = hstack(rho1, rho2);
    SectionSpace s;
    s.q = q;
    s.phi_rank = rank_z2(phi);
    s.dim_gamma = phi.cols() - s.phi_rank;
    return s;
}

SectionSpace global_section_dim_n(const NSystem& sys, int q) {
    check_n_system(sys);
    const int n = static_cast<int>(sys.parts.size());

    const CubicalComplex cx = realize(sys.ambient);
    std::vector<BitMatrix> rho;
    rho.reserve(n);
    for (const PixelSet& part : sys.parts) rho.push_back(induced_matrix(realize(part), cx, q));

    const int amb_rank = rho.front().rows();
    std::vector<int> col_begin(n + 1, 0);
    for (int i = 0; i < n; ++i) col_begin[i + 1] = col_begin[i] + rho[i].cols();

    // Block row k compares part 1 with part k+2: rho_1 at block column 0,
    // rho_{k+2} at block column k+1 (signs collapse over Z2).
    BitMatrix phi((n - 1) * amb_rank, col_begin[n]);
    for (int k = 0; k < n - 1; ++k) {
        const int row_base = k * amb_rank;
        for (int j = 0; j < rho[0].cols(); ++j)
            for (int r = 0; r < amb_rank; ++r)
                if (rho[0].get(r, j)) phi.set(row_base + r, j);
        const BitMatrix& other = rho[k + 1];
        for (int j = 0; j < other.cols(); ++j)
            for (int r = 0; r < amb_rank; ++r)
                if (other.get(r, j)) phi.set(row_base + r, col_begin[k + 1] + j);
    }

    SectionSpace s;
    s.q = q;
    s.phi_rank = rank_z2(phi);
    s.dim_gamma = col_begin[n] - s.phi_rank;
    return s;
}

}  // namespace holescan
