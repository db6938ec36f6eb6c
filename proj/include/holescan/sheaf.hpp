#pragma once

#include <vector>

#include "holescan/cubical.hpp"

namespace holescan {

/// Ambient pixel set X with n >= 2 parts, pairwise closure-disjoint and each
/// contained in X.
struct NSystem {
    PixelSet ambient;
    std::vector<PixelSet> parts;
};

/// Dimension data of a global-section space: dim_gamma = sum of the part
/// Betti numbers minus the rank of the stacked difference map phi.
struct SectionSpace {
    int q = 0;
    int dim_gamma = 0;
    int phi_rank = 0;

    friend bool operator==(const SectionSpace&, const SectionSpace&) = default;
};

/// Sections of H_q(X1) -> H_q(X) <- H_q(X2). Over the two-element field the
/// difference map is the XOR of the two induced matrices side by side.
SectionSpace global_section_dim(const LocalSystem& ls, int q);

/// n-part generalization: phi maps the direct sum of the part homologies to
/// n-1 copies of H_q(X), block row i comparing part 1 against part i+1.
SectionSpace global_section_dim_n(const NSystem& sys, int q);

}  // namespace holescan
