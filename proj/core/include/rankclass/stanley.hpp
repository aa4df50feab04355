#pragma once

#include <vector>

#include "rankclass/perm.hpp"
#include "rankclass/symfunc.hpp"

namespace rankclass {

// The cyclically decreasing element of the av = 0 affine group with support
// `residues`, a proper subset of Z/nZ. Its unique reduced word lists each
// maximal cyclic run from the top down.
std::vector<int> cyclically_decreasing_word(int n, const std::vector<int>& residues);
AffinePermutation cyclically_decreasing_element(int n, const std::vector<int>& residues);

// Number of factorizations f = d_1 d_2 ... d_r into cyclically decreasing
// factors with lengths `lengths` whose lengths add up to length(f).
Integer count_decreasing_factorizations(const AffinePermutation& f, const std::vector<int>& lengths);

// Affine Stanley symmetric function in the monomial basis. Windows with
// av(f) != 0 are first shifted to av = 0.
MonomialExpansion affine_stanley(const AffinePermutation& f);

// Stanley symmetric function of an ordinary permutation, in the Schur basis.
SchurExpansion stanley(const Permutation& w);

}  // namespace rankclass
