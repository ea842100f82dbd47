#pragma once

#include <gmpxx.h>

#include <vector>

#include "balpres/presentation.hpp"

namespace balpres {

// Rows are relators, columns generators; entries are exponent sums.
using IntMatrix = std::vector<std::vector<mpz_class>>;

IntMatrix relation_matrix(const Presentation& p);

// Diagonal of the Smith form, one entry per column: invariant factors
// d1 | d2 | ... followed by zeros for the free part of the cokernel.
std::vector<mpz_class> smith_normal_form(const IntMatrix& m, std::size_t cols);

// Smith diagonal with the unit factors dropped: the isomorphism type of H1,
// independent of how many generators the presentation carries.
std::vector<mpz_class> abelian_invariants(const Presentation& p);

// Abelianization is trivial: every invariant factor is 1 and rank = #generators.
bool h1_trivial(const Presentation& p);

}  // namespace balpres
