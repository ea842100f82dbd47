#pragma once

#include <vector>

#include "balpres/dyadic.hpp"

namespace balpres {

// Generators of G = <x, y, t | y^-1 x y = x^2, t^-1 x t = y>.
struct GAlphabet {
  std::size_t x = 0, y = 1, t = 2;
};

// K-segments separated by t-letters, free of pinches:
// segments[0] t^{e0} segments[1] t^{e1} ... segments[k].
struct GNormalForm {
  std::vector<DyadicAffine> segments{DyadicAffine{}};
  std::vector<int> t_signs;

  bool is_identity() const { return t_signs.empty() && segments.front().is_identity(); }
  std::size_t t_length() const { return t_signs.size(); }
};

// Pinches t^-1 x^k t -> y^k and t y^k t^-1 -> x^k, innermost first, left to right.
GNormalForm g_normal_form(const Word& w, GAlphabet alpha = {},
                          std::size_t bit_budget = kDefaultBitBudget);
Word g_reduce(const Word& w, GAlphabet alpha = {}, std::size_t bit_budget = kDefaultBitBudget,
              std::size_t max_letters = std::size_t{1} << 24);
bool g_is_trivial(const Word& w, GAlphabet alpha = {}, std::size_t bit_budget = kDefaultBitBudget);

}  // namespace balpres
