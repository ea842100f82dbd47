#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>

#include "balpres/dyadic.hpp"

namespace balpres {

// exp_height(base) with exp_0(b) = b and exp_{m+1}(b) = 2^{exp_m(b)}.
// Kept normalized: a nonzero height implies 2^base exceeds the materialization limit.
class TowerInt {
 public:
  TowerInt() = default;
  explicit TowerInt(mpz_class v) : base_(std::move(v)) {}
  static TowerInt exp(unsigned long height, mpz_class base,
                      std::size_t materialize_bits = kMaterializeBits);

  unsigned long height() const { return height_; }
  const mpz_class& base() const { return base_; }
  bool exact() const { return height_ == 0; }
  TowerInt exp2(unsigned long levels = 1) const;
  std::string str() const;

  static constexpr std::size_t kMaterializeBits = 4096;

 private:
  unsigned long height_ = 0;
  mpz_class base_ = 0;
};

TowerInt tower_E(unsigned long n);
std::strong_ordering tower_cmp(const TowerInt& a, const TowerInt& b);

// Sign of a - d^x for d >= 1, decided exactly when d^x fits the bit budget,
// otherwise by bracketing log2 d between integers and descending one level.
// Throws ResourceError when the bracket cannot separate the two sides.
std::strong_ordering tower_cmp_pow(const TowerInt& a, const mpz_class& d, const TowerInt& x,
                                   std::size_t bit_budget = kDefaultBitBudget);

}  // namespace balpres
