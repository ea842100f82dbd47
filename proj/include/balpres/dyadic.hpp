#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

#include "balpres/word.hpp"

namespace balpres {

inline constexpr std::size_t kDefaultBitBudget = std::size_t{1} << 20;

// Element of K = <x, y | y^-1 x y = x^2> acting on dyadic rationals as
// t -> 2^a t + b with b = b_num / 2^b_exp. x acts as t+1, y as 2t.
struct DyadicAffine {
  long a = 0;
  mpz_class b_num = 0;
  unsigned long b_exp = 0;

  static DyadicAffine identity() { return {}; }
  static DyadicAffine x_power(const mpz_class& k);
  static DyadicAffine y_power(long k);

  bool is_identity() const { return a == 0 && b_num == 0; }
  void canonicalize();
  std::size_t bits() const;
  std::string str() const;

  friend bool operator==(const DyadicAffine& l, const DyadicAffine& r) {
    return l.a == r.a && l.b_exp == r.b_exp && l.b_num == r.b_num;
  }
};

// Apply `first` and then `second`: (first * second) as a word product.
DyadicAffine compose(const DyadicAffine& first, const DyadicAffine& second,
                     std::size_t bit_budget = kDefaultBitBudget);
DyadicAffine inverse(const DyadicAffine& g, std::size_t bit_budget = kDefaultBitBudget);

// Letters outside {x_gen, y_gen} raise InputError.
DyadicAffine k_eval(const Word& w, std::size_t x_gen = 0, std::size_t y_gen = 1,
                    std::size_t bit_budget = kDefaultBitBudget);

enum class KBase { x, y };
std::optional<mpz_class> k_power_of(const DyadicAffine& g, KBase base);

// Word y^q x^m y^-p representing g; throws ResourceError past max_letters.
Word k_word(const DyadicAffine& g, std::size_t x_gen = 0, std::size_t y_gen = 1,
            std::size_t max_letters = std::size_t{1} << 24);

}  // namespace balpres
