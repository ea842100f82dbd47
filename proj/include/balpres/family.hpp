#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "balpres/encoding.hpp"
#include "balpres/tietze.hpp"
#include "balpres/tower.hpp"

namespace balpres {

// Generator order of mu_v; H_v uses the first four.
inline const std::vector<std::string> kMuGens = {"x", "y", "t", "s", "xh", "yh", "th", "sh"};
inline const std::vector<std::string> kMu0Gens = {"x", "t", "xh", "th"};

// rep(k, s) equals y^(s E_k) in G: rep(0, s) = y^s,
// rep(k, s) = t^-1 rep(k-1, -1) x^s rep(k-1, 1) t.
Word rep_word(unsigned long k, int s);

// w_n over {x=0, y=1, t=2}; length 48 * 2^n.
Word build_w(unsigned long n);
// w_{n,m}: y^(+-E_{n-j}) expanded for j < m, y^(+-E_{n-m}) left literal.
Word build_w_nm(unsigned long n, unsigned long m, std::size_t bit_budget = kDefaultBitBudget);

// v is a block word over {x=0, y=1}.
Presentation build_H(const Word& v, unsigned long n);
Presentation build_mu(const Word& v, unsigned long n);
Presentation build_mu0(const Word& v, unsigned long n);
// Eliminates s, sh, y, yh from mu_v; replays to build_mu0(v, n).
TietzeScript mu_to_mu0(const Word& v, unsigned long n);

struct FamilyMember {
  BlockPattern blocks;
  unsigned long n = 0;
  Presentation mu;
  std::size_t length = 0;
  Fingerprint fingerprint;
};

// l(mu_v) as a function of l(v) and n.
std::size_t mu_length(std::size_t v_len, unsigned long n);
// All mu_v with exactly `blocks` blocks, patterns in lexicographic order.
std::vector<FamilyMember> enumerate_blocks(std::size_t blocks, unsigned long n);
// All mu_v (v nonempty) with l(mu_v) <= l, by block count then pattern.
std::vector<FamilyMember> enumerate_family(std::size_t l, unsigned long n);
std::string manifest_line(const FamilyMember& m);

struct ChooseN {
  unsigned long exact = 0;                   // smallest n with E_{n-1} > d^exp_m(22 l)
  std::optional<unsigned long> sufficient;   // smallest n with E_{n-3} > 2 log2(22 exp_m(l))
};
ChooseN choose_n(const mpz_class& l, unsigned long m, const mpz_class& d,
                 std::size_t bit_budget = kDefaultBitBudget);

// Position of a K-element B between two occurrences of w_n / w_n^-1.
enum class BContext { aa, aA, Aa, AA };
// True when the inequation for the context holds, i.e. the relevant
// conjugate of B is not a power of y.
bool check_B_condition(const Word& B, BContext ctx);

struct VCheck {
  std::string name;
  bool pass;
};
struct VReport {
  unsigned long i = 0;
  mpz_class j;
  bool k_positive = false;
  bool j_even = false;
  std::vector<VCheck> checks;
  bool all_pass() const;
};
// The separators that occur between w_n-letters in the long relator, each
// tested against its context; x^i cases use the sample exponents given.
VReport check_v_conditions(const Word& v, const std::vector<long>& sample_i = {-3, -2, -1, 1, 2, 3});

}  // namespace balpres
