#include "balpres/tower.hpp"

namespace balpres {

namespace {

struct Raw {
  unsigned long h;
  mpz_class b;
};

std::size_t bitlen(const mpz_class& z) { return z == 0 ? 0 : mpz_sizeinbase(z.get_mpz_t(), 2); }

bool is_pow2(const mpz_class& z) { return z > 0 && mpz_popcount(z.get_mpz_t()) == 1; }

std::strong_ordering flip(std::strong_ordering o) { return 0 <=> o; }

std::strong_ordering cmpz(const mpz_class& a, const mpz_class& b) { return cmp(a, b) <=> 0; }

std::strong_ordering cmp_raw(const Raw& a, const Raw& b);

// exp_h(b) with h > 0 against the exact integer n.
std::strong_ordering cmp_tower_exact(const Raw& a, const mpz_class& n) {
  if (n <= 0) return std::strong_ordering::greater;
  std::size_t l = bitlen(n);
  Raw x{a.h - 1, a.b};
  mpz_class lm1 = static_cast<unsigned long>(l - 1);
  if (is_pow2(n)) return cmp_raw(x, {0, lm1});
  return cmp_raw(x, {0, lm1}) > 0 ? std::strong_ordering::greater : std::strong_ordering::less;
}

std::strong_ordering cmp_raw(const Raw& a, const Raw& b) {
  if (a.h == 0 && b.h == 0) return cmpz(a.b, b.b);
  if (a.h > 0 && b.h > 0) return cmp_raw({a.h - 1, a.b}, {b.h - 1, b.b});
  if (b.h == 0) return cmp_tower_exact(a, b.b);
  return flip(cmp_tower_exact(b, a.b));
}

// sign(c*x - m) for integer-valued x.
std::strong_ordering cmp_scaled(const Raw& x, const mpz_class& c, const mpz_class& m) {
  mpz_class q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), m.get_mpz_t(), c.get_mpz_t());
  auto o = cmp_raw(x, {0, q});
  if (o != 0) return o;
  return r == 0 ? std::strong_ordering::equal : std::strong_ordering::less;
}

// sign(a - 2^{c x}) with c >= 1.
std::strong_ordering cmp_pow2_scaled(const Raw& a, const mpz_class& c, const Raw& x) {
  if (a.h == 0) {
    if (a.b <= 0) return std::strong_ordering::less;
    mpz_class lm1 = static_cast<unsigned long>(bitlen(a.b) - 1);
    if (is_pow2(a.b)) return flip(cmp_scaled(x, c, lm1));
    return cmp_scaled(x, c, lm1) <= 0 ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  // a = 2^{a1}; compare a1 with c x.
  Raw a1{a.h - 1, a.b};
  if (x.h == 0) return cmp_raw(a1, {0, c * x.b});
  if (a1.h == 0) return flip(cmp_scaled(x, c, a1.b));
  // Both towers: a1 = 2^{a2}, c x = 2^{x1 + log2 c}.
  Raw a2{a1.h - 1, a1.b}, x1{x.h - 1, x.b};
  if (c == 1) return cmp_raw(a2, x1);
  auto o = cmp_raw(a2, x1);
  if (o <= 0) return std::strong_ordering::less;
  if (a2.h > 0 && x1.h > 0) return std::strong_ordering::greater;  // a2 >= 2 x1 and x1 is huge
  if (a2.h == 0 && x1.h == 0) {
    mpz_class lo = static_cast<unsigned long>(bitlen(c) - 1);
    if (is_pow2(c)) return cmpz(a2.b, x1.b + lo);
    if (a2.b >= x1.b + lo + 1) return std::strong_ordering::greater;
    if (a2.b <= x1.b + lo) return std::strong_ordering::less;
  }
  if (a2.h > 0 && x1.h == 0 && x1.b < 0) return std::strong_ordering::greater;
  if (a2.h > 0 && x1.h == 0) {
    // a2 exceeds 2^kMaterializeBits; x1 exact.
    auto o2 = cmp_tower_exact(a2, x1.b + static_cast<unsigned long>(bitlen(c)));
    if (o2 > 0) return std::strong_ordering::greater;
  }
  throw ResourceError("tower comparison undecided within budget");
}

}  // namespace

TowerInt TowerInt::exp(unsigned long height, mpz_class base, std::size_t materialize_bits) {
  if (height > 0 && base < 0) throw InputError("tower base must be non-negative");
  while (height > 0 && base <= materialize_bits) {
    mpz_class v;
    mpz_ui_pow_ui(v.get_mpz_t(), 2, base.get_ui());
    base = v;
    --height;
  }
  TowerInt t;
  t.height_ = height;
  t.base_ = std::move(base);
  return t;
}

TowerInt TowerInt::exp2(unsigned long levels) const { return exp(height_ + levels, base_); }

std::string TowerInt::str() const {
  auto show = [](const mpz_class& z) {
    if (bitlen(z) <= 64) return z.get_str();
    if (is_pow2(z)) return "2^" + std::to_string(bitlen(z) - 1);
    return "<" + std::to_string(bitlen(z)) + "-bit integer>";
  };
  if (height_ == 0) return show(base_);
  return "exp_" + std::to_string(height_) + "(" + show(base_) + ")";
}

TowerInt tower_E(unsigned long n) { return TowerInt::exp(n, 1); }

std::strong_ordering tower_cmp(const TowerInt& a, const TowerInt& b) {
  return cmp_raw({a.height(), a.base()}, {b.height(), b.base()});
}

std::strong_ordering tower_cmp_pow(const TowerInt& a, const mpz_class& d, const TowerInt& x,
                                   std::size_t budget) {
  if (d < 1) throw InputError("tower_cmp_pow: base must be >= 1");
  if (x.exact() && x.base() < 0) throw InputError("tower_cmp_pow: negative exponent");
  if (d == 1) return tower_cmp(a, TowerInt(1));
  const std::size_t bl = bitlen(d);
  if (x.exact() && x.base() * bl <= budget) {
    mpz_class p;
    mpz_pow_ui(p.get_mpz_t(), d.get_mpz_t(), x.base().get_ui());
    return tower_cmp(a, TowerInt(p));
  }
  Raw ra{a.height(), a.base()}, rx{x.height(), x.base()};
  mpz_class lo = static_cast<unsigned long>(bl - 1), hi = static_cast<unsigned long>(bl);
  if (is_pow2(d)) return cmp_pow2_scaled(ra, lo, rx);
  if (cmp_pow2_scaled(ra, lo, rx) <= 0) return std::strong_ordering::less;
  if (cmp_pow2_scaled(ra, hi, rx) >= 0) return std::strong_ordering::greater;
  throw ResourceError("tower_cmp_pow: log2(d) bracket does not separate the operands");
}

}  // namespace balpres
