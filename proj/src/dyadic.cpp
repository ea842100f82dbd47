#include "balpres/dyadic.hpp"

#include <algorithm>
#include <climits>

namespace balpres {

namespace {

std::size_t bit_length(const mpz_class& z) {
  return z == 0 ? 0 : mpz_sizeinbase(z.get_mpz_t(), 2);
}

void check_budget(const DyadicAffine& g, std::size_t budget) {
  if (g.bits() > budget)
    throw ResourceError("dyadic element needs " + std::to_string(g.bits()) +
                        " bits, budget is " + std::to_string(budget));
}

}  // namespace

DyadicAffine DyadicAffine::x_power(const mpz_class& k) {
  DyadicAffine g;
  g.b_num = k;
  return g;
}

DyadicAffine DyadicAffine::y_power(long k) {
  DyadicAffine g;
  g.a = k;
  return g;
}

void DyadicAffine::canonicalize() {
  if (b_num == 0) {
    b_exp = 0;
    return;
  }
  unsigned long tz = mpz_scan1(b_num.get_mpz_t(), 0);
  unsigned long s = std::min(tz, b_exp);
  if (s > 0) {
    mpz_fdiv_q_2exp(b_num.get_mpz_t(), b_num.get_mpz_t(), s);
    b_exp -= s;
  }
}

std::size_t DyadicAffine::bits() const {
  unsigned long aa = a < 0 ? static_cast<unsigned long>(-(a + 1)) + 1 : static_cast<unsigned long>(a);
  return std::max<std::size_t>({bit_length(b_num), b_exp, aa});
}

std::string DyadicAffine::str() const {
  std::string b = b_num.get_str();
  if (b_exp > 0) b += "/2^" + std::to_string(b_exp);
  return "(a=" + std::to_string(a) + ", b=" + b + ")";
}

DyadicAffine compose(const DyadicAffine& f, const DyadicAffine& s, std::size_t budget) {
  // s(f(t)) = 2^{a_s}(2^{a_f} t + b_f) + b_s.
  if ((s.a > 0 && f.a > LONG_MAX - s.a) || (s.a < 0 && f.a < LONG_MIN - s.a))
    throw ResourceError("dyadic scale overflow");
  DyadicAffine r;
  r.a = f.a + s.a;
  if (r.a > 0 && static_cast<std::size_t>(r.a) > budget) throw ResourceError("dyadic scale exceeds budget");
  if (r.a < 0 && static_cast<std::size_t>(-r.a) > budget) throw ResourceError("dyadic scale exceeds budget");

  // 2^{a_s} b_f as numerator / 2^exp.
  mpz_class n1 = f.b_num;
  unsigned long e1 = f.b_exp;
  if (n1 != 0) {
    if (s.a >= 0) {
      unsigned long up = static_cast<unsigned long>(s.a);
      unsigned long cancel = std::min(up, e1);
      e1 -= cancel;
      up -= cancel;
      if (bit_length(n1) + up > budget) throw ResourceError("dyadic numerator exceeds budget");
      mpz_mul_2exp(n1.get_mpz_t(), n1.get_mpz_t(), up);
    } else {
      e1 += static_cast<unsigned long>(-s.a);
    }
  } else {
    e1 = 0;
  }
  mpz_class n2 = s.b_num;
  unsigned long e2 = s.b_exp;
  unsigned long e = std::max(e1, e2);
  if (e > budget) throw ResourceError("dyadic denominator exceeds budget");
  mpz_mul_2exp(n1.get_mpz_t(), n1.get_mpz_t(), e - e1);
  mpz_mul_2exp(n2.get_mpz_t(), n2.get_mpz_t(), e - e2);
  r.b_num = n1 + n2;
  r.b_exp = e;
  r.canonicalize();
  check_budget(r, budget);
  return r;
}

DyadicAffine inverse(const DyadicAffine& g, std::size_t budget) {
  // t -> 2^{-a}(t - b).
  DyadicAffine shift;
  shift.b_num = -g.b_num;
  shift.b_exp = g.b_exp;
  return compose(shift, DyadicAffine::y_power(-g.a), budget);
}

DyadicAffine k_eval(const Word& w, std::size_t xg, std::size_t yg, std::size_t budget) {
  DyadicAffine acc;
  std::size_t i = 0;
  while (i < w.size()) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    long run = static_cast<long>(j - i) * (w[i] > 0 ? 1 : -1);
    std::size_t g = gen_of(w[i]);
    if (g == xg)
      acc = compose(acc, DyadicAffine::x_power(run), budget);
    else if (g == yg)
      acc = compose(acc, DyadicAffine::y_power(run), budget);
    else
      throw InputError("k_eval: letter outside {x, y}");
    i = j;
  }
  return acc;
}

std::optional<mpz_class> k_power_of(const DyadicAffine& g, KBase base) {
  if (base == KBase::x) {
    if (g.a == 0 && g.b_exp == 0) return g.b_num;
    return std::nullopt;
  }
  if (g.b_num == 0) return mpz_class(g.a);
  return std::nullopt;
}

Word k_word(const DyadicAffine& g, std::size_t xg, std::size_t yg, std::size_t max_letters) {
  // y^q x^m y^-p gives a = q - p, b = m / 2^p.
  mpz_class p = std::max<mpz_class>(mpz_class(static_cast<unsigned long>(g.b_exp)), mpz_class(-g.a));
  if (p < 0) p = 0;
  mpz_class m = g.b_num;
  mpz_mul_2exp(m.get_mpz_t(), m.get_mpz_t(), p.get_ui() - g.b_exp);
  mpz_class q = g.a + p;
  mpz_class total = abs(q) + abs(m) + p;
  if (total > max_letters) throw ResourceError("k_word: " + total.get_str() + " letters exceeds limit");
  Word w;
  auto emit = [&w](std::size_t gen, const mpz_class& k) {
    long kk = k.get_si();
    for (long i = 0; i < (kk < 0 ? -kk : kk); ++i) w.push_back(letter(gen, kk < 0 ? -1 : 1));
  };
  emit(yg, q);
  emit(xg, m);
  emit(yg, -p);
  return w;
}

}  // namespace balpres
