#include "balpres/britton.hpp"

namespace balpres {

GNormalForm g_normal_form(const Word& w, GAlphabet alpha, std::size_t budget) {
  GNormalForm nf;
  std::size_t i = 0;
  while (i < w.size()) {
    std::size_t g = gen_of(w[i]);
    if (g == alpha.x || g == alpha.y) {
      std::size_t j = i;
      while (j < w.size() && w[j] == w[i]) ++j;
      long run = static_cast<long>(j - i) * (w[i] > 0 ? 1 : -1);
      DyadicAffine step = g == alpha.x ? DyadicAffine::x_power(run) : DyadicAffine::y_power(run);
      nf.segments.back() = compose(nf.segments.back(), step, budget);
      i = j;
      continue;
    }
    if (g != alpha.t) throw InputError("g_reduce: letter outside {x, y, t}");
    int e = w[i] > 0 ? 1 : -1;
    ++i;
    if (!nf.t_signs.empty() && nf.t_signs.back() == -e) {
      const DyadicAffine& mid = nf.segments.back();
      std::optional<DyadicAffine> replaced;
      if (e == 1) {
        // t^-1 x^k t = y^k
        if (auto k = k_power_of(mid, KBase::x)) {
          if (!k->fits_slong_p() || static_cast<std::size_t>(mpz_sizeinbase(k->get_mpz_t(), 2)) > 62 ||
              static_cast<std::size_t>(std::abs(k->get_si())) > budget)
            throw ResourceError("g_reduce: y-exponent " + std::to_string(mpz_sizeinbase(k->get_mpz_t(), 2)) +
                                " bits exceeds budget");
          replaced = DyadicAffine::y_power(k->get_si());
        }
      } else {
        // t y^k t^-1 = x^k
        if (auto k = k_power_of(mid, KBase::y)) replaced = DyadicAffine::x_power(*k);
      }
      if (replaced) {
        nf.segments.pop_back();
        nf.t_signs.pop_back();
        nf.segments.back() = compose(nf.segments.back(), *replaced, budget);
        continue;
      }
    }
    nf.t_signs.push_back(e);
    nf.segments.emplace_back();
  }
  return nf;
}

Word g_reduce(const Word& w, GAlphabet alpha, std::size_t budget, std::size_t max_letters) {
  GNormalForm nf = g_normal_form(w, alpha, budget);
  Word out;
  for (std::size_t k = 0; k < nf.segments.size(); ++k) {
    if (out.size() > max_letters) throw ResourceError("g_reduce: materialized word too long");
    Word seg = k_word(nf.segments[k], alpha.x, alpha.y, max_letters - out.size());
    out.insert(out.end(), seg.begin(), seg.end());
    if (k < nf.t_signs.size()) out.push_back(letter(alpha.t, nf.t_signs[k]));
  }
  return free_reduce(out);
}

bool g_is_trivial(const Word& w, GAlphabet alpha, std::size_t budget) {
  return g_normal_form(w, alpha, budget).is_identity();
}

}  // namespace balpres
