#include "balpres/family.hpp"

#include "balpres/britton.hpp"
#include "balpres/dyadic.hpp"

namespace balpres {

namespace {

const Letter X = letter(0), Y = letter(1), T = letter(2);

constexpr std::size_t kMaxLiteralPower = std::size_t{1} << 24;

void append_power(Word& w, Letter l, const mpz_class& k) {
  if (abs(k) > kMaxLiteralPower) throw ResourceError("literal power too large: " + k.get_str());
  long e = k.get_si();
  for (long i = 0; i < (e < 0 ? -e : e); ++i) w.push_back(e < 0 ? -l : l);
}

// rep with `levels` expansions; below that, y^(s E_k) is written out.
void emit_rep(Word& out, unsigned long k, int s, unsigned long levels) {
  if (levels == 0) {
    mpz_class e = 0;
    const TowerInt E = tower_E(k);
    if (!E.exact()) throw ResourceError("E_" + std::to_string(k) + " does not materialize");
    e = E.base();
    append_power(out, Y, s > 0 ? e : mpz_class(-e));
    return;
  }
  out.push_back(-T);
  emit_rep(out, k - 1, -1, levels - 1);
  out.push_back(s > 0 ? X : -X);
  emit_rep(out, k - 1, 1, levels - 1);
  out.push_back(T);
}

Word commutator(const Word& a, const Word& b) {
  Word w = a;
  w.insert(w.end(), b.begin(), b.end());
  Word ai = inverse(a), bi = inverse(b);
  w.insert(w.end(), ai.begin(), ai.end());
  w.insert(w.end(), bi.begin(), bi.end());
  return w;
}

// Product of [A, x^3][A, x^5][A, x^7] with A = rep(n,-1) x rep(n,1).
Word w_from(unsigned long n, unsigned long levels) {
  Word a;
  emit_rep(a, n, -1, levels);
  a.push_back(X);
  emit_rep(a, n, 1, levels);
  Word w;
  for (long c : {3L, 5L, 7L}) {
    Word xc = power(Word{X}, c);
    Word part = commutator(a, xc);
    w.insert(w.end(), part.begin(), part.end());
  }
  return w;
}

Word shift(const Word& w, int offset) {
  Word out;
  out.reserve(w.size());
  for (Letter l : w) out.push_back(letter(gen_of(l) + static_cast<std::size_t>(offset), l > 0 ? 1 : -1));
  return out;
}

// H_v relators over x=0, y=1, t=2, s=3.
std::vector<Word> h_relators(const Word& v, unsigned long n) {
  const Letter S = letter(3);
  Word w = build_w(n);
  Word h1{-Y, X, Y, -X, -X};
  Word h2{-T, X, T, -Y};
  Word h3{-S};
  for (const Word& part : {v, inverse(w), inverse(v), w}) h3.insert(h3.end(), part.begin(), part.end());
  h3.push_back(S);
  h3.push_back(-T);
  return {h1, h2, h3};
}

void check_v(const Word& v) {
  for (Letter l : v)
    if (gen_of(l) > 1) throw InputError("malformed v: letters must be x or y");
  parse_blocks(v);
}

}  // namespace

Word rep_word(unsigned long k, int s) {
  Word w;
  emit_rep(w, k, s, k);
  return w;
}

Word build_w(unsigned long n) { return w_from(n, n); }

Word build_w_nm(unsigned long n, unsigned long m, std::size_t bit_budget) {
  if (m > n) throw InputError("build_w_nm: m exceeds n");
  const TowerInt E = tower_E(n - m);
  if (!E.exact() || mpz_sizeinbase(E.base().get_mpz_t(), 2) > bit_budget)
    throw ResourceError("E_" + std::to_string(n - m) + " exceeds the bit budget");
  return w_from(n, m);
}

Presentation build_H(const Word& v, unsigned long n) {
  check_v(v);
  Presentation p;
  p.gens.assign(kMuGens.begin(), kMuGens.begin() + 4);
  p.rels = h_relators(v, n);
  return p;
}

Presentation build_mu(const Word& v, unsigned long n) {
  check_v(v);
  Presentation p;
  p.gens = kMuGens;
  auto h = h_relators(v, n);
  p.rels = h;
  for (const auto& r : h) p.rels.push_back(shift(r, 4));
  // s = xh and x = sh.
  p.rels.push_back({letter(3), -letter(4)});
  p.rels.push_back({letter(0), -letter(7)});
  return p;
}

Presentation build_mu0(const Word& v, unsigned long n) {
  check_v(v);
  // Images of mu generators over x=0, t=1, xh=2, th=3.
  const Letter x = letter(0), t = letter(1), xh = letter(2), th = letter(3);
  const std::vector<Word> image = {
      {x}, {-t, x, t}, {t}, {xh}, {xh}, {-th, xh, th}, {th}, {x},
  };
  auto substitute = [&](const Word& w) {
    Word out;
    for (Letter l : w) {
      Word im = l > 0 ? image[gen_of(l)] : inverse(image[gen_of(l)]);
      out.insert(out.end(), im.begin(), im.end());
    }
    return free_reduce(out);
  };
  Presentation mu = build_mu(v, n);
  Presentation p;
  p.gens = kMu0Gens;
  for (std::size_t i : {0, 2, 3, 5}) p.rels.push_back(substitute(mu.rels[i]));
  return p;
}

TietzeScript mu_to_mu0(const Word& v, unsigned long n) {
  ScriptBuilder sb(build_mu(v, n), 2);
  // s via "s xh^-1".
  sb.eliminate_generator(3, 6);
  // sh via "sh x^-1" (now relator 6, generator 6).
  sb.apply(Op3{6});
  sb.eliminate_generator(6, 6);
  // y via H2 inverted: y t^-1 x^-1 t.
  sb.apply(Op3{1});
  sb.eliminate_generator(1, 1);
  // yh via the hatted H2, now relator 3 and generator 3.
  sb.apply(Op3{3});
  sb.eliminate_generator(3, 3);
  return sb.script();
}

std::size_t mu_length(std::size_t v_len, unsigned long n) {
  // 8 generators, 2 * (5 + 4 + 3 + 2 l(v) + 2 l(w_n)) relator letters, 2 + 2 gluing letters.
  return 36 + 4 * v_len + 192 * (std::size_t{1} << n);
}

std::vector<FamilyMember> enumerate_blocks(std::size_t blocks, unsigned long n) {
  if (blocks >= 63) throw ResourceError("too many blocks to enumerate");
  std::vector<FamilyMember> out;
  const std::uint64_t count = std::uint64_t{1} << blocks;
  for (std::uint64_t j = 0; j < count; ++j) {
    FamilyMember m;
    m.blocks.resize(blocks);
    for (std::size_t k = 0; k < blocks; ++k) m.blocks[k] = (j >> (blocks - 1 - k)) & 1;
    m.n = n;
    m.mu = build_mu(block_word(m.blocks), n);
    m.length = m.mu.length();
    m.fingerprint = canonical_form(m.mu);
    out.push_back(std::move(m));
  }
  return out;
}

std::vector<FamilyMember> enumerate_family(std::size_t l, unsigned long n) {
  std::vector<FamilyMember> out;
  for (std::size_t b = 1; mu_length(b, n) <= l; ++b) {
    for (auto& m : enumerate_blocks(b, n))
      if (m.length <= l) out.push_back(std::move(m));
  }
  return out;
}

std::string manifest_line(const FamilyMember& m) {
  return block_string(m.blocks) + " " + std::to_string(m.n) + " " + std::to_string(m.length) + " " +
         m.fingerprint.hex();
}

ChooseN choose_n(const mpz_class& l, unsigned long m, const mpz_class& d, std::size_t bit_budget) {
  if (l < 1 || d < 1) throw InputError("choose_n: l and d must be positive");
  constexpr unsigned long kMaxN = 4096;
  ChooseN r;
  const TowerInt exponent = TowerInt::exp(m, 22 * l);
  for (unsigned long n = 1;; ++n) {
    if (n > kMaxN) throw ResourceError("choose_n: no n found");
    if (tower_cmp_pow(tower_E(n - 1), d, exponent, bit_budget) > 0) {
      r.exact = n;
      break;
    }
  }
  try {
    const TowerInt X = TowerInt::exp(m, l);
    for (unsigned long n = 3; n <= kMaxN; ++n) {
      bool ok;
      if (X.exact()) {
        // E_{n-3} > 2 log2(22 X)  <=>  E_{n-2} > (22 X)^2.
        mpz_class q = 22 * X.base();
        q *= q;
        ok = tower_cmp(tower_E(n - 2), TowerInt(q)) > 0;
      } else {
        // X = 2^Y: 2 log2(22 X) lies strictly between 2Y + 8 and 2Y + 9.
        const TowerInt Yt = TowerInt::exp(X.height() - 1, X.base());
        if (!Yt.exact()) throw ResourceError("choose_n: sufficient bound beyond budget");
        ok = tower_cmp(tower_E(n - 3), TowerInt(2 * Yt.base() + 8)) > 0;
      }
      if (ok) {
        r.sufficient = n;
        break;
      }
    }
  } catch (const ResourceError&) {
    r.sufficient.reset();
  }
  return r;
}

bool check_B_condition(const Word& B, BContext ctx) {
  const Word x7 = power(Word{X}, 7), xm7 = power(Word{X}, -7);
  Word w;
  switch (ctx) {
    case BContext::aa: w = concat(xm7, B); break;
    case BContext::aA: w = concat(concat(xm7, B), x7); break;
    case BContext::Aa: w = B; break;
    case BContext::AA: w = concat(B, x7); break;
  }
  return !k_power_of(k_eval(w), KBase::y).has_value();
}

bool VReport::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

VReport check_v_conditions(const Word& v, const std::vector<long>& sample_i) {
  VReport r;
  auto [i, j] = v_encode(v);
  r.i = i;
  r.j = j;
  r.k_positive = i > 0;
  r.j_even = mpz_even_p(j.get_mpz_t()) != 0;
  const Word vi = inverse(v);
  r.checks.push_back({"Aa v^-1", check_B_condition(vi, BContext::Aa)});
  r.checks.push_back({"aA v", check_B_condition(v, BContext::aA)});
  for (long e : sample_i) {
    const Word xe = power(Word{X}, e);
    const std::string tag = " (i=" + std::to_string(e) + ")";
    r.checks.push_back({"aA x^i" + tag, check_B_condition(xe, BContext::aA)});
    r.checks.push_back({"aA x^i v" + tag, check_B_condition(concat(xe, v), BContext::aA)});
    r.checks.push_back({"aA v^-1 x^i" + tag, check_B_condition(concat(vi, xe), BContext::aA)});
    r.checks.push_back({"aA v^-1 x^i v" + tag, check_B_condition(concat(concat(vi, xe), v), BContext::aA)});
  }
  return r;
}

}  // namespace balpres
