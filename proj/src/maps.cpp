#include "balpres/maps.hpp"

#include <algorithm>
#include <limits>

namespace balpres {

EffectiveMap EffectiveMap::identity(const Presentation& p) {
  EffectiveMap f{p, p, {}};
  for (std::size_t i = 0; i < p.gens.size(); ++i) f.image.push_back({letter(i)});
  return f;
}

Word EffectiveMap::apply(const Word& w) const {
  Word out;
  for (Letter l : w) {
    const Word& im = image.at(gen_of(l));
    if (l > 0)
      out.insert(out.end(), im.begin(), im.end());
    else
      for (auto it = im.rbegin(); it != im.rend(); ++it) out.push_back(-*it);
  }
  return free_reduce(out);
}

void EffectiveMap::validate() const {
  if (image.size() != source.gens.size()) throw InputError("map: one image per source generator required");
  for (const auto& w : image)
    for (Letter l : w)
      if (l == 0 || gen_of(l) >= target.gens.size()) throw InputError("map: image uses a foreign generator");
}

EffectiveMap compose(const EffectiveMap& f, const EffectiveMap& g) {
  f.validate();
  g.validate();
  if (f.target.gens.size() != g.source.gens.size()) throw InputError("compose: alphabets do not match");
  EffectiveMap h{f.source, g.target, {}};
  for (const auto& w : f.image) h.image.push_back(g.apply(w));
  return h;
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::satisfied: return "satisfied";
    case Verdict::violated: return "violated";
    case Verdict::unknown: return "unknown";
  }
  return "?";
}

Verdict verdict_all(const std::vector<Verdict>& vs) {
  Verdict out = Verdict::satisfied;
  for (Verdict v : vs) {
    if (v == Verdict::violated) return Verdict::violated;
    if (v == Verdict::unknown) out = Verdict::unknown;
  }
  return out;
}

namespace {

std::size_t clamp(const mpz_class& v) {
  if (v <= 0) return 0;
  if (!v.fits_ulong_p()) return std::numeric_limits<std::size_t>::max();
  return v.get_ui();
}

// Area(w) < n.
Verdict area_below(const Presentation& p, const Word& w, std::size_t n, const AreaBudget& budget) {
  if (n == 0) return Verdict::violated;
  AreaBudget b = budget;
  b.max_cells = std::min(budget.max_cells, n - 1);
  AreaResult r = area_upper(p, w, b);
  if (r.area) return Verdict::satisfied;
  if (r.exhaustive && b.max_cells == n - 1) return Verdict::violated;
  return Verdict::unknown;
}

// Area(w) > m.
Verdict area_above(const Presentation& p, const Word& w, std::size_t m, const AreaBudget& budget) {
  AreaBudget b = budget;
  b.max_cells = std::min(budget.max_cells, m);
  AreaResult r = area_upper(p, w, b);
  if (r.area) return Verdict::violated;
  if (r.exhaustive && b.max_cells == m) return Verdict::satisfied;
  return Verdict::unknown;
}

}  // namespace

Verdict MapTypeReport::overall() const {
  std::vector<Verdict> all = length;
  all.insert(all.end(), area.begin(), area.end());
  return verdict_all(all);
}

MapTypeReport map_type_check(const EffectiveMap& f, const mpz_class& L, const mpz_class& N,
                             const AreaBudget& budget, std::size_t M) {
  f.validate();
  MapTypeReport r;
  for (const auto& w : f.image) r.length.push_back(mpz_class(static_cast<unsigned long>(w.size())) < L
                                                       ? Verdict::satisfied
                                                       : Verdict::violated);
  const std::size_t n = clamp(N);
  for (const auto& u : f.source.rels) r.area.push_back(area_below(f.target, f.apply(u), n, budget));
  if (M)
    for (const auto& w : f.image) r.lower.push_back(area_above(f.target, w, M, budget));
  return r;
}

Verdict IsoReport::overall() const {
  std::vector<Verdict> all{forward.overall(), backward.overall()};
  all.insert(all.end(), round_source.begin(), round_source.end());
  all.insert(all.end(), round_target.begin(), round_target.end());
  return verdict_all(all);
}

IsoReport effective_iso_check(const EffectiveMap& f, const EffectiveMap& g, const mpz_class& L,
                              const mpz_class& N, const AreaBudget& budget) {
  if (f.source.gens.size() != g.target.gens.size() || f.target.gens.size() != g.source.gens.size())
    throw InputError("effective_iso_check: maps are not opposite");
  IsoReport r;
  r.forward = map_type_check(f, L, N, budget);
  r.backward = map_type_check(g, L, N, budget);
  const std::size_t n = clamp(N);
  const EffectiveMap gf = compose(f, g), fg = compose(g, f);
  for (std::size_t a = 0; a < gf.image.size(); ++a)
    r.round_source.push_back(area_below(f.source, concat(gf.image[a], Word{-letter(a)}), n, budget));
  for (std::size_t b = 0; b < fg.image.size(); ++b)
    r.round_target.push_back(area_below(g.source, concat(fg.image[b], Word{-letter(b)}), n, budget));
  return r;
}

ScriptMap script_to_map(const TietzeScript& s, const Presentation& p) {
  Presentation cur = p;
  std::vector<Word> img;
  for (std::size_t i = 0; i < p.gens.size(); ++i) img.push_back({letter(i)});
  for (const auto& m : s.moves) {
    if (const auto* del = std::get_if<Op5inv>(&m)) {
      const std::size_t g = cur.gen_index(del->name);
      const Word* def = nullptr;
      for (const auto& r : cur.rels)
        if (!r.empty() && r.front() == letter(g)) def = &r;
      if (!def) throw InputError("script_to_map: no defining relator for " + del->name);
      const Word w(def->begin() + 1, def->end());
      const Word to = inverse(w);
      for (auto& im : img) {
        Word out;
        for (Letter l : im) {
          if (gen_of(l) == g) {
            const Word& piece = l > 0 ? to : w;
            out.insert(out.end(), piece.begin(), piece.end());
          } else {
            out.push_back(l);
          }
        }
        for (auto& l : out)
          if (gen_of(l) > g) l += l > 0 ? -1 : 1;
        im = std::move(out);
      }
    }
    apply_move_inplace(cur, m);
  }
  ScriptMap sm;
  sm.map.source = p;
  sm.map.target = cur;
  for (auto& im : img) sm.map.image.push_back(free_reduce(im));
  const std::size_t k = s.moves.size();
  const mpz_class d = static_cast<unsigned long>(std::max<std::size_t>(s.d, 2));
  if (k == 0) {
    sm.L = 2;
    sm.N = 2;
  } else if (k == 1) {
    const bool op4 = std::holds_alternative<Op4>(s.moves.front());
    sm.L = op4 ? mpz_class(2) : d;
    sm.N = op4 ? 3 : 2;
  } else {
    mpz_pow_ui(sm.L.get_mpz_t(), d.get_mpz_t(), k);
    mpz_class two = 2;
    mpz_pow_ui(sm.N.get_mpz_t(), two.get_mpz_t(), k);
    sm.N += 1;
  }
  return sm;
}

}  // namespace balpres
