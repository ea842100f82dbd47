#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "balpres/area.hpp"
#include "balpres/tietze.hpp"

namespace balpres {

// Homomorphism of free groups given by generator images.
struct EffectiveMap {
  Presentation source, target;
  std::vector<Word> image;  // image[i]: freely reduced word over target generators

  static EffectiveMap identity(const Presentation& p);
  Word apply(const Word& w) const;
  void validate() const;  // throws InputError on alphabet mismatch
};

// g after f.
EffectiveMap compose(const EffectiveMap& f, const EffectiveMap& g);

enum class Verdict { satisfied, violated, unknown };
std::string verdict_name(Verdict v);
Verdict verdict_all(const std::vector<Verdict>& vs);

struct MapTypeReport {
  std::vector<Verdict> length;  // per generator: l(F(a)) < L
  std::vector<Verdict> area;    // per relator: Area(F(u)) < N
  std::vector<Verdict> lower;   // per generator: no diagram for F(a) with <= M cells (evidence only)
  Verdict overall() const;      // length and area clauses
};

// Set M to 0 to skip the lower-bound clause.
MapTypeReport map_type_check(const EffectiveMap& f, const mpz_class& L, const mpz_class& N,
                             const AreaBudget& budget = {}, std::size_t M = 0);

struct IsoReport {
  MapTypeReport forward, backward;
  std::vector<Verdict> round_source;  // (G F)(a) a^-1 area < N in the source
  std::vector<Verdict> round_target;
  Verdict overall() const;
};
IsoReport effective_iso_check(const EffectiveMap& f, const EffectiveMap& g, const mpz_class& L,
                              const mpz_class& N, const AreaBudget& budget = {});

struct ScriptMap {
  EffectiveMap map;
  mpz_class L, N;  // claimed type
};
// Composes the obvious per-move maps; a generator removed by Op5inv goes to
// the inverse of w in its relator "g w". A single move keeps its own type:
// (2, 3) for Op4 and (d, 2) otherwise; longer scripts claim (d^k, 1 + 2^k).
ScriptMap script_to_map(const TietzeScript& s, const Presentation& p);

}  // namespace balpres
