// Shared helpers for the unit and acceptance binaries: random inputs and
// independent reference computations.
#pragma once

#include <algorithm>
#include <optional>
#include <random>
#include <set>

#include "balpres/presentation.hpp"
#include "balpres/tietze.hpp"
#include "balpres/word.hpp"

namespace testsupport {

using namespace balpres;

inline Word random_word(std::mt19937_64& rng, std::size_t gens, std::size_t len) {
  std::uniform_int_distribution<int> g(0, static_cast<int>(gens) - 1), s(0, 1);
  Word w;
  for (std::size_t i = 0; i < len; ++i) w.push_back(letter(static_cast<std::size_t>(g(rng)), s(rng) ? 1 : -1));
  return w;
}

inline Word random_reduced_word(std::mt19937_64& rng, std::size_t gens, std::size_t len) {
  Word w;
  while (w.size() < len) {
    w.push_back(random_word(rng, gens, 1)[0]);
    w = cyclic_reduce(free_reduce(w));
  }
  return w;
}

inline Presentation random_presentation(std::mt19937_64& rng, std::size_t gens, std::size_t rels,
                                        std::size_t max_len) {
  Presentation p;
  for (std::size_t g = 0; g < gens; ++g) p.gens.push_back("g" + std::to_string(g));
  std::uniform_int_distribution<std::size_t> len(1, max_len);
  for (std::size_t r = 0; r < rels; ++r) p.rels.push_back(random_reduced_word(rng, gens, len(rng)));
  return p;
}

// A random move that applies to p; nullopt when the sampled kind has no
// valid instance.
inline std::optional<TietzeMove> random_move(const Presentation& p, std::mt19937_64& rng) {
  const std::size_t R = p.rels.size(), G = p.gens.size();
  auto pick = [&](std::size_t n) { return static_cast<std::size_t>(rng() % n); };
  switch (rng() % 9) {
    case 0:
      if (!R || !G) return std::nullopt;
      {
        const std::size_t r = pick(R);
        return Op1{r, pick(p.rels[r].size() + 1), pick(G), rng() % 2 ? 1 : -1};
      }
    case 1:
      for (std::size_t r = 0; r < R; ++r)
        for (std::size_t i = 0; i + 1 < p.rels[r].size(); ++i)
          if (p.rels[r][i] == -p.rels[r][i + 1]) return Op1inv{r, i};
      return std::nullopt;
    case 2:
      if (!R) return std::nullopt;
      {
        const std::size_t r = pick(R);
        return Op2{r, pick(std::max<std::size_t>(p.rels[r].size(), 1))};
      }
    case 3:
      if (!R) return std::nullopt;
      return Op3{pick(R)};
    case 4:
      if (R < 2) return std::nullopt;
      {
        const std::size_t i = pick(R);
        std::size_t j = pick(R - 1);
        if (j >= i) ++j;
        return Op4{i, j};
      }
    case 5: {
      std::string name = "n0";
      for (int k = 1; std::find(p.gens.begin(), p.gens.end(), name) != p.gens.end(); ++k)
        name = "n" + std::to_string(k);
      const Word w = G ? random_reduced_word(rng, G, pick(3)) : Word{};
      return Op5{3, name, w};
    }
    case 6:
      for (std::size_t r = 0; r < R; ++r) {
        const Word& w = p.rels[r];
        if (w.empty() || w.front() < 0 || w.size() > 3) continue;
        const std::size_t g = gen_of(w.front());
        std::size_t occ = 0;
        for (const auto& u : p.rels) occ += letter_counts(u, g);
        if (occ == 1) return Op5inv{3, p.gens[g]};
      }
      return std::nullopt;
    case 7:
      return Op6{};
    default:
      for (std::size_t r = 0; r < R; ++r)
        if (p.rels[r].empty()) return Op6inv{r};
      return std::nullopt;
  }
}

// Is w, freely reduced, a conjugate of r or r^-1 in the free group?
inline bool is_relator_conjugate(const Word& w, const std::vector<Word>& rels) {
  const Word c = cyclic_reduce(free_reduce(w));
  for (const auto& r : rels)
    for (const Word& s : {cyclic_reduce(r), cyclic_reduce(inverse(r))})
      if (s.size() == c.size() && !s.empty())
        for (std::size_t k = 0; k < s.size(); ++k)
          if (rotate(s, k) == c) return true;
  return false;
}

// Area oracle: the least c <= max_factors such that w freely equals a product
// of c conjugates u r^{+-1} u^-1 with |u| <= max_conj; nullopt otherwise.
// The last factor is recognised by a cyclic-conjugacy test, so only the
// first c-1 factors are enumerated.
inline std::optional<std::size_t> conjugate_product_area(const Presentation& p, const Word& w,
                                                         std::size_t max_factors, std::size_t max_conj) {
  const Word wr = free_reduce(w);
  if (wr.empty()) return 0;
  std::vector<Word> us{{}};
  for (std::size_t len = 1; len <= max_conj; ++len) {
    std::vector<Word> next;
    for (const auto& u : us)
      if (u.size() == len - 1)
        for (std::size_t g = 0; g < p.gens.size(); ++g)
          for (int s : {1, -1}) {
            Word v = u;
            v.push_back(letter(g, s));
            if (is_freely_reduced(v)) next.push_back(v);
          }
    us.insert(us.end(), next.begin(), next.end());
  }
  std::set<Word> factors;
  for (const auto& u : us)
    for (const auto& r : p.rels)
      for (const Word& s : {r, inverse(r)}) factors.insert(free_reduce(concat(u, concat(s, inverse(u)))));
  // rest = (f_1 ... f_k)^-1 w; memoised per remaining budget.
  std::set<std::pair<std::size_t, Word>> dead;
  auto search = [&](auto&& self, const Word& rest, std::size_t left) -> bool {
    if (is_relator_conjugate(rest, p.rels)) return true;
    if (left <= 1 || dead.count({left, rest})) return false;
    for (const auto& f : factors)
      if (self(self, free_reduce(concat(inverse(f), rest)), left - 1)) return true;
    dead.insert({left, rest});
    return false;
  };
  for (std::size_t c = 1; c <= max_factors; ++c)
    if (search(search, wr, c)) return c;
  return std::nullopt;
}

inline Word commutator(const Word& a, const Word& b) {
  return free_reduce(concat(concat(a, b), concat(inverse(a), inverse(b))));
}

}  // namespace testsupport
