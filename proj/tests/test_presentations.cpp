#include <doctest.h>

#include <numeric>

#include "balpres/abelian.hpp"
#include "balpres/maps.hpp"
#include "balpres/search.hpp"
#include "support.hpp"

using namespace balpres;
using namespace testsupport;

namespace {

Presentation pres(const std::string& text) { return parse_presentation(text); }

Presentation shuffled(const Presentation& p, std::mt19937_64& rng) {
  std::vector<std::size_t> perm(p.gens.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  Presentation q;
  q.gens.resize(p.gens.size());
  for (std::size_t g = 0; g < perm.size(); ++g) q.gens[perm[g]] = "h" + std::to_string(g);
  for (auto r : p.rels) {
    for (auto& l : r) l = letter(perm[gen_of(l)], l > 0 ? 1 : -1);
    if (!r.empty()) r = rotate(r, rng() % r.size());
    q.rels.push_back(r);
  }
  std::shuffle(q.rels.begin(), q.rels.end(), rng);
  return q;
}

mpz_class gcd_all(const std::vector<mpz_class>& v) {
  mpz_class g = 0;
  for (const auto& x : v) g = gcd(g, x);
  return g;
}

}  // namespace

TEST_CASE("presentation text round trip") {
  const Presentation p = pres("gens: a, b\nrel: a b a^-1 b^-1\nrel:\n");
  CHECK(p.gens.size() == 2);
  CHECK(p.rels.size() == 2);
  CHECK(p.rels[1].empty());
  CHECK(parse_presentation(format_presentation(p)) == p);
  CHECK(p.length() == 6);
  CHECK(p.balanced());
  CHECK_THROWS_AS(pres("gens: a\nrel: b\n"), InputError);
  CHECK_THROWS_AS(pres("gens: a, a\n"), InputError);
}

TEST_CASE("canonical form ignores renaming, rotation and relator order") {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 200; ++i) {
    const Presentation p = random_presentation(rng, 3, 3, 6);
    CHECK(canonical_form(p) == canonical_form(shuffled(p, rng)));
    CHECK(canonical_form(from_fingerprint(canonical_form(p))) == canonical_form(p));
  }
  CHECK(canonical_form(pres("gens: a\nrel: a a\n")) != canonical_form(pres("gens: a\nrel: a a a\n")));
}

TEST_CASE("every move is undone by its inverse") {
  std::mt19937_64 rng(22);
  int applied = 0;
  for (int i = 0; i < 400; ++i) {
    const Presentation p = random_presentation(rng, 2 + rng() % 2, 1 + rng() % 3, 5);
    const auto m = random_move(p, rng);
    if (!m) continue;
    const Presentation q = apply_move(p, *m);
    Presentation back = q;
    for (const auto& inv : invert_move(p, *m)) apply_move_inplace(back, inv);
    CHECK(canonical_form(back) == canonical_form(p));
    ++applied;
  }
  CHECK(applied > 200);
}

TEST_CASE("invalid moves are rejected") {
  Presentation p = pres("gens: a, b\nrel: a b\nrel: b\n");
  CHECK_THROWS_AS(apply_move(p, Op4{0, 0}), InvalidMove);
  CHECK_THROWS_AS(apply_move(p, Op3{5}), InvalidMove);
  CHECK_THROWS_AS(apply_move(p, Op1inv{0, 0}), InvalidMove);
  CHECK_THROWS_AS(apply_move(p, Op5inv{2, "b"}), InvalidMove);  // b occurs twice
  CHECK_THROWS_AS(apply_move(p, Op5{2, "c", Word{1, 2}}), InvalidMove);  // l(w) > d-1
  CHECK_THROWS_AS(apply_move(p, Op6inv{0}), InvalidMove);
}

TEST_CASE("scripts replay and report the failing index") {
  const Presentation p = pres("gens: a, b\nrel: a b\nrel: b\n");
  ScriptBuilder sb(p, 2);
  sb.apply(Op3{1});
  sb.apply(Op4{0, 1});
  sb.apply(Op2{0, 1});
  const TietzeScript s = sb.script();
  CHECK(replay(p, s) == sb.current());
  CHECK(parse_script(format_script(s, p), p).moves.size() == 3);
  CHECK(replay(p, parse_script(format_script(s, p), p)) == sb.current());

  TietzeScript bad = s;
  bad.moves[1] = Op4{0, 7};
  try {
    replay(p, bad);
    FAIL("expected ReplayError");
  } catch (const ReplayError& e) {
    CHECK(e.kind == ReplayError::Kind::invalid_move);
    CHECK(e.index == 1);
  }
  TietzeScript wrong_start = s;
  wrong_start.start = "0000000000000000";
  CHECK_THROWS_AS(replay(p, wrong_start), ReplayError);
}

TEST_CASE("Tietze distance anchors") {
  SearchOptions o;
  o.d = 4;
  o.max_depth = 3;
  const Presentation p = pres("gens: a, b\nrel: a b\nrel: b\n");
  CHECK(tietze_distance(p, p, o).distance == std::size_t{0});
  CHECK(tietze_distance(p, apply_move(p, Op3{0}), o).distance == std::size_t{1});
  // Op2 acts trivially on classes
  CHECK(tietze_distance(p, apply_move(p, Op2{0, 1}), o).distance == std::size_t{0});
  const Presentation triv;
  const auto r = tietze_distance(pres("gens: a\nrel: a\n"), triv, o);
  CHECK(r.distance == std::size_t{1});
  CHECK(verify_path(r, o));
}

TEST_CASE("best-first certificates verify step by step") {
  SearchOptions o;
  o.d = 3;
  o.max_depth = 10;
  const Presentation p = pres("gens: a, b, c\nrel: a\nrel: b\nrel: c\nrel: a c b^-1\n");
  const auto r = tietze_path(p, Presentation{}, o);
  REQUIRE(r.distance);
  CHECK(verify_path(r, o));
  // exact search is a lower bound wherever it fits the budget
  const Presentation q = pres("gens: a, b\nrel: a\nrel: a b^-1\n");
  const auto rq = tietze_path(q, Presentation{}, o);
  const auto e = tietze_distance(q, Presentation{}, o);
  REQUIRE(rq.distance);
  REQUIRE(e.distance);
  CHECK(verify_path(e, o));
  CHECK(*e.distance <= *rq.distance);
}

TEST_CASE("Smith normal form matches determinantal divisors") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 200; ++i) {
    IntMatrix m(3, std::vector<mpz_class>(3));
    for (auto& row : m)
      for (auto& x : row) x = static_cast<long>(rng() % 13) - 6;
    const auto f = smith_normal_form(m, 3);
    REQUIRE(f.size() == 3);
    std::vector<mpz_class> entries, minors;
    for (auto& row : m) entries.insert(entries.end(), row.begin(), row.end());
    for (int r0 = 0; r0 < 3; ++r0)
      for (int r1 = r0 + 1; r1 < 3; ++r1)
        for (int c0 = 0; c0 < 3; ++c0)
          for (int c1 = c0 + 1; c1 < 3; ++c1)
            minors.push_back(m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0]);
    const mpz_class det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                          m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                          m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    const mpz_class d1 = gcd_all(entries), d2 = gcd_all(minors), d3 = abs(det);
    // d_k = f_1 ... f_k, with zero factors once the rank is reached
    CHECK(f[0] == d1);
    CHECK(f[0] * f[1] == d2);
    CHECK(f[0] * f[1] * f[2] == d3);
    for (std::size_t k = 0; k + 1 < f.size(); ++k)
      if (f[k + 1] != 0) CHECK(f[k + 1] % f[k] == 0);
  }
}

namespace {

mpz_class det(const IntMatrix& m) {
  if (m.size() == 1) return m[0][0];
  mpz_class d = 0;
  for (std::size_t c = 0; c < m.size(); ++c) {
    IntMatrix minor;
    for (std::size_t r = 1; r < m.size(); ++r) {
      minor.emplace_back();
      for (std::size_t k = 0; k < m.size(); ++k)
        if (k != c) minor.back().push_back(m[r][k]);
    }
    d += (c % 2 ? -1 : 1) * m[0][c] * det(minor);
  }
  return d;
}

void subsets(std::size_t n, std::size_t k, std::vector<std::size_t>& cur, std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = cur.empty() ? 0 : cur.back() + 1; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, cur, out);
    cur.pop_back();
  }
}

// d_k: gcd of all k x k minors.
mpz_class determinantal_divisor(const IntMatrix& m, std::size_t cols, std::size_t k) {
  std::vector<std::vector<std::size_t>> rs, cs;
  std::vector<std::size_t> cur;
  subsets(m.size(), k, cur, rs);
  subsets(cols, k, cur, cs);
  mpz_class g = 0;
  for (const auto& r : rs)
    for (const auto& c : cs) {
      IntMatrix sub;
      for (auto i : r) {
        sub.emplace_back();
        for (auto j : c) sub.back().push_back(m[i][j]);
      }
      g = gcd(g, det(sub));
    }
  return g;
}

}  // namespace

TEST_CASE("Smith normal form of sparse rectangular matrices") {
  std::mt19937_64 rng(24);
  for (int i = 0; i < 150; ++i) {
    const std::size_t rows = 1 + rng() % 5, cols = 1 + rng() % 5;
    IntMatrix m(rows, std::vector<mpz_class>(cols));
    for (auto& row : m)
      for (auto& x : row)
        if (rng() % 2) x = static_cast<long>(rng() % 7) - 3;
    const auto f = smith_normal_form(m, cols);
    REQUIRE(f.size() == cols);
    mpz_class prod = 1;
    for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
      prod *= f[k - 1];
      CHECK(prod == determinantal_divisor(m, cols, k));
    }
    for (std::size_t k = rows; k < cols; ++k) CHECK(f[k] == 0);
  }
}

TEST_CASE("abelianization examples") {
  CHECK(h1_trivial(pres("gens: a\nrel: a\n")));
  CHECK_FALSE(h1_trivial(pres("gens: a\nrel: a a\n")));
  CHECK(h1_trivial(Presentation{}));
  const auto f = smith_normal_form(relation_matrix(pres("gens: a, b\nrel: a a\nrel: b b b\n")), 2);
  CHECK(f == std::vector<mpz_class>{1, 6});
}

TEST_CASE("single-move maps have the stated types") {
  const Presentation p = pres("gens: a, b\nrel: a b a^-1 b^-1\nrel: a a b\n");
  AreaBudget b;
  b.max_cells = 4;
  {
    TietzeScript s{canonical_form(p).hex(), 2, {Op4{0, 1}}};
    const ScriptMap m = script_to_map(s, p);
    CHECK(m.L == 2);
    CHECK(m.N == 3);
    CHECK(map_type_check(m.map, m.L, m.N, b).overall() == Verdict::satisfied);
  }
  {
    TietzeScript s{canonical_form(p).hex(), 3, {Op5{3, "c", Word{1, 2}}}};
    const ScriptMap m = script_to_map(s, p);
    CHECK(m.L == 3);
    CHECK(m.N == 2);
    CHECK(map_type_check(m.map, m.L, m.N, b).overall() == Verdict::satisfied);
  }
  {
    const Presentation q = pres("gens: a, b, c\nrel: a b a^-1 b^-1\nrel: c a b\n");
    TietzeScript s{canonical_form(q).hex(), 3, {Op5inv{3, "c"}}};
    const ScriptMap m = script_to_map(s, q);
    CHECK(m.map.image[2] == Word{-2, -1});
    CHECK(map_type_check(m.map, m.L, m.N, b).overall() == Verdict::satisfied);
  }
  // identity map, and a violation witnessed by an exhaustive search
  const EffectiveMap id = EffectiveMap::identity(p);
  CHECK(map_type_check(id, 2, 2, b).overall() == Verdict::satisfied);
  CHECK(map_type_check(id, 2, 1, b).overall() == Verdict::violated);
}
