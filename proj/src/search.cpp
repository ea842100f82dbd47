#include "balpres/search.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <queue>
#include <set>

namespace balpres {

std::string status_name(SearchStatus s) {
  switch (s) {
    case SearchStatus::found: return "found";
    case SearchStatus::depth_exhausted: return "depth";
    case SearchStatus::state_limit: return "states";
  }
  return "?";
}

namespace {

std::string fresh_name(const Presentation& p) {
  for (std::size_t k = p.gens.size();; ++k) {
    std::string n = "n" + std::to_string(k);
    if (std::find(p.gens.begin(), p.gens.end(), n) == p.gens.end()) return n;
  }
}

void op5_candidates(const Presentation& p, const SearchOptions& opt, std::set<Word>& out) {
  out.insert(Word{});
  const std::size_t maxw = opt.d >= 1 ? opt.d - 1 : 0;
  if (opt.full_op5) {
    std::vector<Word> layer{Word{}};
    for (std::size_t len = 1; len <= maxw; ++len) {
      std::vector<Word> next;
      for (const auto& w : layer)
        for (std::size_t g = 0; g < p.gens.size(); ++g)
          for (int e : {1, -1}) {
            Letter l = letter(g, e);
            if (!w.empty() && w.back() == -l) continue;
            Word v = w;
            v.push_back(l);
            out.insert(v);
            next.push_back(std::move(v));
          }
      layer = std::move(next);
    }
    return;
  }
  for (const auto& r : p.rels) {
    for (const Word& c : {r, inverse(r)}) {
      const std::size_t n = c.size();
      for (std::size_t s = 0; s < n; ++s)
        for (std::size_t len = 1; len <= std::min(maxw, n); ++len) {
          Word w;
          for (std::size_t k = 0; k < len; ++k) w.push_back(c[(s + k) % n]);
          out.insert(free_reduce(w));
        }
    }
  }
}

}  // namespace

std::vector<Neighbour> class_neighbours(const Presentation& p, const SearchOptions& opt) {
  std::vector<Neighbour> out;
  const std::size_t nr = p.rels.size();
  auto push = [&](Presentation q, std::string move) {
    for (const auto& r : q.rels)
      if (r.size() > opt.max_rel_len) return;
    if (q.gens.size() > opt.max_gens) return;
    out.push_back({std::move(q), std::move(move)});
  };
  for (std::size_t i = 0; i < nr; ++i) {
    Presentation q = p;
    q.rels[i] = cyclic_reduce(inverse(q.rels[i]));
    push(std::move(q), "OP3 " + std::to_string(i));
  }
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nr; ++j) {
      if (i == j) continue;
      const Word& a = p.rels[i];
      const Word& b = p.rels[j];
      std::set<Word> seen;
      const std::size_t na = std::max<std::size_t>(a.size(), 1), nb = std::max<std::size_t>(b.size(), 1);
      for (std::size_t ra = 0; ra < na; ++ra)
        for (std::size_t rb = 0; rb < nb; ++rb) {
          Word w = cyclic_reduce(concat(rotate(a, ra), rotate(b, rb)));
          if (!seen.insert(w).second) continue;
          Presentation q = p;
          q.rels[i] = std::move(w);
          push(std::move(q), "OP4 " + std::to_string(i) + " " + std::to_string(j) + " rot " +
                                 std::to_string(ra) + " " + std::to_string(rb));
        }
    }
  {
    std::set<Word> cands;
    op5_candidates(p, opt, cands);
    const std::string name = fresh_name(p);
    for (const auto& w : cands) {
      if (w.size() + 1 > opt.d) continue;
      Presentation q = p;
      q.gens.push_back(name);
      Word r{letter(q.gens.size() - 1)};
      r.insert(r.end(), w.begin(), w.end());
      q.rels.push_back(std::move(r));
      push(std::move(q), "OP5 " + std::to_string(opt.d) + " " + name + " " + format_word(w, p.gens));
    }
  }
  for (std::size_t g = 0; g < p.gens.size(); ++g) {
    std::size_t total = 0, where = nr;
    bool positive = false;
    for (std::size_t i = 0; i < nr; ++i)
      for (Letter l : p.rels[i])
        if (gen_of(l) == g) {
          ++total;
          where = i;
          positive = l > 0;
        }
    if (total != 1 || !positive || p.rels[where].size() > opt.d) continue;
    Presentation q = p;
    q.rels.erase(q.rels.begin() + static_cast<long>(where));
    q.gens.erase(q.gens.begin() + static_cast<long>(g));
    for (auto& r : q.rels)
      for (auto& l : r)
        if (gen_of(l) > g) l += l > 0 ? -1 : 1;
    push(std::move(q), "OP5INV " + std::to_string(opt.d) + " " + p.gens[g]);
  }
  {
    Presentation q = p;
    q.rels.emplace_back();
    push(std::move(q), "OP6");
  }
  for (std::size_t i = 0; i < nr; ++i)
    if (p.rels[i].empty()) {
      Presentation q = p;
      q.rels.erase(q.rels.begin() + static_cast<long>(i));
      push(std::move(q), "OP6INV " + std::to_string(i));
      break;
    }
  return out;
}

namespace {

struct Node {
  Fingerprint parent;
  std::string move;
  std::size_t depth;
  bool root = false;
};

SearchResult reconstruct(const std::map<Fingerprint, Node>& seen, const Fingerprint& goal, std::size_t states) {
  SearchResult r;
  r.status = SearchStatus::found;
  r.states = states;
  std::vector<Fingerprint> chain{goal};
  std::vector<std::string> moves;
  Fingerprint cur = goal;
  while (!seen.at(cur).root) {
    const Node& n = seen.at(cur);
    moves.push_back(n.move);
    cur = n.parent;
    chain.push_back(cur);
  }
  std::reverse(chain.begin(), chain.end());
  std::reverse(moves.begin(), moves.end());
  for (const auto& f : chain) r.path.push_back(from_fingerprint(f));
  r.moves = std::move(moves);
  r.distance = r.moves.size();
  return r;
}

double heuristic(const Presentation& p, const Presentation& t) {
  auto total = [](const Presentation& q) {
    std::size_t s = 0;
    for (const auto& r : q.rels) s += r.size();
    return static_cast<double>(s);
  };
  auto diff = [](double a, double b) { return a > b ? a - b : b - a; };
  return diff(static_cast<double>(p.gens.size()), static_cast<double>(t.gens.size())) +
         diff(static_cast<double>(p.rels.size()), static_cast<double>(t.rels.size())) +
         0.5 * diff(total(p), total(t));
}

}  // namespace

SearchResult tietze_distance(const Presentation& from, const Presentation& to, const SearchOptions& opt) {
  const Fingerprint start = canonical_form(from), goal = canonical_form(to);
  std::map<Fingerprint, Node> seen;
  seen[start] = Node{{}, "", 0, true};
  if (start == goal) {
    auto r = reconstruct(seen, goal, 1);
    r.exact = true;
    return r;
  }
  std::deque<Fingerprint> frontier{start};
  for (std::size_t depth = 0; depth < opt.max_depth; ++depth) {
    // Expand in canonical order so ties resolve reproducibly.
    std::sort(frontier.begin(), frontier.end());
    std::deque<Fingerprint> next;
    for (const auto& f : frontier) {
      for (auto& nb : class_neighbours(from_fingerprint(f), opt)) {
        Fingerprint g = canonical_form(nb.p);
        if (seen.count(g)) continue;
        seen[g] = Node{f, nb.move, depth + 1, false};
        if (g == goal) {
          auto r = reconstruct(seen, goal, seen.size());
          r.exact = true;
          return r;
        }
        if (seen.size() >= opt.max_states) {
          SearchResult r;
          r.status = SearchStatus::state_limit;
          r.states = seen.size();
          return r;
        }
        next.push_back(std::move(g));
      }
    }
    frontier = std::move(next);
    if (frontier.empty()) break;
  }
  SearchResult r;
  r.status = SearchStatus::depth_exhausted;
  r.states = seen.size();
  return r;
}

SearchResult tietze_path(const Presentation& from, const Presentation& to, const SearchOptions& opt) {
  const Fingerprint start = canonical_form(from), goal = canonical_form(to);
  const Presentation target = from_fingerprint(goal);
  std::map<Fingerprint, Node> seen;
  seen[start] = Node{{}, "", 0, true};
  if (start == goal) return reconstruct(seen, goal, 1);
  using Item = std::tuple<double, std::size_t, Fingerprint>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> open;
  open.push({opt.weight * heuristic(from_fingerprint(start), target), 0, start});
  while (!open.empty()) {
    auto [f, depth, fp] = open.top();
    open.pop();
    if (depth >= opt.max_depth) continue;
    for (auto& nb : class_neighbours(from_fingerprint(fp), opt)) {
      Fingerprint g = canonical_form(nb.p);
      auto it = seen.find(g);
      if (it != seen.end() && it->second.depth <= depth + 1) continue;
      seen[g] = Node{fp, nb.move, depth + 1, false};
      if (g == goal) return reconstruct(seen, goal, seen.size());
      if (seen.size() >= opt.max_states) {
        SearchResult r;
        r.status = SearchStatus::state_limit;
        r.states = seen.size();
        return r;
      }
      open.push({static_cast<double>(depth + 1) + opt.weight * heuristic(nb.p, target), depth + 1, g});
    }
  }
  SearchResult r;
  r.status = SearchStatus::depth_exhausted;
  r.states = seen.size();
  return r;
}

SearchResult tietze_distance_or_bound(const Presentation& from, const Presentation& to,
                                      const SearchOptions& opt) {
  SearchResult r = tietze_distance(from, to, opt);
  if (r.distance) return r;
  SearchResult b = tietze_path(from, to, opt);
  b.states += r.states;
  return b;
}

bool verify_path(const SearchResult& r, const SearchOptions& opt) {
  if (!r.distance || r.path.size() != *r.distance + 1) return false;
  SearchOptions wide = opt;
  wide.max_rel_len = static_cast<std::size_t>(-1);
  wide.max_gens = static_cast<std::size_t>(-1);
  for (std::size_t k = 0; k + 1 < r.path.size(); ++k) {
    Fingerprint want = canonical_form(r.path[k + 1]);
    bool ok = false;
    for (auto& nb : class_neighbours(r.path[k], wide))
      if (canonical_form(nb.p) == want) {
        ok = true;
        break;
      }
    if (!ok) return false;
  }
  return true;
}

}  // namespace balpres
