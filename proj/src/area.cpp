#include "balpres/area.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace balpres {

std::string area_status_name(AreaStatus s) {
  switch (s) {
    case AreaStatus::found: return "found";
    case AreaStatus::cells_exhausted: return "cells";
    case AreaStatus::length_pruned: return "length";
    case AreaStatus::state_limit: return "states";
  }
  return "?";
}

namespace {

struct Conjugate {
  std::size_t rel, offset;
  bool inverted;
  Word c;
};

std::vector<Conjugate> conjugates(const Presentation& p) {
  std::vector<Conjugate> out;
  std::set<Word> seen;
  for (std::size_t i = 0; i < p.rels.size(); ++i) {
    const Word& r = p.rels[i];
    if (r.empty()) continue;
    for (bool inv : {false, true}) {
      const Word base = inv ? inverse(r) : r;
      for (std::size_t o = 0; o < base.size(); ++o) {
        Word c = rotate(base, o);
        if (seen.insert(c).second) out.push_back({i, o, inv, std::move(c)});
      }
    }
  }
  return out;
}

Word splice(const Word& u, std::size_t pos, std::size_t k, const Word& c) {
  Word out(u.begin(), u.begin() + static_cast<long>(pos));
  for (std::size_t i = c.size(); i > k; --i) out.push_back(-c[i - 1]);
  out.insert(out.end(), u.begin() + static_cast<long>(pos + k), u.end());
  return free_reduce(out);
}

}  // namespace

Word apply_cell(const Presentation& p, const Word& w, const CellStep& s) {
  if (s.rel >= p.rels.size() || p.rels[s.rel].empty()) throw InputError("cell: bad relator index");
  const Word base = s.inverted ? inverse(p.rels[s.rel]) : p.rels[s.rel];
  if (s.offset >= base.size() || s.k > base.size()) throw InputError("cell: bad offset or split");
  const Word c = rotate(base, s.offset);
  if (s.pos + s.k > w.size()) throw InputError("cell: position outside word");
  if (!std::equal(c.begin(), c.begin() + static_cast<long>(s.k), w.begin() + static_cast<long>(s.pos)))
    throw InputError("cell: subword does not match relator piece");
  return splice(w, s.pos, s.k, c);
}

bool replay_area_trace(const Presentation& p, const Word& w, const std::vector<CellStep>& trace) {
  Word cur = free_reduce(w);
  for (const auto& s : trace) cur = apply_cell(p, cur, s);
  return cur.empty();
}

std::string format_cell(const CellStep& s) {
  return "CELL " + std::to_string(s.rel) + " " + std::to_string(s.offset) + " " + (s.inverted ? "-" : "+") +
         " " + std::to_string(s.pos) + " " + std::to_string(s.k);
}

AreaResult area_upper(const Presentation& p, const Word& w, const AreaBudget& budget) {
  AreaResult res;
  const Word start = free_reduce(w);
  if (start.empty()) {
    res.area = 0;
    res.status = AreaStatus::found;
    res.states = 1;
    res.exhaustive = true;
    return res;
  }
  const auto conj = conjugates(p);
  std::size_t maxrel = 0;
  for (const auto& r : p.rels) maxrel = std::max(maxrel, r.size());
  const std::size_t max_len = budget.max_len ? budget.max_len : start.size() + budget.max_cells * maxrel;
  if (maxrel == 0) {
    res.exhaustive = true;
    return res;
  }

  bool length_cut = false;
  for (std::size_t c = 1; c <= budget.max_cells; ++c) {
    if (start.size() > maxrel * c) continue;
    std::map<Word, std::pair<Word, CellStep>> parent;
    parent[start] = {};
    std::vector<Word> layer{start};
    for (std::size_t d = 0; d < c && !layer.empty(); ++d) {
      const std::size_t cap = maxrel * (c - d - 1);
      std::vector<Word> next;
      for (const Word& u : layer) {
        for (const auto& cj : conj) {
          const std::size_t L = cj.c.size();
          for (std::size_t k = 0; k <= L; ++k) {
            if (k > u.size()) break;
            for (std::size_t pos = 0; pos + k <= u.size(); ++pos) {
              if (k && !std::equal(cj.c.begin(), cj.c.begin() + static_cast<long>(k),
                                   u.begin() + static_cast<long>(pos)))
                continue;
              Word v = splice(u, pos, k, cj.c);
              // A word needing r more cells has length <= r * maxrel.
              if (v.size() > cap) continue;
              if (v.size() > max_len) {
                length_cut = true;
                continue;
              }
              if (parent.count(v)) continue;
              parent[v] = {u, CellStep{cj.rel, cj.offset, cj.inverted, pos, k}};
              if (v.empty()) {
                std::vector<CellStep> trace;
                Word cur = v;
                while (cur != start) {
                  auto& [pw, st] = parent[cur];
                  trace.push_back(st);
                  cur = pw;
                }
                std::reverse(trace.begin(), trace.end());
                res.area = trace.size();
                res.trace = std::move(trace);
                res.status = AreaStatus::found;
                res.states += parent.size();
                res.exhaustive = true;
                return res;
              }
              if (parent.size() >= budget.max_states) {
                res.states += parent.size();
                res.status = AreaStatus::state_limit;
                return res;
              }
              next.push_back(std::move(v));
            }
          }
        }
      }
      layer = std::move(next);
    }
    res.states += parent.size();
  }
  res.status = length_cut ? AreaStatus::length_pruned : AreaStatus::cells_exhausted;
  res.exhaustive = !length_cut;
  return res;
}

}  // namespace balpres
