#include "balpres/rewriting.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <set>

namespace balpres {

namespace {

class Rewriter {
 public:
  explicit Rewriter(const Presentation& p) : sb_(p, 2) {
    names_.insert(p.gens.begin(), p.gens.end());
    for (std::size_t j = 0; j < p.rels.size(); ++j) {
      cluster_.push_back(j);
      if (p.rels[j].size() < 2) flagged_.push_back(j);
    }
  }
  Rewriter(const Presentation& p, std::vector<std::size_t> cluster) : Rewriter(p) {
    if (!cluster.empty()) {
      if (cluster.size() != p.rels.size()) throw InputError("cluster labels do not match relators");
      cluster_ = std::move(cluster);
    }
  }

  const Presentation& cur() const { return sb_.current(); }

  std::string fresh(std::string base) {
    while (names_.count(base)) base += "_";
    names_.insert(base);
    return base;
  }

  // New generator g with relator g^-1 u; returns (generator, relator) indices.
  std::pair<std::size_t, std::size_t> define(const std::string& base, const Word& u, std::size_t cl) {
    const std::size_t def = sb_.define_abbreviation(fresh(base), u);
    cluster_.push_back(cl);
    return {cur().gens.size() - 1, def};
  }

  // Replaces the single letter at (rel, pos) by w^eps where def = w^-1 f and
  // the letter is f^eps.
  void replace_letter(std::size_t rel, std::size_t pos, std::size_t w, std::size_t def) {
    if (cur().rels[rel][pos] > 0) {
      sb_.replace_subword(rel, pos, 1, w, def);
      return;
    }
    sb_.apply(Op3{def});
    sb_.apply(Op2{def, 1});
    sb_.replace_subword(rel, pos, 1, w, def);
    sb_.apply(Op2{def, 1});
    sb_.apply(Op3{def});
  }

  void halve(bool per_cluster) {
    for (std::size_t round = 0;; ++round) {
      std::vector<std::size_t> todo;
      for (std::size_t j = 0; j < cur().rels.size(); ++j)
        if (cur().rels[j].size() > 3) todo.push_back(j);
      if (todo.empty()) return;
      std::map<std::pair<std::size_t, Word>, std::pair<std::size_t, std::size_t>> abbr;
      for (std::size_t j : todo) {
        const Word r = cur().rels[j];
        const std::size_t cl = per_cluster ? cluster_[j] : 0;
        for (std::size_t c = 0; 2 * c + 1 < r.size(); ++c) {
          Word u{r[2 * c], r[2 * c + 1]};
          auto key = std::make_pair(cl, u);
          if (abbr.count(key)) continue;
          abbr[key] = define("_r" + std::to_string(j) + "_d" + std::to_string(round) + "_c" + std::to_string(c),
                             u, cluster_[j]);
        }
      }
      for (std::size_t j : todo) {
        const std::size_t cl = per_cluster ? cluster_[j] : 0;
        const std::size_t chunks = cur().rels[j].size() / 2;
        for (std::size_t c = chunks; c-- > 0;) {
          const Word& r = cur().rels[j];
          Word u{r[2 * c], r[2 * c + 1]};
          auto [g, def] = abbr.at({cl, u});
          sb_.replace_subword(j, 2 * c, 2, g, def);
        }
      }
    }
  }

  void split(SplitVariant v) {
    for (const auto& r : cur().rels)
      if (r.size() > 3) throw InputError("split_occurrences: relators must have length <= 3");
    std::vector<std::size_t> labels;
    if (v == SplitVariant::global) {
      labels.push_back(0);
    } else {
      std::set<std::size_t> seen(cluster_.begin(), cluster_.end());
      labels.assign(seen.begin(), seen.end());
    }
    const std::size_t ngens = cur().gens.size();
    for (std::size_t label : labels) {
      auto in_group = [&](std::size_t j) { return v == SplitVariant::global || cluster_[j] == label; };
      for (std::size_t f = 0; f < ngens; ++f) {
        std::vector<std::pair<std::size_t, std::size_t>> occ;
        for (std::size_t j = 0; j < cur().rels.size(); ++j) {
          if (!in_group(j)) continue;
          for (std::size_t pos = 0; pos < cur().rels[j].size(); ++pos)
            if (gen_of(cur().rels[j][pos]) == f) occ.push_back({j, pos});
        }
        const std::size_t T = occ.size();
        if (T <= 3) continue;
        const std::size_t m = T - 3;
        const std::size_t cl = v == SplitVariant::global ? cluster_[occ.front().first] : label;
        std::vector<std::pair<std::size_t, std::size_t>> w;  // (generator, defining relator)
        for (std::size_t i = 1; i <= m; ++i)
          w.push_back(define("_r" + std::to_string(cl) + "_s" + std::to_string(f) + "_w" + std::to_string(i),
                             Word{letter(f)}, cl));
        // Two occurrences stay f, two become w_m, the rest w_1 .. w_{m-1}.
        for (std::size_t q = 2; q < T; ++q) {
          const std::size_t idx = q < 4 ? m - 1 : q - 4;
          replace_letter(occ[q].first, occ[q].second, w[idx].first, w[idx].second);
        }
        // Rewire w_i^-1 f into w_{i-1} w_i^-1, and w_1^-1 f into f w_1^-1.
        for (std::size_t i = m; i-- > 1;) {
          sb_.replace_subword(w[i].second, 1, 1, w[i - 1].first, w[i - 1].second);
          sb_.apply(Op2{w[i].second, 1});
        }
        sb_.apply(Op2{w[0].second, 1});
      }
    }
  }

  // Replaces the subword u at pos of relator j by a single letter, bottom-up
  // through the halves tree; `tree` maps words of length >= 2 to definitions.
  void collapse(std::size_t j, std::size_t pos, const Word& u,
                const std::map<Word, std::pair<std::size_t, std::size_t>>& tree) {
    if (u.size() < 2) return;
    const std::size_t h = (u.size() + 1) / 2;
    const Word left(u.begin(), u.begin() + static_cast<long>(h)), right(u.begin() + static_cast<long>(h), u.end());
    collapse(j, pos + h, right, tree);
    collapse(j, pos, left, tree);
    auto [g, def] = tree.at(u);
    sb_.replace_subword(j, pos, 2, g, def);
  }

  // Defines u (and its halves) if missing.
  Letter ensure(const Word& u, std::map<Word, std::pair<std::size_t, std::size_t>>& tree, const std::string& prefix,
                std::size_t cl, std::map<std::size_t, std::size_t>& per_len) {
    if (u.size() == 1) return u[0];
    auto it = tree.find(u);
    if (it != tree.end()) return letter(it->second.first);
    const std::size_t h = (u.size() + 1) / 2;
    Letter a = ensure(Word(u.begin(), u.begin() + static_cast<long>(h)), tree, prefix, cl, per_len);
    Letter b = ensure(Word(u.begin() + static_cast<long>(h), u.end()), tree, prefix, cl, per_len);
    const std::size_t idx = per_len[u.size()]++;
    auto gd = define(prefix + "k" + std::to_string(u.size()) + "_" + std::to_string(idx), Word{a, b}, cl);
    tree[u] = gd;
    return letter(gd.first);
  }

  std::size_t abbreviate(const std::vector<std::size_t>& rels, std::size_t k, bool all_words, bool per_relator) {
    std::map<Word, std::pair<std::size_t, std::size_t>> shared;
    std::map<std::size_t, std::size_t> shared_len;
    std::size_t before = cur().gens.size();
    if (all_words && !per_relator) {
      std::set<Letter> alphabet;
      for (std::size_t j : rels)
        for (Letter l : cur().rels[j]) alphabet.insert(l);
      std::vector<Word> layer;
      for (Letter l : alphabet) layer.push_back({l});
      for (std::size_t len = 2; len <= k; ++len) {
        std::vector<Word> next;
        for (const auto& w : layer)
          for (Letter l : alphabet) {
            if (w.back() == -l) continue;
            Word u = w;
            u.push_back(l);
            ensure(u, shared, "_", 0, shared_len);
            next.push_back(std::move(u));
          }
        layer = std::move(next);
      }
    }
    for (std::size_t j : rels) {
      std::map<Word, std::pair<std::size_t, std::size_t>> own;
      std::map<std::size_t, std::size_t> own_len;
      auto& tree = per_relator ? own : shared;
      auto& lens = per_relator ? own_len : shared_len;
      const std::string prefix = per_relator ? "_r" + std::to_string(j) + "_" : "_";
      const Word r = cur().rels[j];
      std::vector<std::size_t> starts;
      for (std::size_t s = 0; s < r.size(); s += k) starts.push_back(s);
      for (std::size_t s : starts) {
        Word u(r.begin() + static_cast<long>(s), r.begin() + static_cast<long>(std::min(r.size(), s + k)));
        ensure(u, tree, prefix, cluster_[j], lens);
      }
      for (std::size_t b = starts.size(); b-- > 0;) {
        const std::size_t s = starts[b];
        Word u(r.begin() + static_cast<long>(s), r.begin() + static_cast<long>(std::min(r.size(), s + k)));
        collapse(j, s, u, tree);
      }
    }
    return cur().gens.size() - before;
  }

  RewriteResult result() const { return {sb_.current(), sb_.script(), cluster_, flagged_}; }

 private:
  ScriptBuilder sb_;
  std::set<std::string> names_;
  std::vector<std::size_t> cluster_;
  std::vector<std::size_t> flagged_;
};

}  // namespace

RewriteResult halve_relators(const Presentation& p, bool per_cluster_dedupe) {
  Rewriter rw(p);
  rw.halve(per_cluster_dedupe);
  return rw.result();
}

RewriteResult split_occurrences(const Presentation& p, SplitVariant v, const std::vector<std::size_t>& cluster) {
  Rewriter rw(p, cluster);
  rw.split(v);
  return rw.result();
}

RewriteResult rewrite_nice(const Presentation& p, SplitVariant v) {
  Rewriter rw(p);
  rw.halve(v == SplitVariant::per_relator);
  rw.split(v);
  return rw.result();
}

std::size_t compress_block_length(std::size_t len, double* N_out) {
  if (N_out) *N_out = 0;
  if (len < 3) return 0;
  // Solve N ln N = len by Newton's method.
  const double L = static_cast<double>(len);
  double N = std::max(3.0, L / std::log(L));
  for (int i = 0; i < 100; ++i) {
    const double f = N * std::log(N) - L;
    const double next = N - f / (std::log(N) + 1.0);
    if (std::fabs(next - N) < 1e-12 * N) {
      N = next;
      break;
    }
    N = next;
  }
  if (N_out) *N_out = N;
  if (N <= std::exp(1.0)) return 0;
  const double q = N / std::log(N);
  if (q < 4.0) return 0;
  return static_cast<std::size_t>(std::floor(std::log2(q)));
}

CompressResult compress(const Presentation& p, const CompressOptions& opt) {
  CompressResult out;
  std::size_t longest = 0;
  for (const auto& r : p.rels) longest = std::max(longest, r.size());
  out.k = opt.k ? opt.k : compress_block_length(longest, &out.N);
  Rewriter rw(p);
  if (out.k >= 2) {
    std::vector<std::size_t> rels;
    for (std::size_t j = 0; j < p.rels.size(); ++j)
      if (p.rels[j].size() > out.k) rels.push_back(j);
    if (!rels.empty()) out.abbreviations = rw.abbreviate(rels, out.k, opt.all_words, false);
  }
  out.r = rw.result();
  return out;
}

RewriteResult short_relator_pipeline(const Presentation& p) {
  std::size_t longest = 0;
  for (const auto& r : p.rels) longest = std::max(longest, r.size());
  const std::size_t k = compress_block_length(longest);
  Rewriter rw(p);
  if (k >= 2) {
    std::vector<std::size_t> rels;
    for (std::size_t j = 0; j < p.rels.size(); ++j)
      if (p.rels[j].size() > k) rels.push_back(j);
    rw.abbreviate(rels, k, false, true);
  }
  rw.halve(true);
  rw.split(SplitVariant::per_relator);
  return rw.result();
}

std::size_t PresGraph::loops(std::size_t v) const { return multiplicity(v, v); }

std::size_t PresGraph::multiplicity(std::size_t u, std::size_t v) const {
  auto it = edges.find({std::min(u, v), std::max(u, v)});
  return it == edges.end() ? 0 : it->second;
}

PresGraph pres_graph(const Presentation& p) {
  PresGraph g;
  g.vertices = p.gens.size();
  for (const auto& r : p.rels)
    for (std::size_t i = 0; i < r.size(); ++i)
      for (std::size_t j = i + 1; j < r.size(); ++j) {
        std::size_t a = gen_of(r[i]), b = gen_of(r[j]);
        g.edges[{std::min(a, b), std::max(a, b)}]++;
      }
  return g;
}

std::vector<Component> graph_components(const PresGraph& g) {
  std::vector<std::vector<std::size_t>> adj(g.vertices);
  for (const auto& [e, mult] : g.edges)
    if (e.first != e.second) {
      adj[e.first].push_back(e.second);
      adj[e.second].push_back(e.first);
    }
  std::vector<long> comp(g.vertices, -1);
  std::vector<Component> out;
  for (std::size_t s = 0; s < g.vertices; ++s) {
    if (comp[s] >= 0) continue;
    Component c;
    std::deque<std::size_t> q{s};
    comp[s] = static_cast<long>(out.size());
    while (!q.empty()) {
      std::size_t u = q.front();
      q.pop_front();
      c.vertices.push_back(u);
      for (std::size_t v : adj[u])
        if (comp[v] < 0) {
          comp[v] = comp[s];
          q.push_back(v);
        }
    }
    std::vector<long> dist(g.vertices, -1);
    for (std::size_t src : c.vertices) {
      for (std::size_t v : c.vertices) dist[v] = -1;
      dist[src] = 0;
      std::deque<std::size_t> bq{src};
      while (!bq.empty()) {
        std::size_t u = bq.front();
        bq.pop_front();
        c.diameter = std::max(c.diameter, static_cast<std::size_t>(dist[u]));
        for (std::size_t v : adj[u])
          if (dist[v] < 0) {
            dist[v] = dist[u] + 1;
            bq.push_back(v);
          }
      }
    }
    std::sort(c.vertices.begin(), c.vertices.end());
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<std::size_t> occurrence_counts(const Presentation& p) {
  std::vector<std::size_t> c(p.gens.size(), 0);
  for (const auto& r : p.rels)
    for (Letter l : r) c[gen_of(l)]++;
  return c;
}

std::vector<std::size_t> relator_counts(const Presentation& p) {
  std::vector<std::size_t> c(p.gens.size(), 0);
  for (const auto& r : p.rels) {
    std::set<std::size_t> gs;
    for (Letter l : r) gs.insert(gen_of(l));
    for (std::size_t g : gs) c[g]++;
  }
  return c;
}

NiceReport measure_nice(const Presentation& in, const RewriteResult& out) {
  NiceReport r;
  r.in_length = in.length();
  r.out_length = out.p.length();
  r.moves = out.script.moves.size();
  if (r.in_length) {
    r.length_ratio = static_cast<double>(r.out_length) / static_cast<double>(r.in_length);
    r.script_ratio = static_cast<double>(r.moves) / static_cast<double>(r.in_length);
  }
  const auto rc = relator_counts(out.p);
  const auto oc = occurrence_counts(out.p);
  for (std::size_t g = 0; g < rc.size(); ++g) {
    r.max_relators_per_gen = std::max(r.max_relators_per_gen, rc[g]);
    r.max_occurrences = std::max(r.max_occurrences, oc[g]);
    if (r.histogram.size() <= rc[g]) r.histogram.resize(rc[g] + 1, 0);
    r.histogram[rc[g]]++;
  }
  r.lengths_ok = true;
  for (std::size_t j = 0; j < out.p.rels.size(); ++j) {
    const std::size_t len = out.p.rels[j].size();
    r.max_relator_length = std::max(r.max_relator_length, len);
    const bool passthrough = std::find(out.flagged.begin(), out.flagged.end(), j) != out.flagged.end();
    if (!passthrough && (len < 2 || len > 3)) r.lengths_ok = false;
  }
  r.offset_in = static_cast<long>(in.rels.size()) - static_cast<long>(in.gens.size());
  r.offset_out = static_cast<long>(out.p.rels.size()) - static_cast<long>(out.p.gens.size());
  for (const auto& c : graph_components(pres_graph(out.p))) r.max_diameter = std::max(r.max_diameter, c.diameter);
  const double scale = static_cast<double>(std::max<std::size_t>(in.gens.size(), 1)) *
                       std::log(static_cast<double>(std::max<std::size_t>(r.in_length, 3)));
  r.diameter_constant = static_cast<double>(r.max_diameter) / scale;
  return r;
}

}  // namespace balpres
