#include "balpres/complex.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>

namespace balpres {

namespace {

bool contains(const Simplex& big, const Simplex& small) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

Simplex sorted(Simplex s) {
  std::sort(s.begin(), s.end());
  return s;
}

Simplex unite(const Simplex& a, const Simplex& b) {
  Simplex out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Simplex without(const Simplex& s, int v) {
  Simplex out;
  for (int x : s)
    if (x != v) out.push_back(x);
  return out;
}

void subsets(const Simplex& s, std::size_t k, std::set<Simplex>& out) {
  if (k > s.size()) return;
  std::vector<bool> pick(s.size(), false);
  std::fill(pick.begin(), pick.begin() + static_cast<long>(k), true);
  do {
    Simplex f;
    for (std::size_t i = 0; i < s.size(); ++i)
      if (pick[i]) f.push_back(s[i]);
    out.insert(std::move(f));
  } while (std::prev_permutation(pick.begin(), pick.end()));
}

struct UnionFind {
  std::map<int, int> parent;
  int find(int x) {
    auto it = parent.find(x);
    if (it == parent.end()) return parent[x] = x;
    if (it->second == x) return x;
    return it->second = find(it->second);
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

std::map<int, std::vector<int>> adjacency(const std::set<Edge>& edges) {
  std::map<int, std::vector<int>> adj;
  for (auto [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (auto& [k, list] : adj) std::sort(list.begin(), list.end());
  return adj;
}

// Vertex path from a to b inside a tree.
std::vector<int> tree_path(const std::set<Edge>& tree, int a, int b) {
  auto adj = adjacency(tree);
  std::map<int, int> prev{{a, a}};
  std::deque<int> q{a};
  while (!q.empty()) {
    int u = q.front();
    q.pop_front();
    if (u == b) break;
    for (int v : adj[u])
      if (!prev.count(v)) {
        prev[v] = u;
        q.push_back(v);
      }
  }
  if (!prev.count(b)) throw InputError("tree does not connect the endpoints");
  std::vector<int> path{b};
  while (path.back() != a) path.push_back(prev[path.back()]);
  std::reverse(path.begin(), path.end());
  return path;
}

Edge edge(int u, int v) { return {std::min(u, v), std::max(u, v)}; }

}  // namespace

SimplicialComplex SimplicialComplex::from_facets(std::vector<Simplex> fs) {
  std::set<Simplex> all;
  for (auto& s : fs) {
    s = sorted(std::move(s));
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) throw InputError("simplex with repeated vertex");
    if (!s.empty()) all.insert(s);
  }
  std::set<Simplex> proper;
  for (const auto& s : all)
    for (std::size_t k = 1; k < s.size(); ++k) subsets(s, k, proper);
  SimplicialComplex c;
  for (const auto& s : all)
    if (!proper.count(s)) c.facets.insert(s);
  return c;
}

SimplicialComplex SimplicialComplex::boundary_simplex(std::size_t n) {
  Simplex full(n + 2);
  std::iota(full.begin(), full.end(), 0);
  std::vector<Simplex> fs;
  for (int v : full) fs.push_back(without(full, v));
  return from_facets(fs);
}

int SimplicialComplex::dim() const {
  int d = -1;
  for (const auto& s : facets) d = std::max(d, static_cast<int>(s.size()) - 1);
  return d;
}

bool SimplicialComplex::pure() const {
  const int d = dim();
  for (const auto& s : facets)
    if (static_cast<int>(s.size()) - 1 != d) return false;
  return true;
}

std::set<int> SimplicialComplex::vertices() const {
  std::set<int> vs;
  for (const auto& s : facets) vs.insert(s.begin(), s.end());
  return vs;
}

std::set<Simplex> SimplicialComplex::faces(std::size_t k) const {
  std::set<Simplex> out;
  for (const auto& s : facets) subsets(s, k + 1, out);
  return out;
}

std::vector<std::size_t> SimplicialComplex::f_vector() const {
  std::vector<std::size_t> f;
  for (int k = 0; k <= dim(); ++k) f.push_back(faces(static_cast<std::size_t>(k)).size());
  return f;
}

long SimplicialComplex::euler_characteristic() const {
  long chi = 0;
  auto f = f_vector();
  for (std::size_t k = 0; k < f.size(); ++k) chi += (k % 2 ? -1 : 1) * static_cast<long>(f[k]);
  return chi;
}

std::set<Edge> SimplicialComplex::edges() const {
  std::set<Edge> out;
  for (const auto& s : faces(1)) out.insert({s[0], s[1]});
  return out;
}

bool SimplicialComplex::has_face(const Simplex& s) const {
  const Simplex t = sorted(s);
  for (const auto& f : facets)
    if (contains(f, t)) return true;
  return false;
}

std::size_t SimplicialComplex::top_count() const {
  const int d = dim();
  std::size_t n = 0;
  for (const auto& s : facets)
    if (static_cast<int>(s.size()) - 1 == d) ++n;
  return n;
}

std::vector<PachnerMove> find_pachner_moves(const SimplicialComplex& t, std::size_t i) {
  std::vector<PachnerMove> out;
  if (!t.pure() || t.dim() < 1) return out;
  const std::size_t n = static_cast<std::size_t>(t.dim());
  if (i < 1 || i > n + 1) return out;
  if (i == 1) {
    const int fresh = *t.vertices().rbegin() + 1;
    for (const auto& f : t.facets) out.push_back({1, f, {fresh}, true});
    return out;
  }
  for (const auto& A : t.faces(n + 1 - i)) {
    std::vector<Simplex> star;
    for (const auto& f : t.facets)
      if (contains(f, A)) star.push_back(f);
    if (star.size() != i) continue;
    Simplex B;
    for (const auto& f : star)
      for (int v : f)
        if (!std::binary_search(A.begin(), A.end(), v)) B.push_back(v);
    B = sorted(B);
    B.erase(std::unique(B.begin(), B.end()), B.end());
    if (B.size() != i || t.has_face(B)) continue;
    out.push_back({i, A, B, false});
  }
  return out;
}

std::pair<SimplicialComplex, PachnerMove> apply_pachner(const SimplicialComplex& t, const PachnerMove& m) {
  if (!t.pure()) throw PachnerError("complex is not pure");
  const std::size_t n = static_cast<std::size_t>(t.dim());
  const Simplex A = sorted(m.A), B = sorted(m.B);
  if (m.i < 1 || m.i > n + 1) throw PachnerError("move index out of range");
  if (A.size() != n + 2 - m.i || B.size() != m.i) throw PachnerError("face sizes do not match the move index");
  Simplex meet;
  std::set_intersection(A.begin(), A.end(), B.begin(), B.end(), std::back_inserter(meet));
  if (!meet.empty()) throw PachnerError("A and B overlap");
  const auto vs = t.vertices();
  if (m.fresh) {
    if (m.i != 1) throw PachnerError("only a 1-move introduces a vertex");
    if (vs.count(B[0])) throw PachnerError("fresh vertex already present");
  } else if (m.i == 1) {
    throw PachnerError("a 1-move needs a fresh vertex");
  }
  std::set<Simplex> C;
  for (int b : B) C.insert(unite(A, without(B, b)));
  for (const auto& c : C)
    if (!t.facets.count(c)) throw PachnerError("simplex of C missing from the complex");
  for (const auto& f : t.facets)
    if (contains(f, A) && !C.count(f)) throw PachnerError("star of A is larger than C");
  if (!m.fresh && t.has_face(B)) throw PachnerError("B is already a face; result would not be simplicial");
  SimplicialComplex out;
  for (const auto& f : t.facets)
    if (!C.count(f)) out.facets.insert(f);
  for (int a : A) {
    Simplex f = unite(B, without(A, a));
    if (out.facets.count(f)) throw PachnerError("new simplex already present");
    out.facets.insert(f);
  }
  PachnerMove inv{n + 2 - m.i, B, A, m.i == n + 1};
  return {out, inv};
}

std::string format_pachner(const PachnerMove& m) {
  std::string s = std::to_string(m.i) + " A";
  for (int v : m.A) s += " " + std::to_string(v);
  s += " B";
  for (int v : m.B) s += " " + std::to_string(v);
  if (m.fresh) s += " fresh";
  return s;
}

PachnerMove parse_pachner(const std::string& line) {
  std::istringstream in(line);
  PachnerMove m;
  std::string tok;
  if (!(in >> m.i)) throw InputError("pachner: missing move index");
  Simplex* cur = nullptr;
  while (in >> tok) {
    if (tok == "A") {
      cur = &m.A;
    } else if (tok == "B") {
      cur = &m.B;
    } else if (tok == "fresh") {
      m.fresh = true;
    } else {
      if (!cur) throw InputError("pachner: vertex before A/B marker");
      try {
        cur->push_back(std::stoi(tok));
      } catch (const std::exception&) {
        throw InputError("pachner: bad vertex '" + tok + "'");
      }
    }
  }
  if (m.A.empty() || m.B.empty()) throw InputError("pachner: A and B must be nonempty");
  return m;
}

std::string format_complex(const SimplicialComplex& t) {
  std::string s = "dim: " + std::to_string(t.dim()) + "\n";
  for (const auto& f : t.facets) {
    for (std::size_t i = 0; i < f.size(); ++i) s += (i ? " " : "") + std::to_string(f[i]);
    s += "\n";
  }
  return s;
}

SimplicialComplex parse_complex(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<Simplex> fs;
  bool have_dim = false;
  long dim = -1;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (line.rfind("dim:", 0) == 0) {
      try {
        dim = std::stol(line.substr(4));
      } catch (const std::exception&) {
        throw InputError("complex: bad dim line");
      }
      have_dim = true;
      continue;
    }
    std::istringstream ls(line);
    Simplex s;
    std::string tok;
    while (ls >> tok) {
      try {
        s.push_back(std::stoi(tok));
      } catch (const std::exception&) {
        throw InputError("complex: bad vertex '" + tok + "'");
      }
    }
    if (!s.empty()) fs.push_back(s);
  }
  if (!have_dim) throw InputError("complex: missing dim line");
  auto c = SimplicialComplex::from_facets(fs);
  if (c.dim() != dim) throw InputError("complex: dim line does not match the simplices");
  return c;
}

SpanningTree spanning_tree(const SimplicialComplex& t, int root) {
  const auto vs = t.vertices();
  if (!vs.count(root)) throw InputError("root is not a vertex");
  auto adj = adjacency(t.edges());
  SpanningTree tree{root, {}};
  std::set<int> seen{root};
  std::deque<int> q{root};
  while (!q.empty()) {
    int u = q.front();
    q.pop_front();
    for (int v : adj[u])
      if (seen.insert(v).second) {
        tree.edges.insert(edge(u, v));
        q.push_back(v);
      }
  }
  if (seen.size() != vs.size()) throw InputError("1-skeleton is disconnected");
  return tree;
}

SpanningTree kruskal_tree(const std::set<int>& vertices, const std::set<Edge>& graph, const std::vector<Edge>& order,
                          int root) {
  UnionFind uf;
  SpanningTree t{root, {}};
  auto take = [&](const Edge& e) {
    if (graph.count(e) && uf.unite(e.first, e.second)) t.edges.insert(e);
  };
  for (const auto& e : order) take(e);
  for (const auto& e : graph) take(e);
  if (!is_spanning_tree(vertices, graph, t.edges)) throw InputError("graph is disconnected");
  return t;
}

bool is_spanning_tree(const std::set<int>& vertices, const std::set<Edge>& graph, const std::set<Edge>& tree) {
  if (vertices.empty()) return tree.empty();
  if (tree.size() + 1 != vertices.size()) return false;
  UnionFind uf;
  for (const auto& e : tree) {
    if (!graph.count(e) || !vertices.count(e.first) || !vertices.count(e.second)) return false;
    if (!uf.unite(e.first, e.second)) return false;
  }
  return true;
}

Presentation pi1_presentation(const SimplicialComplex& t, const SpanningTree& tree) {
  const auto edges = t.edges();
  if (!is_spanning_tree(t.vertices(), edges, tree.edges)) throw InputError("not a spanning tree of the 1-skeleton");
  Presentation p;
  std::map<Edge, std::size_t> gen;
  for (const auto& e : edges)
    if (!tree.edges.count(e)) {
      gen[e] = p.gens.size();
      p.gens.push_back("e" + std::to_string(e.first) + "_" + std::to_string(e.second));
    }
  for (const auto& f : t.faces(2)) {
    Word w;
    auto push = [&](int u, int v, int sign) {
      auto it = gen.find(edge(u, v));
      if (it != gen.end()) w.push_back(letter(it->second, sign));
    };
    push(f[0], f[1], 1);
    push(f[1], f[2], 1);
    push(f[0], f[2], -1);
    p.rels.push_back(std::move(w));
  }
  return p;
}

std::vector<Exchange> tree_exchange_path(const std::set<int>& vertices, const std::set<Edge>& graph,
                                         const SpanningTree& t1, const SpanningTree& t2) {
  if (!is_spanning_tree(vertices, graph, t1.edges) || !is_spanning_tree(vertices, graph, t2.edges))
    throw InputError("tree_exchange_path: inputs must be spanning trees of the graph");
  std::vector<Exchange> path;
  std::set<Edge> cur = t1.edges;
  for (const auto& e : t2.edges) {
    if (cur.count(e)) continue;
    // The cycle closed by e leaves T2 somewhere, since T2 is acyclic.
    const auto vs = tree_path(cur, e.first, e.second);
    std::optional<Edge> drop;
    for (std::size_t k = 0; k + 1 < vs.size(); ++k) {
      Edge f = edge(vs[k], vs[k + 1]);
      if (!t2.edges.count(f)) {
        drop = f;
        break;
      }
    }
    if (!drop) throw InputError("tree_exchange_path: no exchangeable edge");
    cur.erase(*drop);
    cur.insert(e);
    path.push_back({e, *drop});
  }
  return path;
}

SimplicialComplex presentation_complex(const Presentation& p) {
  std::vector<Simplex> fs{{0}};
  auto a_of = [](std::size_t g) { return static_cast<int>(1 + 2 * g); };
  auto b_of = [](std::size_t g) { return static_cast<int>(2 + 2 * g); };
  for (std::size_t g = 0; g < p.gens.size(); ++g) {
    fs.push_back({0, a_of(g)});
    fs.push_back({a_of(g), b_of(g)});
    fs.push_back({b_of(g), 0});
  }
  int next = static_cast<int>(1 + 2 * p.gens.size());
  for (const auto& r : p.rels) {
    if (r.empty()) throw InputError("presentation_complex: empty relator");
    std::vector<int> path;
    for (Letter l : r) {
      const std::size_t g = gen_of(l);
      path.push_back(0);
      path.push_back(l > 0 ? a_of(g) : b_of(g));
      path.push_back(l > 0 ? b_of(g) : a_of(g));
    }
    const std::size_t m = path.size();
    std::vector<int> ring(m);
    for (auto& s : ring) s = next++;
    const int apex = next++;
    for (std::size_t k = 0; k < m; ++k) {
      const std::size_t k1 = (k + 1) % m;
      fs.push_back({apex, ring[k], ring[k1]});
      fs.push_back({path[k], ring[k], ring[k1]});
      fs.push_back({path[k], ring[k1], path[k1]});
    }
  }
  return SimplicialComplex::from_facets(fs);
}

std::size_t graph_diameter(std::size_t vertices, const std::vector<Edge>& edges) {
  std::vector<std::vector<std::size_t>> adj(vertices);
  for (auto [u, v] : edges)
    if (u != v) {
      adj[static_cast<std::size_t>(u)].push_back(static_cast<std::size_t>(v));
      adj[static_cast<std::size_t>(v)].push_back(static_cast<std::size_t>(u));
    }
  std::size_t diam = 0;
  for (std::size_t s = 0; s < vertices; ++s) {
    std::vector<long> d(vertices, -1);
    d[s] = 0;
    std::deque<std::size_t> q{s};
    while (!q.empty()) {
      auto u = q.front();
      q.pop_front();
      diam = std::max(diam, static_cast<std::size_t>(d[u]));
      for (auto v : adj[u])
        if (d[v] < 0) {
          d[v] = d[u] + 1;
          q.push_back(v);
        }
    }
  }
  return diam;
}

SimplicialComplex fill_cycle_basis(std::size_t vertices, const std::vector<Edge>& edges, int root) {
  if (vertices == 0) throw InputError("fill_cycle_basis: empty graph");
  for (auto [u, v] : edges)
    if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= vertices || static_cast<std::size_t>(v) >= vertices)
      throw InputError("fill_cycle_basis: edge endpoint out of range");
  if (root < 0 || static_cast<std::size_t>(root) >= vertices) throw InputError("fill_cycle_basis: bad root");
  std::vector<Simplex> fs;
  for (std::size_t v = 0; v < vertices; ++v) fs.push_back({static_cast<int>(v)});
  int next = static_cast<int>(vertices);
  std::set<Edge> simple;
  // Loops become filled triangles, repeated edges filled digons.
  for (auto [u, v] : edges) {
    if (u == v) {
      const int a = next++, b = next++;
      fs.push_back({u, a, b});
    } else if (!simple.insert(edge(u, v)).second) {
      fs.push_back({u, v, next++});
    } else {
      fs.push_back({u, v});
    }
  }
  auto adj = adjacency(simple);
  std::vector<int> parent(vertices, -1), depth(vertices, -1);
  parent[static_cast<std::size_t>(root)] = root;
  depth[static_cast<std::size_t>(root)] = 0;
  std::deque<int> q{root};
  std::set<Edge> tree;
  while (!q.empty()) {
    int u = q.front();
    q.pop_front();
    for (int v : adj[u])
      if (depth[static_cast<std::size_t>(v)] < 0) {
        depth[static_cast<std::size_t>(v)] = depth[static_cast<std::size_t>(u)] + 1;
        parent[static_cast<std::size_t>(v)] = u;
        tree.insert(edge(u, v));
        q.push_back(v);
      }
  }
  for (int d : depth)
    if (d < 0) throw InputError("fill_cycle_basis: graph is disconnected");
  for (const auto& e : simple) {
    if (tree.count(e)) continue;
    std::vector<int> px{e.first}, py{e.second};
    auto up = [&](std::vector<int>& p) { p.push_back(parent[static_cast<std::size_t>(p.back())]); };
    while (depth[static_cast<std::size_t>(px.back())] > depth[static_cast<std::size_t>(py.back())]) up(px);
    while (depth[static_cast<std::size_t>(py.back())] > depth[static_cast<std::size_t>(px.back())]) up(py);
    while (px.back() != py.back()) {
      up(px);
      up(py);
    }
    // Cycle: meeting vertex, down to e.second, across e, up from e.first.
    std::vector<int> cyc(py.rbegin(), py.rend());
    cyc.insert(cyc.end(), px.begin(), px.end() - 1);
    for (std::size_t i = 1; i + 1 < cyc.size(); ++i) fs.push_back({cyc[0], cyc[i], cyc[i + 1]});
  }
  return SimplicialComplex::from_facets(fs);
}

LocalMoveResult local_move_distance(const SimplicialComplex& t, const PachnerMove& m, const SearchOptions& opt) {
  const SimplicialComplex t2 = apply_pachner(t, m).first;
  std::set<int> region(m.A.begin(), m.A.end());
  region.insert(m.B.begin(), m.B.end());
  const auto e1 = t.edges();
  const auto e2 = t2.edges();
  // Edges of the move region present on both sides go first, so the two
  // trees coincide everywhere they can.
  std::vector<Edge> order1;
  for (const auto& e : e1)
    if (region.count(e.first) && region.count(e.second) && e2.count(e)) order1.push_back(e);
  const auto v1 = t.vertices();
  SpanningTree tr1 = kruskal_tree(v1, e1, order1, *v1.begin());
  const auto v2 = t2.vertices();
  std::vector<Edge> order2;
  for (const auto& e : tr1.edges)
    if (e2.count(e)) order2.push_back(e);
  SpanningTree tr2 = kruskal_tree(v2, e2, order2, *v2.begin());
  LocalMoveResult r;
  r.before = pi1_presentation(t, tr1);
  r.after = pi1_presentation(t2, tr2);
  r.search = tietze_distance_or_bound(r.before, r.after, opt);
  return r;
}

std::pair<SimplicialComplex, std::vector<PachnerMove>> random_pachner_walk(const SimplicialComplex& t,
                                                                           std::size_t steps,
                                                                           std::mt19937_64& rng) {
  SimplicialComplex cur = t;
  std::vector<PachnerMove> moves;
  const std::size_t n = static_cast<std::size_t>(std::max(cur.dim(), 0));
  for (std::size_t s = 0; s < steps; ++s) {
    std::vector<PachnerMove> all;
    for (std::size_t i = 1; i <= n + 1; ++i)
      for (auto& m : find_pachner_moves(cur, i)) all.push_back(m);
    if (all.empty()) break;
    const PachnerMove m = all[std::uniform_int_distribution<std::size_t>(0, all.size() - 1)(rng)];
    cur = apply_pachner(cur, m).first;
    moves.push_back(m);
  }
  return {cur, moves};
}

}  // namespace balpres
