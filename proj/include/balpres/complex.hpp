#pragma once

#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "balpres/presentation.hpp"
#include "balpres/search.hpp"

namespace balpres {

using Simplex = std::vector<int>;  // sorted vertex ids
using Edge = std::pair<int, int>;  // first < second

struct PachnerError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Stored by maximal simplices; faces are implicit.
struct SimplicialComplex {
  std::set<Simplex> facets;

  static SimplicialComplex from_facets(std::vector<Simplex> fs);
  static SimplicialComplex boundary_simplex(std::size_t n);  // boundary of the (n+1)-simplex

  int dim() const;
  bool pure() const;
  std::set<int> vertices() const;
  std::set<Simplex> faces(std::size_t k) const;  // all k-dimensional faces
  std::vector<std::size_t> f_vector() const;
  long euler_characteristic() const;
  std::set<Edge> edges() const;
  bool has_face(const Simplex& s) const;
  std::size_t top_count() const;  // number of dim()-simplices
  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;
};

// Replace the i facets A + (B - b), b in B, by the n+2-i facets B + (A - a).
// |A| = n+2-i, |B| = i; for i = 1 B is a single fresh vertex.
struct PachnerMove {
  std::size_t i = 0;
  Simplex A, B;
  bool fresh = false;
};

std::vector<PachnerMove> find_pachner_moves(const SimplicialComplex& t, std::size_t i);
// Validates the move and returns the new complex and the inverse move.
std::pair<SimplicialComplex, PachnerMove> apply_pachner(const SimplicialComplex& t, const PachnerMove& m);
std::string format_pachner(const PachnerMove& m);
PachnerMove parse_pachner(const std::string& line);

std::string format_complex(const SimplicialComplex& t);
SimplicialComplex parse_complex(const std::string& text);

struct SpanningTree {
  int root = 0;
  std::set<Edge> edges;
};

// Breadth-first tree of the 1-skeleton; throws InputError if disconnected.
SpanningTree spanning_tree(const SimplicialComplex& t, int root);
// Kruskal over `order` (then any remaining edges of the graph in sorted order).
SpanningTree kruskal_tree(const std::set<int>& vertices, const std::set<Edge>& graph,
                          const std::vector<Edge>& order, int root);
bool is_spanning_tree(const std::set<int>& vertices, const std::set<Edge>& graph, const std::set<Edge>& tree);

// Generators: non-tree edges, oriented low to high. Relation of a 2-face
// a < b < c: g_ab g_bc g_ac^-1 with tree edges dropped.
Presentation pi1_presentation(const SimplicialComplex& t, const SpanningTree& tree);

struct Exchange {
  Edge add, remove;
};
// Each step adds an edge of T2 and removes an edge of T1 - T2 from the cycle.
std::vector<Exchange> tree_exchange_path(const std::set<int>& vertices, const std::set<Edge>& graph,
                                         const SpanningTree& t1, const SpanningTree& t2);

// Generator circles of 3 edges through vertex 0; each relator polygon gets a
// ring of 3l(r) fresh vertices joined to its boundary path by a collar and
// coned from a fresh apex: 9 l(r) triangles per relator.
SimplicialComplex presentation_complex(const Presentation& p);

// Loops subdivided into triangles, extra parallel edges into digons, then
// each fundamental cycle of a breadth-first tree coned from the meeting vertex.
SimplicialComplex fill_cycle_basis(std::size_t vertices, const std::vector<Edge>& edges, int root = 0);
std::size_t graph_diameter(std::size_t vertices, const std::vector<Edge>& edges);

struct LocalMoveResult {
  Presentation before, after;
  SearchResult search;
};
// Trees share the edges the move keeps; distance by exact search, then
// a best-first certificate if the exact search runs out of budget.
LocalMoveResult local_move_distance(const SimplicialComplex& t, const PachnerMove& m, const SearchOptions& opt);

// Random valid move sequence; returns the final complex and the moves applied.
std::pair<SimplicialComplex, std::vector<PachnerMove>> random_pachner_walk(const SimplicialComplex& t,
                                                                           std::size_t steps,
                                                                           std::mt19937_64& rng);

}  // namespace balpres
