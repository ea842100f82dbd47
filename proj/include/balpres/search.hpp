#pragma once

#include <optional>
#include <string>
#include <vector>

#include "balpres/presentation.hpp"

namespace balpres {

// Search runs on canonical classes: generator renaming, relator order,
// cyclic rotation and cyclic reduction are free, so Op1 and Op2 act trivially
// and the remaining moves are Op3, Op4 (with any rotations of both relators),
// Op5 (d-bounded), Op5inv, Op6, Op6inv.
struct SearchOptions {
  std::size_t d = 2;
  std::size_t max_depth = 6;
  std::size_t max_states = 200000;
  bool full_op5 = false;          // every reduced word of length <= d-1, not just relator subwords
  std::size_t max_rel_len = 16;   // neighbours with longer relators are skipped
  std::size_t max_gens = 12;
  double weight = 2.0;            // best-first priority: depth + weight * heuristic
};

enum class SearchStatus { found, depth_exhausted, state_limit };

struct SearchResult {
  std::optional<std::size_t> distance;
  SearchStatus status = SearchStatus::depth_exhausted;
  bool exact = false;  // true only for breadth-first results
  std::size_t states = 0;
  std::vector<std::string> moves;          // class-level move descriptions along the path
  std::vector<Presentation> path;          // canonical representatives, start..target
};

std::string status_name(SearchStatus s);

struct Neighbour {
  Presentation p;
  std::string move;
};
std::vector<Neighbour> class_neighbours(const Presentation& p, const SearchOptions& opt);

// Exact breadth-first distance between canonical classes.
SearchResult tietze_distance(const Presentation& from, const Presentation& to, const SearchOptions& opt);

// Best-first search; a found path certifies distance <= its length (not exact).
SearchResult tietze_path(const Presentation& from, const Presentation& to, const SearchOptions& opt);

// Exact search first, then best-first when the exact search runs out of budget.
SearchResult tietze_distance_or_bound(const Presentation& from, const Presentation& to,
                                      const SearchOptions& opt);

// Checks each step of a result path is a single class move.
bool verify_path(const SearchResult& r, const SearchOptions& opt);

}  // namespace balpres
