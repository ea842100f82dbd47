#pragma once

#include <optional>
#include <string>
#include <vector>

#include "balpres/presentation.hpp"

namespace balpres {

struct AreaBudget {
  std::size_t max_cells = 12;
  std::size_t max_len = 0;  // 0: l(w) + max_cells * longest relator
  std::size_t max_states = 2000000;
};

// One 2-cell: c = rotate(r or r^-1, offset) split as c1 c2 with |c1| = k;
// the occurrence of c1 at `pos` in the current word becomes c2^-1, then the
// word is freely reduced.
struct CellStep {
  std::size_t rel = 0;
  std::size_t offset = 0;
  bool inverted = false;
  std::size_t pos = 0;
  std::size_t k = 0;
};

enum class AreaStatus { found, cells_exhausted, length_pruned, state_limit };

struct AreaResult {
  std::optional<std::size_t> area;
  AreaStatus status = AreaStatus::cells_exhausted;
  std::size_t states = 0;
  std::vector<CellStep> trace;
  // True when absence proves area > max_cells (no state was cut by max_len or max_states).
  bool exhaustive = false;
};

std::string area_status_name(AreaStatus s);

// Minimal number of cells reducing w to the empty word within the budget.
// A word needing c more cells has length at most c times the longest relator,
// which prunes the search without losing minimality.
AreaResult area_upper(const Presentation& p, const Word& w, const AreaBudget& budget = {});

// Applies one step; throws InputError if the step does not match the word.
Word apply_cell(const Presentation& p, const Word& w, const CellStep& s);
// Replays a trace from w; true when it ends at the empty word.
bool replay_area_trace(const Presentation& p, const Word& w, const std::vector<CellStep>& trace);

std::string format_cell(const CellStep& s);

}  // namespace balpres
