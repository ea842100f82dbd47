#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "balpres/word.hpp"

namespace balpres {

struct Presentation {
  std::vector<std::string> gens;
  std::vector<Word> rels;

  std::size_t length() const;  // sum of relator lengths plus number of generators
  bool balanced() const { return gens.size() == rels.size(); }
  std::size_t gen_index(const std::string& name) const;  // throws InputError
  void validate() const;                                 // letters reference listed generators

  friend bool operator==(const Presentation&, const Presentation&) = default;
};

// Text format: "gens: a, b, c" followed by one "rel: <word>" line per relator.
// An empty relator is written "rel:" with nothing after the colon.
Presentation parse_presentation(const std::string& text);
std::string format_presentation(const Presentation& p);
Presentation read_presentation_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);
std::string read_text_file(const std::string& path);

// Exact canonical data: generator count plus sorted relators, each cyclically
// reduced and rotated to its least form, minimized over generator renamings.
// Letters are keyed g -> 2g, g^-1 -> 2g+1.
struct Fingerprint {
  std::size_t num_gens = 0;
  std::vector<std::vector<int>> rels;

  auto operator<=>(const Fingerprint&) const = default;
  bool operator==(const Fingerprint&) const = default;
  std::string str() const;
  std::uint64_t digest() const;  // FNV-1a of str(), for manifests only
  std::string hex() const;
};

Fingerprint canonical_form(const Presentation& p);

// Presentation rebuilt from canonical data, generators named a0, a1, ...
Presentation from_fingerprint(const Fingerprint& f);

}  // namespace balpres
