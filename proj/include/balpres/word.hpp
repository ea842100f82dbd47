#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace balpres {

// A letter is a signed 1-based generator index: +(i+1) is generator i,
// -(i+1) its inverse. Generator names live in the enclosing context.
using Letter = int;
using Word = std::vector<Letter>;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised when an exact computation would exceed the configured bit budget.
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline Letter letter(std::size_t gen, int sign = 1) {
  return sign > 0 ? static_cast<Letter>(gen + 1) : -static_cast<Letter>(gen + 1);
}
inline std::size_t gen_of(Letter l) { return static_cast<std::size_t>(l > 0 ? l : -l) - 1; }

Word free_reduce(const Word& w);
Word cyclic_reduce(const Word& w);
bool is_freely_reduced(const Word& w);
Word inverse(const Word& w);
Word concat(const Word& a, const Word& b);
Word power(const Word& w, long k);
Word rotate(const Word& w, std::size_t k);

std::size_t letter_counts(const Word& w, std::size_t gen);
long exponent_sum(const Word& w, std::size_t gen);

// Minimal number of blocks a1...am of the freely reduced word with
// consecutive blocks in different factors; factor maps generator -> 1 or 2.
std::size_t syllable_length(const Word& w, const std::map<std::size_t, int>& factor);

// Index of the lexicographically least rotation.
std::size_t least_rotation(const std::vector<int>& s);

// Token syntax: g, g^-1, g^k separated by whitespace. Unknown names are
// appended to `names` when `extend` is true, otherwise rejected.
Word parse_word(std::string_view text, std::vector<std::string>& names, bool extend = false);
Word parse_word(std::string_view text, const std::vector<std::string>& names);
std::string format_word(const Word& w, const std::vector<std::string>& names);

bool valid_identifier(std::string_view s);

}  // namespace balpres
