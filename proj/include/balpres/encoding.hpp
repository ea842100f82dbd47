#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

#include "balpres/word.hpp"

namespace balpres {

// Block words over {y, yx}; a pattern bit of 1 means the block yx.
using BlockPattern = std::vector<bool>;

// v = y^i x^j in K. The x of a block followed by n-1 letters y contributes
// the binary digit in position n (2^(n-1)).
std::pair<unsigned long, mpz_class> v_encode(const Word& v, std::size_t x_gen = 0, std::size_t y_gen = 1);

BlockPattern parse_blocks(const Word& v, std::size_t x_gen = 0, std::size_t y_gen = 1);
Word block_word(const BlockPattern& p, std::size_t x_gen = 0, std::size_t y_gen = 1);
std::string block_string(const BlockPattern& p);
BlockPattern parse_block_string(const std::string& s);

// Inverse of v_encode: block k (from the left) is yx iff bit i-1-k of j is set.
// Requires 0 <= j < 2^i.
Word v_decode(unsigned long i, const mpz_class& j, std::size_t x_gen = 0, std::size_t y_gen = 1);

}  // namespace balpres
