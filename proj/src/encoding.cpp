#include "balpres/encoding.hpp"

namespace balpres {

BlockPattern parse_blocks(const Word& v, std::size_t xg, std::size_t yg) {
  BlockPattern p;
  const Letter x = letter(xg), y = letter(yg);
  std::size_t i = 0;
  while (i < v.size()) {
    if (v[i] != y) throw InputError("malformed v: expected y at position " + std::to_string(i));
    ++i;
    bool has_x = i < v.size() && v[i] == x;
    if (has_x) ++i;
    p.push_back(has_x);
  }
  return p;
}

std::pair<unsigned long, mpz_class> v_encode(const Word& v, std::size_t xg, std::size_t yg) {
  BlockPattern p = parse_blocks(v, xg, yg);
  mpz_class j = 0;
  const std::size_t b = p.size();
  for (std::size_t k = 0; k < b; ++k)
    if (p[k]) mpz_setbit(j.get_mpz_t(), b - 1 - k);
  return {static_cast<unsigned long>(b), j};
}

Word block_word(const BlockPattern& p, std::size_t xg, std::size_t yg) {
  Word w;
  for (bool bit : p) {
    w.push_back(letter(yg));
    if (bit) w.push_back(letter(xg));
  }
  return w;
}

std::string block_string(const BlockPattern& p) {
  std::string s;
  for (bool bit : p) s += bit ? "yx" : "y";
  return s;
}

BlockPattern parse_block_string(const std::string& s) {
  Word w;
  for (char c : s) {
    if (c == 'x')
      w.push_back(letter(0));
    else if (c == 'y')
      w.push_back(letter(1));
    else if (c != ' ')
      throw InputError("malformed v: unexpected character '" + std::string(1, c) + "'");
  }
  return parse_blocks(w);
}

Word v_decode(unsigned long i, const mpz_class& j, std::size_t xg, std::size_t yg) {
  if (j < 0 || mpz_sizeinbase(j.get_mpz_t(), 2) > i + (j == 0 ? 1 : 0))
    throw InputError("v_decode: j out of range for i");
  BlockPattern p(i);
  for (unsigned long k = 0; k < i; ++k) p[k] = mpz_tstbit(j.get_mpz_t(), i - 1 - k) != 0;
  return block_word(p, xg, yg);
}

}  // namespace balpres
