#include "balpres/word.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

namespace balpres {

Word free_reduce(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (Letter l : w) {
    if (!out.empty() && out.back() == -l)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

Word cyclic_reduce(const Word& w) {
  Word r = free_reduce(w);
  std::size_t i = 0, j = r.size();
  while (j - i >= 2 && r[i] == -r[j - 1]) {
    ++i;
    --j;
  }
  return Word(r.begin() + static_cast<long>(i), r.begin() + static_cast<long>(j));
}

bool is_freely_reduced(const Word& w) {
  for (std::size_t i = 1; i < w.size(); ++i)
    if (w[i] == -w[i - 1]) return false;
  return true;
}

Word inverse(const Word& w) {
  Word r(w.rbegin(), w.rend());
  for (auto& l : r) l = -l;
  return r;
}

Word concat(const Word& a, const Word& b) {
  Word r = a;
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

Word power(const Word& w, long k) {
  Word base = k < 0 ? inverse(w) : w;
  Word r;
  for (long i = 0; i < (k < 0 ? -k : k); ++i) r.insert(r.end(), base.begin(), base.end());
  return r;
}

Word rotate(const Word& w, std::size_t k) {
  if (w.empty()) return w;
  Word r = w;
  std::rotate(r.begin(), r.begin() + static_cast<long>(k % w.size()), r.end());
  return r;
}

std::size_t letter_counts(const Word& w, std::size_t gen) {
  return static_cast<std::size_t>(
      std::count_if(w.begin(), w.end(), [gen](Letter l) { return gen_of(l) == gen; }));
}

long exponent_sum(const Word& w, std::size_t gen) {
  long s = 0;
  for (Letter l : w)
    if (gen_of(l) == gen) s += l > 0 ? 1 : -1;
  return s;
}

std::size_t syllable_length(const Word& w, const std::map<std::size_t, int>& factor) {
  Word r = free_reduce(w);
  std::size_t blocks = 0;
  int prev = 0;
  for (Letter l : r) {
    auto it = factor.find(gen_of(l));
    if (it == factor.end() || (it->second != 1 && it->second != 2))
      throw InputError("syllable_length: generator " + std::to_string(gen_of(l)) +
                       " has no factor assignment");
    if (it->second != prev) ++blocks;
    prev = it->second;
  }
  return blocks;
}

std::size_t least_rotation(const std::vector<int>& s) {
  // Two-pointer minimum expression; O(n).
  const std::size_t n = s.size();
  std::size_t i = 0, j = 1, k = 0;
  while (i < n && j < n && k < n) {
    int a = s[(i + k) % n], b = s[(j + k) % n];
    if (a == b) {
      ++k;
      continue;
    }
    if (a > b)
      i += k + 1;
    else
      j += k + 1;
    if (i == j) ++j;
    k = 0;
  }
  return n == 0 ? 0 : std::min(i, j);
}

bool valid_identifier(std::string_view s) {
  if (s.empty()) return false;
  auto head = static_cast<unsigned char>(s[0]);
  if (!(std::isalpha(head) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

Word parse_word(std::string_view text, std::vector<std::string>& names, bool extend) {
  Word w;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    std::string name = tok;
    long k = 1;
    if (auto caret = tok.find('^'); caret != std::string::npos) {
      name = tok.substr(0, caret);
      std::string_view e(tok.data() + caret + 1, tok.size() - caret - 1);
      auto [p, ec] = std::from_chars(e.data(), e.data() + e.size(), k);
      if (ec != std::errc() || p != e.data() + e.size() || k == 0)
        throw InputError("bad exponent in token '" + tok + "'");
    }
    if (!valid_identifier(name)) throw InputError("bad generator name '" + name + "'");
    auto it = std::find(names.begin(), names.end(), name);
    std::size_t g;
    if (it == names.end()) {
      if (!extend) throw InputError("unknown generator '" + name + "'");
      names.push_back(name);
      g = names.size() - 1;
    } else {
      g = static_cast<std::size_t>(it - names.begin());
    }
    Letter l = letter(g, k > 0 ? 1 : -1);
    for (long i = 0; i < (k > 0 ? k : -k); ++i) w.push_back(l);
  }
  return w;
}

Word parse_word(std::string_view text, const std::vector<std::string>& names) {
  auto copy = names;
  return parse_word(text, copy, false);
}

std::string format_word(const Word& w, const std::vector<std::string>& names) {
  std::string out;
  std::size_t i = 0;
  while (i < w.size()) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    long run = static_cast<long>(j - i);
    if (!out.empty()) out += ' ';
    std::size_t g = gen_of(w[i]);
    out += g < names.size() ? names[g] : "g" + std::to_string(g);
    long e = w[i] > 0 ? run : -run;
    if (e != 1) out += "^" + std::to_string(e);
    i = j;
  }
  return out;
}

}  // namespace balpres
