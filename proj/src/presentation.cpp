#include "balpres/presentation.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

namespace balpres {

std::size_t Presentation::length() const {
  std::size_t n = gens.size();
  for (const auto& r : rels) n += r.size();
  return n;
}

std::size_t Presentation::gen_index(const std::string& name) const {
  auto it = std::find(gens.begin(), gens.end(), name);
  if (it == gens.end()) throw InputError("unknown generator '" + name + "'");
  return static_cast<std::size_t>(it - gens.begin());
}

void Presentation::validate() const {
  for (std::size_t i = 0; i < rels.size(); ++i)
    for (Letter l : rels[i])
      if (l == 0 || gen_of(l) >= gens.size())
        throw InputError("relator " + std::to_string(i) + " references an unlisted generator");
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (!valid_identifier(gens[i])) throw InputError("bad generator name '" + gens[i] + "'");
    for (std::size_t j = 0; j < i; ++j)
      if (gens[i] == gens[j]) throw InputError("duplicate generator '" + gens[i] + "'");
  }
}

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

Presentation parse_presentation(const std::string& text) {
  Presentation p;
  bool have_gens = false;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    if (t.rfind("gens:", 0) == 0) {
      if (have_gens) throw InputError("duplicate gens line");
      have_gens = true;
      std::string rest = t.substr(5);
      std::stringstream ss(rest);
      std::string name;
      while (std::getline(ss, name, ',')) {
        name = trim(name);
        if (name.empty()) continue;
        p.gens.push_back(name);
      }
    } else if (t.rfind("rel:", 0) == 0) {
      if (!have_gens) throw InputError("rel line before gens line");
      p.rels.push_back(parse_word(t.substr(4), p.gens));
    } else {
      throw InputError("unrecognized line: " + t);
    }
  }
  if (!have_gens) throw InputError("missing gens line");
  p.validate();
  return p;
}

std::string format_presentation(const Presentation& p) {
  std::string out = "gens:";
  for (std::size_t i = 0; i < p.gens.size(); ++i) out += (i ? ", " : " ") + p.gens[i];
  out += '\n';
  for (const auto& r : p.rels) {
    std::string w = format_word(r, p.gens);
    out += w.empty() ? "rel:\n" : "rel: " + w + "\n";
  }
  return out;
}

std::string read_text_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw InputError("cannot open " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw InputError("cannot write " + path);
  f << text;
}

Presentation read_presentation_file(const std::string& path) {
  return parse_presentation(read_text_file(path));
}

std::string Fingerprint::str() const {
  std::string s = std::to_string(num_gens) + "|";
  for (std::size_t i = 0; i < rels.size(); ++i) {
    if (i) s += ';';
    for (std::size_t j = 0; j < rels[i].size(); ++j) {
      if (j) s += ',';
      s += std::to_string(rels[i][j]);
    }
  }
  return s;
}

std::uint64_t Fingerprint::digest() const {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : str()) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string Fingerprint::hex() const {
  std::ostringstream os;
  os << std::hex;
  os.width(16);
  os.fill('0');
  os << digest();
  return os.str();
}

namespace {

constexpr std::size_t kMaxRenamings = 40320;

using Signature = std::vector<std::vector<long>>;

std::vector<Signature> signatures(const std::vector<Word>& rels, std::size_t n) {
  std::vector<Signature> sig(n);
  for (const auto& r : rels) {
    std::vector<long> pos(n, 0), neg(n, 0);
    for (Letter l : r) (l > 0 ? pos : neg)[gen_of(l)]++;
    for (std::size_t g = 0; g < n; ++g)
      if (pos[g] || neg[g]) sig[g].push_back({static_cast<long>(r.size()), pos[g], neg[g]});
  }
  for (auto& s : sig) std::sort(s.begin(), s.end());
  return sig;
}

// One refinement round: append sorted signatures of co-occurring generators.
std::vector<Signature> refine(const std::vector<Word>& rels, const std::vector<Signature>& sig) {
  std::size_t n = sig.size();
  std::vector<long> rank(n);
  {
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](auto a, auto b) { return sig[a] < sig[b]; });
    long cls = 0;
    for (std::size_t k = 0; k < n; ++k) {
      if (k && sig[order[k]] != sig[order[k - 1]]) ++cls;
      rank[order[k]] = cls;
    }
  }
  std::vector<Signature> out = sig;
  for (const auto& r : rels) {
    for (std::size_t i = 0; i < r.size(); ++i) {
      std::vector<long> ctx;
      ctx.push_back(-1 - static_cast<long>(r.size()));
      ctx.push_back(r[i] > 0 ? 1 : -1);
      // Local window keeps long relators cheap.
      const std::size_t reach = std::min<std::size_t>(r.size() - 1, 3);
      for (std::size_t k = 1; k <= reach; ++k) {
        Letter l = r[(i + k) % r.size()];
        long same = (l > 0) == (r[i] > 0) ? 1 : -1;
        ctx.push_back(rank[gen_of(l)] * 2 + (same > 0 ? 0 : 1));
      }
      out[gen_of(r[i])].push_back(ctx);
    }
  }
  for (auto& s : out) std::sort(s.begin(), s.end());
  return out;
}

}  // namespace

Fingerprint canonical_form(const Presentation& p) {
  const std::size_t n = p.gens.size();
  std::vector<Word> rels;
  rels.reserve(p.rels.size());
  for (const auto& r : p.rels) rels.push_back(cyclic_reduce(r));

  auto sig = signatures(rels, n);
  auto group_product = [&](const std::vector<Signature>& s) {
    std::map<Signature, std::size_t> sizes;
    for (std::size_t g = 0; g < n; ++g)
      if (!s[g].empty()) sizes[s[g]]++;
    std::size_t prod = 1;
    for (auto& [k, c] : sizes)
      for (std::size_t i = 2; i <= c; ++i) {
        prod *= i;
        if (prod > kMaxRenamings) return prod;
      }
    return prod;
  };
  if (group_product(sig) > 1) {
    auto r1 = refine(rels, sig);
    if (group_product(r1) < group_product(sig)) sig = r1;
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return sig[a] < sig[b]; });
  // Groups of equal nonempty signature get permuted; unused generators are interchangeable.
  std::vector<std::pair<std::size_t, std::size_t>> groups;
  for (std::size_t k = 0; k < n;) {
    std::size_t e = k;
    while (e < n && sig[order[e]] == sig[order[k]]) ++e;
    if (!sig[order[k]].empty() && e - k > 1) groups.push_back({k, e});
    k = e;
  }

  Fingerprint best;
  bool have = false;
  std::size_t tried = 0;
  std::vector<int> newidx(n);
  auto evaluate = [&]() {
    for (std::size_t k = 0; k < n; ++k) newidx[order[k]] = static_cast<int>(k);
    Fingerprint f;
    f.num_gens = n;
    f.rels.reserve(rels.size());
    for (const auto& r : rels) {
      std::vector<int> key(r.size());
      for (std::size_t i = 0; i < r.size(); ++i) key[i] = 2 * newidx[gen_of(r[i])] + (r[i] < 0 ? 1 : 0);
      std::size_t s = least_rotation(key);
      std::rotate(key.begin(), key.begin() + static_cast<long>(s), key.end());
      f.rels.push_back(std::move(key));
    }
    std::sort(f.rels.begin(), f.rels.end());
    if (!have || f < best) {
      best = std::move(f);
      have = true;
    }
  };

  // Odometer over per-group permutations.
  std::function<void(std::size_t)> rec = [&](std::size_t gi) {
    if (tried >= kMaxRenamings) return;
    if (gi == groups.size()) {
      ++tried;
      evaluate();
      return;
    }
    auto [b, e] = groups[gi];
    std::sort(order.begin() + static_cast<long>(b), order.begin() + static_cast<long>(e));
    do {
      rec(gi + 1);
    } while (tried < kMaxRenamings &&
             std::next_permutation(order.begin() + static_cast<long>(b), order.begin() + static_cast<long>(e)));
  };
  rec(0);
  return best;
}

Presentation from_fingerprint(const Fingerprint& f) {
  Presentation p;
  for (std::size_t i = 0; i < f.num_gens; ++i) p.gens.push_back("a" + std::to_string(i));
  for (const auto& r : f.rels) {
    Word w;
    for (int k : r) w.push_back(letter(static_cast<std::size_t>(k / 2), k % 2 ? -1 : 1));
    p.rels.push_back(std::move(w));
  }
  return p;
}

}  // namespace balpres
