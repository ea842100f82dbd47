#include "balpres/tietze.hpp"

#include <algorithm>
#include <sstream>

namespace balpres {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void need(bool ok, const std::string& what) {
  if (!ok) throw InvalidMove(what);
}

void check_rel(const Presentation& p, std::size_t i, const char* op) {
  need(i < p.rels.size(), std::string(op) + ": relator index " + std::to_string(i) + " out of range");
}

std::size_t move_d(const TietzeMove& m) {
  if (auto* a = std::get_if<Op5>(&m)) return a->d;
  if (auto* b = std::get_if<Op5inv>(&m)) return b->d;
  return 0;
}

}  // namespace

void apply_move_inplace(Presentation& p, const TietzeMove& m) {
  std::visit(
      overloaded{
          [&](const Op1& o) {
            check_rel(p, o.rel, "Op1");
            auto& r = p.rels[o.rel];
            need(o.pos <= r.size(), "Op1: position beyond relator end");
            need(o.gen < p.gens.size(), "Op1: generator index out of range");
            need(o.eps == 1 || o.eps == -1, "Op1: eps must be +1 or -1");
            Letter l = letter(o.gen, o.eps);
            r.insert(r.begin() + static_cast<long>(o.pos), {l, -l});
          },
          [&](const Op1inv& o) {
            check_rel(p, o.rel, "Op1inv");
            auto& r = p.rels[o.rel];
            need(o.pos + 1 < r.size(), "Op1inv: position beyond relator end");
            need(r[o.pos] == -r[o.pos + 1], "Op1inv: letters at position do not cancel");
            r.erase(r.begin() + static_cast<long>(o.pos), r.begin() + static_cast<long>(o.pos) + 2);
          },
          [&](const Op2& o) {
            check_rel(p, o.rel, "Op2");
            auto& r = p.rels[o.rel];
            need(o.rot < r.size() || (r.empty() && o.rot == 0), "Op2: rotation out of range");
            std::rotate(r.begin(), r.begin() + static_cast<long>(o.rot), r.end());
          },
          [&](const Op3& o) {
            check_rel(p, o.rel, "Op3");
            p.rels[o.rel] = inverse(p.rels[o.rel]);
          },
          [&](const Op4& o) {
            check_rel(p, o.i, "Op4");
            check_rel(p, o.j, "Op4");
            need(o.i != o.j, "Op4: requires i != j");
            Word aj = p.rels[o.j];
            p.rels[o.i].insert(p.rels[o.i].end(), aj.begin(), aj.end());
          },
          [&](const Op5& o) {
            need(o.d >= 1 && o.w.size() + 1 <= o.d, "Op5: word length exceeds d-1");
            need(valid_identifier(o.name), "Op5: bad generator name '" + o.name + "'");
            need(std::find(p.gens.begin(), p.gens.end(), o.name) == p.gens.end(),
                 "Op5: generator '" + o.name + "' already exists");
            for (Letter l : o.w) need(l != 0 && gen_of(l) < p.gens.size(), "Op5: word uses unknown generator");
            p.gens.push_back(o.name);
            Word r{letter(p.gens.size() - 1)};
            r.insert(r.end(), o.w.begin(), o.w.end());
            p.rels.push_back(std::move(r));
          },
          [&](const Op5inv& o) {
            auto it = std::find(p.gens.begin(), p.gens.end(), o.name);
            need(it != p.gens.end(), "Op5inv: unknown generator '" + o.name + "'");
            std::size_t g = static_cast<std::size_t>(it - p.gens.begin());
            std::size_t found = p.rels.size(), total = 0;
            for (std::size_t i = 0; i < p.rels.size(); ++i) {
              std::size_t c = letter_counts(p.rels[i], g);
              if (c) found = i;
              total += c;
            }
            need(total == 1, "Op5inv: generator must occur exactly once");
            const Word& r = p.rels[found];
            need(r.front() == letter(g), "Op5inv: relator must have the form g w");
            need(r.size() <= o.d, "Op5inv: defining word longer than d-1");
            p.rels.erase(p.rels.begin() + static_cast<long>(found));
            p.gens.erase(it);
            for (auto& rel : p.rels)
              for (auto& l : rel)
                if (gen_of(l) > g) l += l > 0 ? -1 : 1;
          },
          [&](const Op6&) { p.rels.emplace_back(); },
          [&](const Op6inv& o) {
            check_rel(p, o.rel, "Op6inv");
            need(p.rels[o.rel].empty(), "Op6inv: relator is not empty");
            p.rels.erase(p.rels.begin() + static_cast<long>(o.rel));
          },
      },
      m);
}

Presentation apply_move(const Presentation& p, const TietzeMove& m) {
  Presentation q = p;
  apply_move_inplace(q, m);
  return q;
}

std::vector<TietzeMove> invert_move(const Presentation& p, const TietzeMove& m) {
  return std::visit(
      overloaded{
          [&](const Op1& o) -> std::vector<TietzeMove> { return {Op1inv{o.rel, o.pos}}; },
          [&](const Op1inv& o) -> std::vector<TietzeMove> {
            Letter l = p.rels.at(o.rel).at(o.pos);
            return {Op1{o.rel, o.pos, gen_of(l), l > 0 ? 1 : -1}};
          },
          [&](const Op2& o) -> std::vector<TietzeMove> {
            std::size_t n = p.rels.at(o.rel).size();
            return {Op2{o.rel, n == 0 ? 0 : (n - o.rot) % n}};
          },
          [&](const Op3& o) -> std::vector<TietzeMove> { return {o}; },
          [&](const Op4& o) -> std::vector<TietzeMove> {
            std::size_t li = p.rels.at(o.i).size(), lj = p.rels.at(o.j).size();
            std::vector<TietzeMove> out{Op3{o.j}, Op4{o.i, o.j}};
            for (std::size_t k = 0; k < lj; ++k) out.push_back(Op1inv{o.i, li + lj - 1 - k});
            out.push_back(Op3{o.j});
            return out;
          },
          [&](const Op5& o) -> std::vector<TietzeMove> { return {Op5inv{o.d, o.name}}; },
          [&](const Op5inv& o) -> std::vector<TietzeMove> {
            std::size_t g = p.gen_index(o.name);
            for (const auto& r : p.rels)
              if (!r.empty() && r.front() == letter(g)) {
                Word w(r.begin() + 1, r.end());
                for (auto& l : w)
                  if (gen_of(l) > g) l += l > 0 ? -1 : 1;
                return {Op5{o.d, o.name, w}};
              }
            throw InvalidMove("invert Op5inv: defining relator not found");
          },
          [&](const Op6&) -> std::vector<TietzeMove> { return {Op6inv{p.rels.size()}}; },
          [&](const Op6inv&) -> std::vector<TietzeMove> { return {Op6{}}; },
      },
      m);
}

Presentation replay(const Presentation& p, const TietzeScript& s) {
  if (!s.start.empty() && canonical_form(p).hex() != s.start)
    throw ReplayError(ReplayError::Kind::fingerprint, 0,
                      "start fingerprint mismatch: script expects " + s.start);
  Presentation q = p;
  for (std::size_t i = 0; i < s.moves.size(); ++i) {
    try {
      std::size_t d = move_d(s.moves[i]);
      if (d > s.d) throw InvalidMove("move uses d=" + std::to_string(d) + " above script d");
      apply_move_inplace(q, s.moves[i]);
    } catch (const InvalidMove& e) {
      throw ReplayError(ReplayError::Kind::invalid_move, i,
                        "move " + std::to_string(i) + " (" + move_name(s.moves[i]) + "): " + e.what());
    }
  }
  return q;
}

std::string move_name(const TietzeMove& m) {
  static const char* names[] = {"OP1", "OP1INV", "OP2", "OP3", "OP4", "OP5", "OP5INV", "OP6", "OP6INV"};
  return names[m.index()];
}

std::string format_move(const TietzeMove& m, const std::vector<std::string>& gens) {
  std::ostringstream os;
  os << move_name(m);
  std::visit(overloaded{
                 [&](const Op1& o) { os << ' ' << o.rel << ' ' << o.pos << ' ' << gens.at(o.gen) << ' ' << o.eps; },
                 [&](const Op1inv& o) { os << ' ' << o.rel << ' ' << o.pos; },
                 [&](const Op2& o) { os << ' ' << o.rel << ' ' << o.rot; },
                 [&](const Op3& o) { os << ' ' << o.rel; },
                 [&](const Op4& o) { os << ' ' << o.i << ' ' << o.j; },
                 [&](const Op5& o) {
                   os << ' ' << o.d << ' ' << o.name;
                   std::string w = format_word(o.w, gens);
                   if (!w.empty()) os << ' ' << w;
                 },
                 [&](const Op5inv& o) { os << ' ' << o.d << ' ' << o.name; },
                 [&](const Op6&) {},
                 [&](const Op6inv& o) { os << ' ' << o.rel; },
             },
             m);
  return os.str();
}

std::string format_script(const TietzeScript& s, const Presentation& start) {
  std::string out = "start: " + s.start + "\nd: " + std::to_string(s.d) + "\n";
  Presentation cur = start;
  for (const auto& m : s.moves) {
    out += format_move(m, cur.gens) + "\n";
    apply_move_inplace(cur, m);
  }
  return out;
}

namespace {

std::size_t to_index(const std::string& tok, std::size_t line) {
  std::size_t pos = 0;
  unsigned long v = 0;
  try {
    v = std::stoul(tok, &pos);
  } catch (...) {
    pos = 0;
  }
  if (pos != tok.size() || tok.empty() || tok[0] == '-')
    throw InputError("script line " + std::to_string(line) + ": expected a non-negative integer, got '" + tok + "'");
  return v;
}

}  // namespace

TietzeScript parse_script(const std::string& text, const Presentation& start) {
  TietzeScript s;
  s.d = 0;
  bool have_d = false;
  Presentation cur = start;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  bool tracking = true;  // generator names resolve against the replayed state
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string op;
    if (!(ls >> op) || op[0] == '#') continue;
    std::vector<std::string> args;
    for (std::string a; ls >> a;) args.push_back(a);
    auto want = [&](std::size_t n) {
      if (args.size() != n)
        throw InputError("script line " + std::to_string(lineno) + ": " + op + " takes " + std::to_string(n) +
                         " arguments");
    };
    if (op == "start:") {
      s.start = args.empty() ? "" : args[0];
      continue;
    }
    if (op == "d:") {
      want(1);
      s.d = to_index(args[0], lineno);
      have_d = true;
      continue;
    }
    TietzeMove m;
    if (op == "OP1") {
      want(4);
      std::size_t g = 0;
      auto it = std::find(cur.gens.begin(), cur.gens.end(), args[2]);
      if (it == cur.gens.end()) throw InputError("script line " + std::to_string(lineno) + ": unknown generator");
      g = static_cast<std::size_t>(it - cur.gens.begin());
      int eps = args[3] == "1" || args[3] == "+1" ? 1 : args[3] == "-1" ? -1 : 0;
      if (!eps) throw InputError("script line " + std::to_string(lineno) + ": eps must be 1 or -1");
      m = Op1{to_index(args[0], lineno), to_index(args[1], lineno), g, eps};
    } else if (op == "OP1INV") {
      want(2);
      m = Op1inv{to_index(args[0], lineno), to_index(args[1], lineno)};
    } else if (op == "OP2") {
      want(2);
      m = Op2{to_index(args[0], lineno), to_index(args[1], lineno)};
    } else if (op == "OP3") {
      want(1);
      m = Op3{to_index(args[0], lineno)};
    } else if (op == "OP4") {
      want(2);
      m = Op4{to_index(args[0], lineno), to_index(args[1], lineno)};
    } else if (op == "OP5") {
      if (args.size() < 2) throw InputError("script line " + std::to_string(lineno) + ": OP5 needs d and a name");
      std::string rest;
      for (std::size_t k = 2; k < args.size(); ++k) rest += args[k] + " ";
      m = Op5{to_index(args[0], lineno), args[1], parse_word(rest, cur.gens)};
    } else if (op == "OP5INV") {
      want(2);
      m = Op5inv{to_index(args[0], lineno), args[1]};
    } else if (op == "OP6") {
      want(0);
      m = Op6{};
    } else if (op == "OP6INV") {
      want(1);
      m = Op6inv{to_index(args[0], lineno)};
    } else {
      throw InputError("script line " + std::to_string(lineno) + ": unknown move '" + op + "'");
    }
    s.moves.push_back(m);
    if (tracking) {
      try {
        apply_move_inplace(cur, m);
      } catch (const InvalidMove&) {
        // Later names cannot be resolved reliably; replay reports the failure.
        tracking = false;
      }
    }
  }
  if (!have_d) {
    s.d = 2;
    for (const auto& m : s.moves) s.d = std::max(s.d, move_d(m));
  }
  return s;
}

ScriptBuilder::ScriptBuilder(Presentation p, std::size_t d) : p_(std::move(p)) {
  s_.start = canonical_form(p_).hex();
  s_.d = d;
}

void ScriptBuilder::apply(const TietzeMove& m) {
  s_.d = std::max(s_.d, move_d(m));
  apply_move_inplace(p_, m);
  s_.moves.push_back(m);
}

void ScriptBuilder::replace_subword(std::size_t rel, std::size_t pos, std::size_t len, std::size_t g,
                                    std::size_t def) {
  const std::size_t L = p_.rels.at(rel).size();
  if (pos + len > L) throw InvalidMove("replace_subword: range outside relator");
  const std::size_t tail = L - pos - len;  // |B| in A u B
  if ((pos + len) % L) apply(Op2{rel, (pos + len) % L});
  apply(Op3{def});
  apply(Op4{rel, def});
  for (std::size_t k = 0; k < len; ++k) apply(Op1inv{rel, L - 1 - k});
  apply(Op3{def});
  const std::size_t nl = p_.rels[rel].size();
  if (tail % nl) apply(Op2{rel, tail % nl});
  (void)g;
}

void ScriptBuilder::free_reduce_relator(std::size_t rel) {
  for (;;) {
    const auto& r = p_.rels.at(rel);
    std::size_t i = 0;
    while (i + 1 < r.size() && r[i] != -r[i + 1]) ++i;
    if (i + 1 >= r.size()) return;
    apply(Op1inv{rel, i});
  }
}

void ScriptBuilder::eliminate_generator(std::size_t g, std::size_t def) {
  const Word& d = p_.rels.at(def);
  if (d.empty() || d.front() != letter(g) || letter_counts(d, g) != 1)
    throw InvalidMove("eliminate_generator: defining relator must be g w");
  const std::size_t wl = d.size() - 1;
  for (std::size_t r = 0; r < p_.rels.size(); ++r) {
    if (r == def) continue;
    bool touched = false;
    for (;;) {
      const auto& rel = p_.rels[r];
      auto it = std::find_if(rel.begin(), rel.end(), [g](Letter l) { return gen_of(l) == g; });
      if (it == rel.end()) break;
      touched = true;
      const std::size_t L = rel.size();
      const std::size_t pos = static_cast<std::size_t>(it - rel.begin());
      const bool positive = *it > 0;
      const std::size_t tail = L - pos - 1;
      if ((pos + 1) % L) apply(Op2{r, (pos + 1) % L});
      if (positive) {
        // B A g * g^-1 w^-1
        apply(Op3{def});
        if (wl) apply(Op2{def, wl});
        apply(Op4{r, def});
        apply(Op1inv{r, L - 1});
        if (wl) apply(Op2{def, 1});
        apply(Op3{def});
      } else {
        // B A g^-1 * g w
        apply(Op4{r, def});
        apply(Op1inv{r, L - 1});
      }
      const std::size_t nl = p_.rels[r].size();
      if (nl && tail % nl) apply(Op2{r, tail % nl});
    }
    if (touched) free_reduce_relator(r);
  }
  apply(Op5inv{wl + 1, p_.gens.at(g)});
}

std::size_t ScriptBuilder::define_abbreviation(const std::string& name, const Word& u) {
  apply(Op5{u.size() + 1, name, inverse(u)});
  const std::size_t def = p_.rels.size() - 1;
  apply(Op3{def});
  if (!u.empty()) apply(Op2{def, u.size()});
  return def;
}

}  // namespace balpres
