#pragma once

#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "balpres/presentation.hpp"

namespace balpres {

// Insert gen^eps gen^-eps before position `pos` of relator `rel`.
struct Op1 {
  std::size_t rel, pos, gen;
  int eps;
};
// Delete the cancelling pair at positions pos, pos+1 of relator `rel`.
struct Op1inv {
  std::size_t rel, pos;
};
// Rotate relator `rel` left by `rot` letters.
struct Op2 {
  std::size_t rel, rot;
};
struct Op3 {
  std::size_t rel;
};
// a_i := a_i a_j, literally (no reduction), i != j.
struct Op4 {
  std::size_t i, j;
};
// New generator `name` with relator "name w"; w over existing generators, l(w) <= d-1.
struct Op5 {
  std::size_t d;
  std::string name;
  Word w;
};
// Remove generator `name` and its unique relator "name w".
struct Op5inv {
  std::size_t d;
  std::string name;
};
struct Op6 {};
struct Op6inv {
  std::size_t rel;
};

using TietzeMove = std::variant<Op1, Op1inv, Op2, Op3, Op4, Op5, Op5inv, Op6, Op6inv>;

struct InvalidMove : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct TietzeScript {
  std::string start;  // Fingerprint::hex() of the start presentation; empty skips the check
  std::size_t d = 2;
  std::vector<TietzeMove> moves;
};

struct ReplayError : std::runtime_error {
  enum class Kind { fingerprint, invalid_move };
  ReplayError(Kind k, std::size_t idx, const std::string& msg)
      : std::runtime_error(msg), kind(k), index(idx) {}
  Kind kind;
  std::size_t index;
};

void apply_move_inplace(Presentation& p, const TietzeMove& m);
Presentation apply_move(const Presentation& p, const TietzeMove& m);

// Moves taking apply_move(p, m) back to a presentation canonically equal to p.
std::vector<TietzeMove> invert_move(const Presentation& p, const TietzeMove& m);

Presentation replay(const Presentation& p, const TietzeScript& s);

std::string move_name(const TietzeMove& m);
std::string format_move(const TietzeMove& m, const std::vector<std::string>& gens);
// Generator names in the script refer to the presentation the move applies to.
std::string format_script(const TietzeScript& s, const Presentation& start);
TietzeScript parse_script(const std::string& text, const Presentation& start);

// Applies moves while recording them; the helpers below emit Tietze moves only.
class ScriptBuilder {
 public:
  explicit ScriptBuilder(Presentation p, std::size_t d = 2);

  void apply(const TietzeMove& m);
  const Presentation& current() const { return p_; }
  TietzeScript script() const { return s_; }
  std::size_t moves() const { return s_.moves.size(); }

  // Relator `def` literally equals g^-1 u, u = rel[pos, pos+len). Replaces that
  // occurrence of u in relator `rel` by g, restoring `def` and the rotation.
  void replace_subword(std::size_t rel, std::size_t pos, std::size_t len, std::size_t g,
                       std::size_t def);
  // Relator `def` equals g w with g absent from w and from nothing else but
  // other relators: substitutes g = w^-1 everywhere, freely reduces the touched
  // relators and removes g together with `def`.
  void eliminate_generator(std::size_t g, std::size_t def);
  void free_reduce_relator(std::size_t rel);
  // Op5 then Op3 and a rotation: appends relator g^-1 u for a new generator g.
  std::size_t define_abbreviation(const std::string& name, const Word& u);

 private:
  Presentation p_;
  TietzeScript s_;
};

}  // namespace balpres
