// balpres: command-line front end for the presentation, diagram, rewriting
// and complex modules. Exit codes: 0 ok, 1 usage or unexpected error,
// 2 failed assertion or invalid move, 3 malformed input or fingerprint
// mismatch, 4 resource budget exceeded.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "balpres/abelian.hpp"
#include "balpres/area.hpp"
#include "balpres/britton.hpp"
#include "balpres/complex.hpp"
#include "balpres/family.hpp"
#include "balpres/rewriting.hpp"
#include "balpres/search.hpp"

using namespace balpres;
using json = nlohmann::json;

namespace {

std::size_t bit_budget_from_env() {
  if (const char* s = std::getenv("BALPRES_BIT_BUDGET")) {
    try {
      return std::stoull(s);
    } catch (const std::exception&) {
      throw InputError("BALPRES_BIT_BUDGET must be a positive integer");
    }
  }
  return kDefaultBitBudget;
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-")
    std::cout << text;
  else
    write_text_file(path, text);
}

std::string json_text(const json& j) { return j.dump(2) + "\n"; }

json snf_json(const Presentation& p) {
  json out = json::array();
  for (const auto& v : abelian_invariants(p)) out.push_back(v.get_str());
  return out;
}

json nice_json(const NiceReport& r) {
  return {{"in_length", r.in_length},
          {"out_length", r.out_length},
          {"moves", r.moves},
          {"length_ratio", r.length_ratio},
          {"script_ratio", r.script_ratio},
          {"max_relators_per_gen", r.max_relators_per_gen},
          {"max_occurrences", r.max_occurrences},
          {"lengths_ok", r.lengths_ok},
          {"offset_in", r.offset_in},
          {"offset_out", r.offset_out},
          {"max_diameter", r.max_diameter},
          {"diameter_constant", r.diameter_constant},
          {"relators_per_gen_histogram", r.histogram},
          {"max_relator_length", r.max_relator_length}};
}

void write_rewrite(const std::string& prefix, const Presentation& in, const RewriteResult& r, json report) {
  report["snf_in"] = snf_json(in);
  report["snf_out"] = snf_json(r.p);
  std::vector<std::size_t> diam;
  for (const auto& c : graph_components(pres_graph(r.p))) diam.push_back(c.diameter);
  report["component_diameters"] = diam;
  report["flagged"] = r.flagged;
  if (prefix.empty()) {
    std::cout << format_presentation(r.p) << json_text(report);
    return;
  }
  write_text_file(prefix + ".pres", format_presentation(r.p));
  write_text_file(prefix + ".script", format_script(r.script, in));
  write_text_file(prefix + ".json", json_text(report));
  std::cout << json_text(report);
}

SearchOptions search_options(std::size_t d, std::size_t depth, std::size_t states, std::size_t rel_len,
                             std::size_t gens) {
  SearchOptions o;
  o.d = d;
  o.max_depth = depth;
  o.max_states = states;
  o.max_rel_len = rel_len;
  o.max_gens = gens;
  return o;
}

// ---- family ----

int cmd_family(unsigned long n, const std::string& v, std::size_t max_len, bool count_only, bool do_choose,
               const std::string& l, unsigned long m, const std::string& d, const std::string& out,
               std::size_t budget) {
  if (do_choose) {
    const ChooseN c = choose_n(mpz_class(l), m, mpz_class(d), budget);
    json j{{"l", l}, {"m", m}, {"d", d}, {"n_exact", c.exact}};
    j["n_sufficient"] = c.sufficient ? json(*c.sufficient) : json(nullptr);
    std::cout << "n: " << c.exact << "\n" << json_text(j);
    return 0;
  }
  if (!v.empty()) {
    std::vector<std::string> names{"x", "y"};
    const Word w = parse_word(v, names);
    parse_blocks(w);  // rejects non-block words
    const Presentation mu = build_mu(w, n), mu0 = build_mu0(w, n);
    const TietzeScript s = mu_to_mu0(w, n);
    const bool replays = canonical_form(replay(mu, s)) == canonical_form(mu0);
    const auto [i, jj] = v_encode(w);
    json rep{{"v", v},
             {"n", n},
             {"length_mu", mu.length()},
             {"length_mu0", mu0.length()},
             {"balanced", mu.balanced() && mu0.balanced()},
             {"h1_trivial", h1_trivial(mu) && h1_trivial(mu0)},
             {"script_moves", s.moves.size()},
             {"script_d", s.d},
             {"replay_ok", replays},
             {"encoding", {{"i", i}, {"j", jj.get_str()}}},
             {"fingerprint", canonical_form(mu).hex()}};
    const std::string prefix = out.empty() ? "mu" : out;
    write_text_file(prefix + ".mu.pres", format_presentation(mu));
    write_text_file(prefix + ".mu0.pres", format_presentation(mu0));
    write_text_file(prefix + ".mu_to_mu0.script", format_script(s, mu));
    std::cout << json_text(rep);
    return replays ? 0 : 2;
  }
  if (max_len) {
    const auto members = enumerate_family(max_len, n);
    const double log2_threshold = std::floor(0.99 * static_cast<double>(max_len) / 4.0);
    json rep{{"n", n}, {"max_len", max_len}, {"count", members.size()}, {"threshold_log2", log2_threshold}};
    if (!count_only) {
      std::string manifest;
      for (const auto& f : members) manifest += manifest_line(f) + "\n";
      emit(out.empty() ? "-" : out, manifest);
    }
    if (count_only || !out.empty()) std::cout << json_text(rep);
    return 0;
  }
  throw InputError("family: give --v, --max-len or --choose-n");
}

// ---- verify ----

int verify_script(const std::string& pres, const std::string& script, const std::string& target) {
  const Presentation p = read_presentation_file(pres);
  const TietzeScript s = parse_script(read_text_file(script), p);
  Presentation q;
  try {
    q = replay(p, s);
  } catch (const ReplayError& e) {
    std::cout << json_text({{"ok", false}, {"index", e.index}, {"error", e.what()}});
    return e.kind == ReplayError::Kind::fingerprint ? 3 : 2;
  }
  json rep{{"ok", true}, {"moves", s.moves.size()}, {"d", s.d}, {"result", canonical_form(q).hex()}};
  int code = 0;
  if (!target.empty()) {
    const bool eq = canonical_form(q) == canonical_form(read_presentation_file(target));
    rep["target_match"] = eq;
    if (!eq) {
      rep["ok"] = false;
      code = 2;
    }
  }
  std::cout << json_text(rep);
  return code;
}

int verify_nice(const std::string& pres, const std::string& script, const std::string& variant, bool pipeline) {
  const Presentation p = read_presentation_file(pres);
  const TietzeScript s = parse_script(read_text_file(script), p);
  RewriteResult r;
  try {
    r.p = replay(p, s);
  } catch (const ReplayError& e) {
    std::cout << json_text({{"ok", false}, {"index", e.index}, {"error", e.what()}});
    return e.kind == ReplayError::Kind::fingerprint ? 3 : 2;
  }
  r.script = s;
  std::size_t short_in = 0;
  for (const auto& w : p.rels) short_in += w.size() < 2;
  std::vector<std::size_t> short_out;
  for (std::size_t j = 0; j < r.p.rels.size(); ++j)
    if (r.p.rels[j].size() < 2) short_out.push_back(j);
  if (short_out.size() == short_in) r.flagged = short_out;
  const NiceReport nr = measure_nice(p, r);
  const std::size_t bound = pipeline ? 12 : variant == "global" ? 3 : 3 * std::max<std::size_t>(p.rels.size(), 1);
  const bool prop1 = nr.max_relators_per_gen <= bound;
  const bool prop2 = pipeline ? nr.max_relator_length <= 3 || !r.flagged.empty() : nr.lengths_ok;
  const bool prop4 = nr.offset_in == nr.offset_out;
  const bool snf = snf_json(p) == snf_json(r.p);
  json rep = nice_json(nr);
  rep["relator_bound"] = bound;
  rep["checks"] = {{"relators_per_generator", prop1}, {"relator_lengths", prop2}, {"balance_offset", prop4},
                   {"snf_preserved", snf}};
  rep["ok"] = prop1 && prop2 && prop4 && snf;
  std::cout << json_text(rep);
  return rep["ok"].get<bool>() ? 0 : 2;
}

int verify_pachner(const std::string& complex, const std::string& trace, const std::string& target) {
  SimplicialComplex t = parse_complex(read_text_file(complex));
  std::istringstream in(read_text_file(trace));
  std::string line;
  std::size_t idx = 0;
  const long chi = t.euler_characteristic();
  const long n = t.dim();
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    const PachnerMove m = parse_pachner(line);
    const std::size_t before = t.top_count();
    try {
      t = apply_pachner(t, m).first;
    } catch (const PachnerError& e) {
      std::cout << json_text({{"ok", false}, {"index", idx}, {"error", e.what()}});
      return 2;
    }
    const long delta = static_cast<long>(t.top_count()) - static_cast<long>(before);
    if (delta != (n + 2 - static_cast<long>(m.i)) - static_cast<long>(m.i) || t.euler_characteristic() != chi) {
      std::cout << json_text({{"ok", false}, {"index", idx}, {"error", "f-vector or Euler characteristic changed"}});
      return 2;
    }
    ++idx;
  }
  json rep{{"ok", true}, {"moves", idx}, {"euler_characteristic", chi}, {"top_simplices", t.top_count()}};
  if (!target.empty()) {
    const bool eq = t == parse_complex(read_text_file(target));
    rep["target_match"] = eq;
    rep["ok"] = eq;
  }
  std::cout << json_text(rep);
  return rep["ok"].get<bool>() ? 0 : 2;
}

int verify_manifest(const std::string& manifest) {
  std::istringstream in(read_text_file(manifest));
  std::string line;
  std::size_t idx = 0, bad = 0;
  json failures = json::array();
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string blocks, hex;
    unsigned long n = 0;
    std::size_t len = 0;
    if (!(ls >> blocks >> n >> len >> hex)) throw InputError("manifest line " + std::to_string(idx) + " is malformed");
    const Presentation mu = build_mu(block_word(parse_block_string(blocks)), n);
    if (mu.length() != len || canonical_form(mu).hex() != hex || !mu.balanced()) {
      ++bad;
      failures.push_back(idx);
    }
    ++idx;
  }
  std::cout << json_text({{"ok", bad == 0}, {"members", idx}, {"failures", failures}});
  return bad ? 2 : 0;
}

Word read_g_word(const std::string& text) {
  std::vector<std::string> names{"x", "y", "t"};
  return parse_word(text, names);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"balanced presentations: construction, rewriting and verification"};
  app.require_subcommand(1);
  app.fallthrough();
  unsigned long seed = 1;
  std::size_t bit_budget = 0;
  app.add_option("--seed", seed, "seed for randomized commands")->capture_default_str();
  app.add_option("--bit-budget", bit_budget, "exact-integer bit budget (default: BALPRES_BIT_BUDGET or 2^20)");

  std::string pres, pres_b, word, out, script, target, variant = "per_relator", complex_path, trace, manifest;
  std::string move, graph, v, l = "10", d_big = "10";
  unsigned long n = 0, m = 0;
  std::size_t max_len = 0, k = 0, d = 2, max_depth = 6, max_states = 200000, max_cells = 12, rel_len = 16,
              max_gens = 12, list_i = 0, walk = 0;
  int root = -1;
  bool count_only = false, choose = false, used = false, bound = false;

  auto* fam = app.add_subcommand("family", "build family members, manifests, or choose n");
  fam->add_option("--n", n, "tower depth n");
  fam->add_option("--v", v, "block word over x, y, e.g. \"y x y\"");
  fam->add_option("--max-len", max_len, "enumerate all members with l(mu_v) <= this");
  fam->add_flag("--count-only", count_only);
  fam->add_flag("--choose-n", choose);
  fam->add_option("--l", l, "length bound l for --choose-n");
  fam->add_option("--m", m, "tower height m for --choose-n");
  fam->add_option("--d", d_big, "Op5 bound d for --choose-n");
  fam->add_option("--out", out, "output prefix or manifest path");

  auto* rw = app.add_subcommand("rewrite", "nice rewriting (halve, then split occurrences)");
  rw->add_option("--pres", pres)->required();
  rw->add_option("--variant", variant)->check(CLI::IsMember({"per_relator", "global"}));
  rw->add_option("--out", out, "output prefix (.pres, .script, .json)");

  auto* cp = app.add_subcommand("compress", "abbreviate blocks of long relators");
  cp->add_option("--pres", pres)->required();
  cp->add_option("--k", k, "block length (0: derived from relator length)");
  cp->add_flag("--used", used, "abbreviate only the blocks that occur");
  cp->add_option("--out", out);

  auto* pl = app.add_subcommand("pipeline", "abbreviation, halving and per-relator splitting");
  pl->add_option("--pres", pres)->required();
  pl->add_option("--out", out);

  auto* ar = app.add_subcommand("area", "minimal van Kampen area by bounded search");
  ar->add_option("--pres", pres)->required();
  ar->add_option("--word", word)->required();
  ar->add_option("--max-cells", max_cells)->capture_default_str();
  ar->add_option("--max-len", max_len, "word length cap (0: automatic)");
  ar->add_option("--max-states", max_states)->capture_default_str();

  auto* ds = app.add_subcommand("distance", "Tietze distance between two presentations");
  ds->add_option("--a", pres)->required();
  ds->add_option("--b", pres_b)->required();
  ds->add_option("--d", d)->capture_default_str();
  ds->add_option("--max-depth", max_depth)->capture_default_str();
  ds->add_option("--max-states", max_states)->capture_default_str();
  ds->add_option("--max-rel-len", rel_len)->capture_default_str();
  ds->add_option("--max-gens", max_gens)->capture_default_str();
  ds->add_flag("--bound", bound, "fall back to a best-first upper bound");

  auto* wp = app.add_subcommand("wordprob", "word problem in <x, y, t | x^y = x^2, x^t = y>");
  wp->add_option("--word", word)->required();

  auto* sn = app.add_subcommand("snf", "Smith normal form of the relation matrix");
  sn->add_option("--pres", pres)->required();

  auto* pi = app.add_subcommand("pi1", "spanning-tree presentation of a complex");
  pi->add_option("--complex", complex_path)->required();
  pi->add_option("--root", root, "tree root (default: least vertex)");
  pi->add_option("--out", out);

  auto* pa = app.add_subcommand("pachner", "list, apply or randomly walk Pachner moves");
  pa->add_option("--complex", complex_path)->required();
  pa->add_option("--move", move, "move spec, e.g. \"2 A 0 1 B 3 4\"");
  pa->add_option("--list", list_i, "list valid i-moves");
  pa->add_option("--walk", walk, "random walk of this many moves (uses --seed)");
  pa->add_option("--trace", trace, "write applied moves here");
  pa->add_option("--out", out, "write the resulting complex here");

  auto* fg = app.add_subcommand("fill-graph", "fill a cycle basis of a multigraph");
  fg->add_option("--graph", graph, "file: \"vertices: V\" then one \"u v\" line per edge")->required();
  fg->add_option("--root", root);
  fg->add_option("--out", out);

  auto* vf = app.add_subcommand("verify", "check a certificate or output");
  std::string what;
  vf->add_option("kind", what, "script, nice, pipeline, pachner-trace or family-manifest")
      ->required()
      ->check(CLI::IsMember({"script", "nice", "pipeline", "pachner-trace", "family-manifest"}));
  vf->add_option("--pres", pres);
  vf->add_option("--script", script);
  vf->add_option("--target", target);
  vf->add_option("--variant", variant)->check(CLI::IsMember({"per_relator", "global"}));
  vf->add_option("--complex", complex_path);
  vf->add_option("--trace", trace);
  vf->add_option("--manifest", manifest);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    const std::size_t budget = bit_budget ? bit_budget : bit_budget_from_env();
    if (*fam) return cmd_family(n, v, max_len, count_only, choose, l, m, d_big, out, budget);

    if (*rw) {
      const Presentation p = read_presentation_file(pres);
      const auto r = rewrite_nice(p, variant == "global" ? SplitVariant::global : SplitVariant::per_relator);
      json rep = nice_json(measure_nice(p, r));
      rep["variant"] = variant;
      write_rewrite(out, p, r, rep);
      return 0;
    }
    if (*cp) {
      const Presentation p = read_presentation_file(pres);
      CompressOptions o;
      o.all_words = !used;
      o.k = k;
      const auto c = compress(p, o);
      json rep{{"N", c.N},
               {"k", c.k},
               {"abbreviations", c.abbreviations},
               {"in_length", p.length()},
               {"out_length", c.r.p.length()},
               {"C4", c.N > 0 ? static_cast<double>(c.r.p.length()) / c.N : 0.0}};
      write_rewrite(out, p, c.r, rep);
      return 0;
    }
    if (*pl) {
      const Presentation p = read_presentation_file(pres);
      const auto r = short_relator_pipeline(p);
      const NiceReport nr = measure_nice(p, r);
      json rep = nice_json(nr);
      const double lnN = std::log(static_cast<double>(std::max<std::size_t>(r.p.length(), 3)));
      rep["diameter_over_ln_length"] = static_cast<double>(nr.max_diameter) / lnN;
      rep["postconditions"] = {{"relator_length_le_3", nr.max_relator_length <= 3},
                               {"relators_per_gen_le_12", nr.max_relators_per_gen <= 12}};
      write_rewrite(out, p, r, rep);
      return 0;
    }
    if (*ar) {
      const Presentation p = read_presentation_file(pres);
      std::vector<std::string> names = p.gens;
      const Word w = parse_word(word, names);
      AreaBudget b;
      b.max_cells = max_cells;
      b.max_len = max_len;
      b.max_states = max_states;
      const AreaResult r = area_upper(p, w, b);
      if (r.area)
        std::cout << "area: " << *r.area << "\n";
      else
        std::cout << "area: none\n";
      std::cout << "status: " << area_status_name(r.status) << "\nexhaustive: " << (r.exhaustive ? "yes" : "no")
                << "\nstates: " << r.states << "\n";
      for (const auto& s : r.trace) std::cout << format_cell(s) << "\n";
      return 0;
    }
    if (*ds) {
      const Presentation a = read_presentation_file(pres), b = read_presentation_file(pres_b);
      const SearchOptions o = search_options(d, max_depth, max_states, rel_len, max_gens);
      const SearchResult r = bound ? tietze_distance_or_bound(a, b, o) : tietze_distance(a, b, o);
      if (r.distance)
        std::cout << "distance: " << *r.distance << (r.exact ? "" : " (upper bound)") << "\n";
      else
        std::cout << "distance: none\n";
      std::cout << "status: " << status_name(r.status) << "\nstates: " << r.states << "\n";
      for (const auto& mv : r.moves) std::cout << "move: " << mv << "\n";
      return 0;
    }
    if (*wp) {
      const Word w = read_g_word(word);
      const GNormalForm nf = g_normal_form(w, {}, budget);
      std::cout << "trivial: " << (nf.is_identity() ? "yes" : "no") << "\nt_length: " << nf.t_length() << "\n";
      return 0;
    }
    if (*sn) {
      const Presentation p = read_presentation_file(pres);
      std::cout << "invariant_factors:";
      for (const auto& f : smith_normal_form(relation_matrix(p), p.gens.size())) std::cout << " " << f.get_str();
      std::cout << "\nh1_trivial: " << (h1_trivial(p) ? "yes" : "no") << "\n";
      return 0;
    }
    if (*pi) {
      const SimplicialComplex t = parse_complex(read_text_file(complex_path));
      const auto vs = t.vertices();
      if (vs.empty()) throw InputError("pi1: empty complex");
      const SpanningTree tree = spanning_tree(t, root < 0 ? *vs.begin() : root);
      emit(out, format_presentation(pi1_presentation(t, tree)));
      return 0;
    }
    if (*pa) {
      SimplicialComplex t = parse_complex(read_text_file(complex_path));
      std::vector<PachnerMove> applied;
      if (list_i) {
        for (const auto& mv : find_pachner_moves(t, list_i)) std::cout << format_pachner(mv) << "\n";
        return 0;
      }
      if (!move.empty()) {
        auto [t2, inv] = apply_pachner(t, parse_pachner(move));
        t = t2;
        applied.push_back(parse_pachner(move));
        std::cout << "inverse: " << format_pachner(inv) << "\n";
      } else if (walk) {
        std::mt19937_64 rng(seed);
        auto [t2, moves] = random_pachner_walk(t, walk, rng);
        t = t2;
        applied = moves;
      } else {
        throw InputError("pachner: give --move, --list or --walk");
      }
      if (!trace.empty()) {
        std::string text;
        for (const auto& mv : applied) text += format_pachner(mv) + "\n";
        write_text_file(trace, text);
      }
      std::cout << "top_simplices: " << t.top_count() << "\neuler_characteristic: " << t.euler_characteristic()
                << "\n";
      if (!out.empty()) write_text_file(out, format_complex(t));
      return 0;
    }
    if (*fg) {
      std::istringstream in(read_text_file(graph));
      std::string tok;
      std::size_t nv = 0;
      if (!(in >> tok >> nv) || tok != "vertices:") throw InputError("graph: expected \"vertices: V\" first");
      std::vector<Edge> edges;
      for (int a, b; in >> a >> b;) edges.push_back({a, b});
      if (!in.eof()) throw InputError("graph: malformed edge line");
      const SimplicialComplex t = fill_cycle_basis(nv, edges, root < 0 ? 0 : root);
      const Presentation p = pi1_presentation(t, spanning_tree(t, 0));
      std::cout << json_text({{"vertices", nv},
                              {"edges", edges.size()},
                              {"diameter", graph_diameter(nv, edges)},
                              {"two_simplices", t.faces(2).size()},
                              {"pi1_generators", p.gens.size()},
                              {"h1_trivial", h1_trivial(p)}});
      if (!out.empty()) write_text_file(out, format_complex(t));
      return 0;
    }
    if (*vf) {
      auto need = [](const std::string& s, const char* opt) {
        if (s.empty()) throw InputError(std::string("verify: missing ") + opt);
      };
      if (what == "script") {
        need(pres, "--pres");
        need(script, "--script");
        return verify_script(pres, script, target);
      }
      if (what == "nice" || what == "pipeline") {
        need(pres, "--pres");
        need(script, "--script");
        return verify_nice(pres, script, variant, what == "pipeline");
      }
      if (what == "pachner-trace") {
        need(complex_path, "--complex");
        need(trace, "--trace");
        return verify_pachner(complex_path, trace, target);
      }
      need(manifest, "--manifest");
      return verify_manifest(manifest);
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const PachnerError& e) {
    std::cerr << "invalid move: " << e.what() << "\n";
    return 2;
  } catch (const InvalidMove& e) {
    std::cerr << "invalid move: " << e.what() << "\n";
    return 2;
  } catch (const ResourceError& e) {
    std::cerr << "resource budget exceeded: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
