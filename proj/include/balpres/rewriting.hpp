#pragma once

#include <map>
#include <string>
#include <vector>

#include "balpres/tietze.hpp"

namespace balpres {

enum class SplitVariant { per_relator, global };

struct RewriteResult {
  Presentation p;
  TietzeScript script;
  // cluster[j]: index of the input relator that relator j was derived from.
  std::vector<std::size_t> cluster;
  // Input relators of length < 2, passed through unchanged.
  std::vector<std::size_t> flagged;
};

// Stage 1: halve every relator longer than 3 by abbreviating consecutive
// pairs, one new generator per distinct pair per round. With
// `per_cluster_dedupe` pairs are shared only within one input relator's cluster.
RewriteResult halve_relators(const Presentation& p, bool per_cluster_dedupe = false);

// Stage 2 on a presentation with relators of length <= 3: a generator with
// T > 3 occurrences gets a chain f = w1, w1 = w2, ..., w_{T-4} = w_{T-3}.
// per_relator counts occurrences inside each cluster; global counts all.
// The cluster labels of `in` are used when given (empty: one cluster per relator).
RewriteResult split_occurrences(const Presentation& p, SplitVariant v,
                                const std::vector<std::size_t>& cluster = {});

RewriteResult rewrite_nice(const Presentation& p, SplitVariant v);

struct CompressOptions {
  // All reduced words of length 2..k over the letters occurring in the
  // relators, rather than only the tree nodes the rewriting uses.
  bool all_words = true;
  // 0: solve N ln N = longest relator length and take k = floor(log2(N / ln N)).
  std::size_t k = 0;
};
struct CompressResult {
  RewriteResult r;
  double N = 0;
  std::size_t k = 0;
  std::size_t abbreviations = 0;
};
// Block length used for relators of length `len`; 0 when too short.
std::size_t compress_block_length(std::size_t len, double* N = nullptr);
CompressResult compress(const Presentation& p, const CompressOptions& opt = {});

// Stage 0 (per-relator abbreviation of the used blocks), stage 1 halving
// with per-cluster sharing, stage 2 per-relator splitting.
RewriteResult short_relator_pipeline(const Presentation& p);

// Multigraph on generators with one edge per pair of positions in a relator.
struct PresGraph {
  std::size_t vertices = 0;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> edges;  // (u <= v) -> multiplicity
  std::size_t loops(std::size_t v) const;
  std::size_t multiplicity(std::size_t u, std::size_t v) const;
};
PresGraph pres_graph(const Presentation& p);

struct Component {
  std::vector<std::size_t> vertices;
  std::size_t diameter = 0;
};
std::vector<Component> graph_components(const PresGraph& g);

// occurrence_counts[g]: number of letters g^+-1 over all relators;
// relator_counts[g]: number of relators containing g.
std::vector<std::size_t> occurrence_counts(const Presentation& p);
std::vector<std::size_t> relator_counts(const Presentation& p);

struct NiceReport {
  std::size_t in_length = 0, out_length = 0, moves = 0;
  double length_ratio = 0, script_ratio = 0;  // property 3 and 5 constants
  std::size_t max_relators_per_gen = 0;       // property 1
  std::size_t max_occurrences = 0;
  bool lengths_ok = false;                    // property 2 (flagged pass-throughs excepted)
  long offset_in = 0, offset_out = 0;         // property 4
  std::size_t max_diameter = 0;               // property 6
  double diameter_constant = 0;               // max diameter / (m ln l(P))
  std::vector<std::size_t> histogram;         // relators-per-generator histogram
  std::size_t max_relator_length = 0;
};
NiceReport measure_nice(const Presentation& in, const RewriteResult& out);

}  // namespace balpres
