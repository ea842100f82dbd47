#include "balpres/abelian.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace balpres {

IntMatrix relation_matrix(const Presentation& p) {
  IntMatrix m(p.rels.size(), std::vector<mpz_class>(p.gens.size(), 0));
  for (std::size_t i = 0; i < p.rels.size(); ++i)
    for (Letter l : p.rels[i]) m[i][gen_of(l)] += l > 0 ? 1 : -1;
  return m;
}

namespace {

std::vector<mpz_class> dense_smith(IntMatrix a, std::size_t cols) {
  const std::size_t rows = a.size();
  std::vector<mpz_class> diag;
  std::size_t t = 0;
  for (; t < rows && t < cols; ++t) {
    // Pivot: smallest nonzero absolute value in the remaining block.
    for (;;) {
      std::size_t pr = rows, pc = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (a[i][j] != 0 && (pr == rows || abs(a[i][j]) < abs(a[pr][pc]))) {
            pr = i;
            pc = j;
          }
      if (pr == rows) break;
      std::swap(a[t], a[pr]);
      for (auto& row : a) std::swap(row[t], row[pc]);
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), a[i][t].get_mpz_t(), a[t][t].get_mpz_t());
        for (std::size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
        if (a[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), a[t][j].get_mpz_t(), a[t][t].get_mpz_t());
        for (std::size_t i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
        if (a[t][j] != 0) clean = false;
      }
      if (!clean) continue;
      // Divisibility: fold any entry not divisible by the pivot into row t.
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (a[i][j] % a[t][t] != 0) {
            for (std::size_t k = t; k < cols; ++k) a[t][k] += a[i][k];
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (a[t][t] == 0) break;
    diag.push_back(abs(a[t][t]));
  }
  diag.resize(cols, 0);
  std::stable_partition(diag.begin(), diag.end(), [](const mpz_class& v) { return v != 0; });
  return diag;
}

}  // namespace

// Relation matrices of rewritten presentations are large, sparse and full of
// +-1 entries: eliminate unit pivots sparsely, then run the dense reduction
// on what is left.
std::vector<mpz_class> smith_normal_form(const IntMatrix& in, std::size_t cols) {
  using Row = std::map<std::size_t, mpz_class>;
  std::vector<Row> rows(in.size());
  std::vector<std::set<std::size_t>> colrows(cols);
  for (std::size_t i = 0; i < in.size(); ++i)
    for (std::size_t j = 0; j < cols && j < in[i].size(); ++j)
      if (in[i][j] != 0) {
        rows[i][j] = in[i][j];
        colrows[j].insert(i);
      }
  std::vector<bool> col_done(cols, false);
  std::size_t units = 0;
  for (;;) {
    // Unit entry in the sparsest row, then the sparsest column.
    std::size_t pr = rows.size(), pc = cols;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].empty() || (pr < rows.size() && rows[i].size() >= rows[pr].size())) continue;
      for (const auto& [j, v] : rows[i])
        if (abs(v) == 1 && (pr != i || colrows[j].size() < colrows[pc].size())) {
          pr = i;
          pc = j;
        }
    }
    if (pr == rows.size()) break;
    const Row pivot = rows[pr];
    const mpz_class u = pivot.at(pc);
    const std::set<std::size_t> others = colrows[pc];
    for (std::size_t i : others) {
      if (i == pr) continue;
      const mpz_class f = rows[i].at(pc) * u;
      for (const auto& [j, v] : pivot) {
        mpz_class& e = rows[i][j];
        e -= f * v;
        if (e == 0) {
          rows[i].erase(j);
          colrows[j].erase(i);
        } else {
          colrows[j].insert(i);
        }
      }
    }
    for (const auto& [j, v] : pivot) colrows[j].erase(pr);
    rows[pr].clear();
    col_done[pc] = true;
    ++units;
  }
  std::vector<std::size_t> remap(cols);
  std::size_t rest = 0;
  for (std::size_t j = 0; j < cols; ++j)
    if (!col_done[j]) remap[j] = rest++;
  IntMatrix dense;
  for (const auto& r : rows) {
    if (r.empty()) continue;
    dense.emplace_back(rest, 0);
    for (const auto& [j, v] : r) dense.back()[remap[j]] = v;
  }
  std::vector<mpz_class> diag(units, 1);
  for (auto& d : dense_smith(std::move(dense), rest)) diag.push_back(std::move(d));
  return diag;
}

bool h1_trivial(const Presentation& p) {
  for (const auto& d : smith_normal_form(relation_matrix(p), p.gens.size()))
    if (d != 1) return false;
  return true;
}

std::vector<mpz_class> abelian_invariants(const Presentation& p) {
  std::vector<mpz_class> out;
  for (const auto& d : smith_normal_form(relation_matrix(p), p.gens.size()))
    if (d != 1) out.push_back(d);
  return out;
}

}  // namespace balpres
