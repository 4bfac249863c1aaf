#pragma once

// Exhaustive census of admissible configuration matrices in products of two
// projective spaces, up to row/column symmetry.
//
// For codimension m the ambient is pinned by a1 + a2 = m + 3 and the
// admissibility bounds cap m at 5, so enumeration is a finite scan over row
// compositions: row i runs over compositions of a_i + 1 into m parts.
// Candidates are filtered by the column rules, canonicalized, and deduped.
//
// The census is listed in a deterministic order — codimension, then a1, then
// row-major lexicographic on the canonical entries — and annotated with the
// P^1-doubling duplicate classes and (where defined) the finite bidegree sets.

#include <future>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cicy/configuration.hpp"
#include "cicy/finiteness.hpp"

namespace cicy {

struct CensusEntry {
  ConfigurationMatrix matrix;
  int codim = 0;
  bool has_p1_factor = false;
  /// Shared by exactly two entries describing the same threefold through the
  /// P^1-doubling identity; roman numeral, assigned in census order.
  std::optional<std::string> duplicate_class;
  /// Present iff both factors have dimension >= 2.
  std::optional<std::vector<Bidegree>> z_set;
};

struct Census {
  std::vector<CensusEntry> entries;
  std::map<int, int> counts_by_codim;

  int size() const noexcept { return static_cast<int>(entries.size()); }

  /// Index of the entry whose canonical matrix equals canonical_form(A).
  std::optional<std::size_t> find(const ConfigurationMatrix& A) const {
    const ConfigurationMatrix c = canonical_form(A);
    for (std::size_t i = 0; i < entries.size(); ++i)
      if (entries[i].matrix == c) return i;
    return std::nullopt;
  }
};

enum class ExecutionMode { Sequential, Parallel };

/// A quadric on a P^1 factor is a double point pair, so the double cover
/// trick rewrites the configuration on a P^2 factor and vice versa:
///
///   [ P^1 | 2c_1..2c_m ; P^a | r_1..r_m ]
///     ==  [ P^2 | 2 c_1..c_m ; P^a | 0 r_1..r_m ]
///
/// Forward applies when a1 == 1 and every first-row entry is even; backward
/// when a1 == 2 and some column equals (2,0).  Input is canonicalized first;
/// the partner is returned canonical.  nullopt when neither direction fits.
inline std::optional<ConfigurationMatrix> p1_doubling_partner(const ConfigurationMatrix& A_in) {
  const ConfigurationMatrix A = canonical_form(A_in);
  const FactorDims a = A.dims();

  if (a.a1 == 1) {
    for (int j = 0; j < A.cols(); ++j)
      if (A.entry(0, j) % 2 != 0) return std::nullopt;
    std::vector<int> r1{2}, r2{0};
    for (int j = 0; j < A.cols(); ++j) {
      r1.push_back(A.entry(0, j) / 2);
      r2.push_back(A.entry(1, j));
    }
    return canonical_form(ConfigurationMatrix({2, a.a2}, std::move(r1), std::move(r2)));
  }
  if (a.a1 == 2) {
    int drop = -1;
    for (int j = 0; j < A.cols() && drop < 0; ++j)
      if (A.column(j) == std::pair{2, 0}) drop = j;
    if (drop < 0) return std::nullopt;
    std::vector<int> r1, r2;
    for (int j = 0; j < A.cols(); ++j) {
      if (j == drop) continue;
      r1.push_back(2 * A.entry(0, j));
      r2.push_back(A.entry(1, j));
    }
    return canonical_form(ConfigurationMatrix({1, a.a2}, std::move(r1), std::move(r2)));
  }
  return std::nullopt;
}

namespace detail {

inline void compositions_rec(int total, int parts, std::vector<int>& cur,
                             std::vector<std::vector<int>>& out) {
  if (parts == 1) {
    cur.push_back(total);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int head = total; head >= 0; --head) {
    cur.push_back(head);
    compositions_rec(total - head, parts - 1, cur, out);
    cur.pop_back();
  }
}

/// All ordered ways to write `total` as `parts` nonnegative integers.
inline std::vector<std::vector<int>> compositions(int total, int parts) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  compositions_rec(total, parts, cur, out);
  return out;
}

/// Canonical representatives for one (codim, a1) cell, sorted.
inline std::vector<ConfigurationMatrix> census_cell(int m, int a1) {
  const int a2 = m + 3 - a1;
  std::vector<ConfigurationMatrix> out;
  if (!codimension_bound_check(FactorDims{a1, a2})) return out;

  const auto top_rows = compositions(a1 + 1, m);
  const auto bottom_rows = compositions(a2 + 1, m);
  std::set<ConfigurationMatrix> seen;
  for (const auto& r1 : top_rows) {
    for (const auto& r2 : bottom_rows) {
      bool ok = true, mixed = false;
      for (int j = 0; j < m && ok; ++j) {
        const int top = r1[static_cast<std::size_t>(j)], bottom = r2[static_cast<std::size_t>(j)];
        if (top + bottom < 2) ok = false;
        if (bottom == 0 && a1 == 1) ok = false;
        if (top == 0 && a2 == 1) ok = false;
        if (top > 0 && bottom > 0) mixed = true;
      }
      if (!ok || !mixed) continue;
      seen.insert(canonical_form(ConfigurationMatrix({a1, a2}, r1, r2)));
    }
  }
  out.assign(seen.begin(), seen.end());
  return out;
}

inline std::string roman_numeral(int n) {
  static constexpr std::pair<int, const char*> steps[] = {
      {10, "X"}, {9, "IX"}, {5, "V"}, {4, "IV"}, {1, "I"}};
  std::string out;
  for (auto [value, digits] : steps)
    while (n >= value) {
      out += digits;
      n -= value;
    }
  return out;
}

inline std::vector<std::pair<std::size_t, std::size_t>> duplicate_index_pairs(
    const std::vector<CensusEntry>& entries) {
  std::map<ConfigurationMatrix, std::size_t> index;
  for (std::size_t i = 0; i < entries.size(); ++i) index.emplace(entries[i].matrix, i);

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i].matrix.dims().a1 != 1) continue;
    const auto partner = p1_doubling_partner(entries[i].matrix);
    if (!partner) continue;
    const auto it = index.find(*partner);
    if (it != index.end()) pairs.emplace_back(i, it->second);
  }
  return pairs;
}

}  // namespace detail

/// The full census up to the given codimension (1..5).  Parallel mode
/// partitions the scan by (codim, a1) cell; results are merged in cell order,
/// so both modes produce identical listings.
inline Census enumerate_census(int max_codim, ExecutionMode mode = ExecutionMode::Sequential) {
  if (max_codim < 1 || max_codim > 5)
    throw std::invalid_argument("census codimension must be between 1 and 5");

  std::vector<std::pair<int, int>> cells;
  for (int m = 1; m <= max_codim; ++m)
    for (int a1 = 1; 2 * a1 <= m + 3; ++a1) cells.emplace_back(m, a1);

  std::vector<std::vector<ConfigurationMatrix>> per_cell(cells.size());
  if (mode == ExecutionMode::Parallel) {
    std::vector<std::future<std::vector<ConfigurationMatrix>>> jobs;
    jobs.reserve(cells.size());
    for (auto [m, a1] : cells)
      jobs.push_back(std::async(std::launch::async, detail::census_cell, m, a1));
    for (std::size_t i = 0; i < jobs.size(); ++i) per_cell[i] = jobs[i].get();
  } else {
    for (std::size_t i = 0; i < cells.size(); ++i)
      per_cell[i] = detail::census_cell(cells[i].first, cells[i].second);
  }

  Census census;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    for (auto& matrix : per_cell[i]) {
      CensusEntry entry{std::move(matrix), cells[i].first, cells[i].second == 1, std::nullopt,
                        std::nullopt};
      if (entry.matrix.dims().a1 >= 2 && entry.matrix.dims().a2 >= 2)
        entry.z_set = z_set(entry.matrix);
      census.entries.push_back(std::move(entry));
    }
  }

  const auto pairs = detail::duplicate_index_pairs(census.entries);
  int label = 0;
  for (auto [i, j] : pairs) {
    const std::string numeral = detail::roman_numeral(++label);
    census.entries[i].duplicate_class = numeral;
    census.entries[j].duplicate_class = numeral;
  }

  for (const auto& entry : census.entries) ++census.counts_by_codim[entry.codim];
  return census;
}

/// The census pairs identified under P^1-doubling, P^1-side member first,
/// listed in census order of that member.
inline std::vector<std::pair<CensusEntry, CensusEntry>> duplicate_pairs(const Census& census) {
  std::vector<std::pair<CensusEntry, CensusEntry>> out;
  for (auto [i, j] : detail::duplicate_index_pairs(census.entries))
    out.emplace_back(census.entries[i], census.entries[j]);
  return out;
}

struct CensusPartition {
  int total = 0;
  std::map<int, int> by_codim;
  int with_p1_factor = 0;
  int with_both_factors_ge2 = 0;
  /// Entries where the finite-bidegree set has >= 2 elements and codim >= 2
  /// (the rows worth tabulating).
  int multi_z_rows = 0;
  /// Entries with z_set == {(a1, a2)} and codim > 1.
  int singleton_z = 0;
  /// Codimension-1 entries with both factors of dimension >= 2.
  int codim1_hypersurface = 0;
  int duplicate_pair_count = 0;
};

inline CensusPartition census_partition_report(const Census& census) {
  CensusPartition report;
  report.total = census.size();
  report.by_codim = census.counts_by_codim;
  for (const auto& entry : census.entries) {
    if (entry.has_p1_factor) ++report.with_p1_factor;
    const FactorDims a = entry.matrix.dims();
    if (a.a1 >= 2 && a.a2 >= 2) {
      ++report.with_both_factors_ge2;
      const auto& z = *entry.z_set;
      if (entry.codim == 1)
        ++report.codim1_hypersurface;
      else if (z.size() == 1)
        ++report.singleton_z;
      else if (z.size() >= 2)
        ++report.multi_z_rows;
    }
    if (entry.duplicate_class) ++report.duplicate_pair_count;
  }
  report.duplicate_pair_count /= 2;
  return report;
}

}  // namespace cicy
