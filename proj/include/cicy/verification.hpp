#pragma once

// Recomputes everything the reference tables claim — the census, the
// duplicate pairing, the certified bidegree sets, the headline counts — and
// diffs the results line by line.  The overall verdict is the conjunction of
// every check, so a single perturbed table cell flips the gate.

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "cicy/census.hpp"
#include "cicy/configuration.hpp"
#include "cicy/finiteness.hpp"
#include "cicy/ground_truth.hpp"

namespace cicy {

struct ZSetMismatch {
  ConfigurationMatrix matrix;
  std::vector<Bidegree> expected;
  std::vector<Bidegree> computed;
};

struct CountCheck {
  std::string name;
  long long expected = 0;
  long long computed = 0;

  bool ok() const noexcept { return expected == computed; }
};

struct VerificationReport {
  /// Overall verdict: true iff every diff list is empty, every count check
  /// agrees, and (for the embedded tables) the fingerprint matches.
  bool census_match = false;
  std::vector<std::string> per_codim_diffs;
  std::vector<ZSetMismatch> zset_mismatches;
  std::vector<std::string> duplicate_pair_diffs;
  std::vector<CountCheck> summary_counts;
  bool fingerprint_checked = false;
  bool fingerprint_ok = true;
  std::uint64_t fingerprint = 0;
};

namespace detail {

inline std::string entry_brief(const ConfigurationMatrix& A) {
  return "(" + std::to_string(A.dims().a1) + "," + std::to_string(A.dims().a2) + ") " +
         matrix_brief(A);
}

}  // namespace detail

inline VerificationReport verify_against(const PaperGroundTruth& gt, bool check_fingerprint = false) {
  VerificationReport report;
  const Census census = enumerate_census(5);

  // Census contents, per codimension.
  std::map<int, std::set<ConfigurationMatrix>> expected_by_codim;
  for (const auto& row : gt.census_table) {
    const ConfigurationMatrix c = canonical_form(row.matrix);
    expected_by_codim[c.codim()].insert(c);
  }
  std::map<int, std::set<ConfigurationMatrix>> computed_by_codim;
  for (const auto& entry : census.entries) computed_by_codim[entry.codim].insert(entry.matrix);
  for (int m = 1; m <= 5; ++m) {
    const auto& expected = expected_by_codim[m];
    const auto& computed = computed_by_codim[m];
    for (const auto& A : expected)
      if (!computed.count(A))
        report.per_codim_diffs.push_back("codim " + std::to_string(m) +
                                         ": listed but not computed: " + detail::entry_brief(A));
    for (const auto& A : computed)
      if (!expected.count(A))
        report.per_codim_diffs.push_back("codim " + std::to_string(m) +
                                         ": computed but not listed: " + detail::entry_brief(A));
  }

  // Duplicate classes: both members present, same label, labels total out.
  std::map<ConfigurationMatrix, std::string> expected_labels;
  for (const auto& row : gt.census_table)
    if (row.duplicate_class) expected_labels.emplace(canonical_form(row.matrix), *row.duplicate_class);
  for (const auto& [matrix, label] : expected_labels) {
    const auto idx = census.find(matrix);
    if (!idx) {
      report.duplicate_pair_diffs.push_back("labelled entry missing from census: " +
                                            detail::entry_brief(matrix));
      continue;
    }
    const auto& computed = census.entries[*idx].duplicate_class;
    if (!computed)
      report.duplicate_pair_diffs.push_back("no duplicate class computed for " +
                                            detail::entry_brief(matrix) + " (listed " + label + ")");
    else if (*computed != label)
      report.duplicate_pair_diffs.push_back("duplicate class for " + detail::entry_brief(matrix) +
                                            ": listed " + label + ", computed " + *computed);
  }
  for (const auto& entry : census.entries)
    if (entry.duplicate_class && !expected_labels.count(entry.matrix))
      report.duplicate_pair_diffs.push_back("computed duplicate class " + *entry.duplicate_class +
                                            " for unlabelled entry " +
                                            detail::entry_brief(entry.matrix));

  // Certified bidegree sets, including the hypersurface rule.
  const auto check_z_row = [&](const ReferenceZRow& row) {
    std::vector<Bidegree> expected = row.z;
    std::sort(expected.begin(), expected.end());
    std::vector<Bidegree> computed;
    try {
      computed = z_set(canonical_form(row.matrix));
    } catch (const std::exception&) {
      // left empty: reported as a mismatch below
    }
    if (computed != expected)
      report.zset_mismatches.push_back({canonical_form(row.matrix), std::move(expected), std::move(computed)});
  };
  for (const auto& row : gt.finite_bidegree_table) check_z_row(row);
  check_z_row(gt.hypersurface_rule);

  // Headline counts.
  const CensusPartition partition = census_partition_report(census);
  const auto count = [&](const std::string& name, long long expected, long long computed) {
    report.summary_counts.push_back({name, expected, computed});
  };
  count("census total", gt.counts.total, partition.total);
  for (int m = 1; m <= 5; ++m) {
    const auto it = gt.counts.by_codim.find(m);
    const auto jt = partition.by_codim.find(m);
    count("codim " + std::to_string(m), it == gt.counts.by_codim.end() ? 0 : it->second,
          jt == partition.by_codim.end() ? 0 : jt->second);
  }
  count("entries with a P^1 factor", gt.counts.with_p1_factor, partition.with_p1_factor);
  count("entries with both factors >= 2", gt.counts.with_both_factors_ge2,
        partition.with_both_factors_ge2);
  count("tabulated multi-bidegree rows", gt.counts.multi_z_rows, partition.multi_z_rows);
  count("tabulated rows present", gt.counts.multi_z_rows,
        static_cast<long long>(gt.finite_bidegree_table.size()));
  count("singleton certified sets", gt.counts.singleton_z, partition.singleton_z);
  count("duplicate pairs", gt.counts.duplicate_pairs, partition.duplicate_pair_count);
  count("census rows listed", gt.counts.total, static_cast<long long>(gt.census_table.size()));

  if (check_fingerprint) {
    report.fingerprint_checked = true;
    report.fingerprint = ground_truth_fingerprint(gt);
    report.fingerprint_ok = report.fingerprint == kEmbeddedGroundTruthFingerprint;
  }

  bool counts_ok = true;
  for (const auto& check : report.summary_counts) counts_ok = counts_ok && check.ok();
  report.census_match = report.per_codim_diffs.empty() && report.zset_mismatches.empty() &&
                        report.duplicate_pair_diffs.empty() && counts_ok && report.fingerprint_ok;
  return report;
}

inline VerificationReport verify_embedded() { return verify_against(embedded_ground_truth(), true); }

}  // namespace cicy
