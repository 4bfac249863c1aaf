#pragma once

// Embedded reference tables for the verification gate: the full census of 57
// configuration matrices (transcribed in its published layout, canonicalized
// on load), the 24 tabulated finite-bidegree sets, the bidegree-(3,3)
// hypersurface rule on P^2 x P^2, and the headline counts.  A fingerprint of
// the loaded data is frozen alongside it so any silent edit of the tables is
// caught by verification rather than shipped.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cicy/configuration.hpp"

namespace cicy {

struct ReferenceConfig {
  ConfigurationMatrix matrix;  // canonical
  std::optional<std::string> duplicate_class;
};

struct ReferenceZRow {
  ConfigurationMatrix matrix;  // canonical
  std::vector<Bidegree> z;     // sorted, transposed along with the matrix if needed
};

struct ReferenceCounts {
  int total = 0;
  std::map<int, int> by_codim;
  int with_p1_factor = 0;
  int with_both_factors_ge2 = 0;
  int multi_z_rows = 0;
  int singleton_z = 0;
  int duplicate_pairs = 0;
};

struct PaperGroundTruth {
  std::vector<ReferenceConfig> census_table;
  std::vector<ReferenceZRow> finite_bidegree_table;
  ReferenceZRow hypersurface_rule;
  ReferenceCounts counts;
};

namespace detail {

struct RawConfig {
  int a1, a2;
  std::vector<int> r1, r2;
  const char* label;  // duplicate class or nullptr
};

struct RawZRow {
  int a1, a2;
  std::vector<int> r1, r2;
  std::vector<Bidegree> z;
};

inline ReferenceZRow make_z_row(const RawZRow& raw) {
  ConfigurationMatrix printed({raw.a1, raw.a2}, raw.r1, raw.r2);
  ReferenceZRow row{canonical_form(printed), raw.z};
  if (canonical_form_swaps_factors(printed))
    for (auto& d : row.z) d = {d.d2, d.d1};
  std::sort(row.z.begin(), row.z.end());
  return row;
}

}  // namespace detail

/// FNV-1a over a flat rendering of the tables; layout-independent inputs
/// (matrices canonical, sets sorted) make this reproducible.
inline std::uint64_t ground_truth_fingerprint(const PaperGroundTruth& gt) {
  std::uint64_t h = 1469598103934665603ull;
  const auto feed = [&h](const std::string& s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 1099511628211ull;
    }
  };
  const auto feed_matrix = [&](const ConfigurationMatrix& A) {
    feed(std::to_string(A.dims().a1) + "," + std::to_string(A.dims().a2) + ":" +
         detail::matrix_brief(A));
  };
  for (const auto& row : gt.census_table) {
    feed("A;");
    feed_matrix(row.matrix);
    feed(row.duplicate_class.value_or("-"));
  }
  const auto feed_z_row = [&](const ReferenceZRow& row) {
    feed_matrix(row.matrix);
    for (const auto& d : row.z) feed("(" + std::to_string(d.d1) + "," + std::to_string(d.d2) + ")");
  };
  for (const auto& row : gt.finite_bidegree_table) {
    feed("B;");
    feed_z_row(row);
  }
  feed("H;");
  feed_z_row(gt.hypersurface_rule);
  feed("C;" + std::to_string(gt.counts.total));
  for (const auto& [m, n] : gt.counts.by_codim) feed("|" + std::to_string(m) + ":" + std::to_string(n));
  feed("|" + std::to_string(gt.counts.with_p1_factor) + "|" +
       std::to_string(gt.counts.with_both_factors_ge2) + "|" + std::to_string(gt.counts.multi_z_rows) +
       "|" + std::to_string(gt.counts.singleton_z) + "|" + std::to_string(gt.counts.duplicate_pairs));
  return h;
}

/// Frozen fingerprint of embedded_ground_truth(); checked by verification.
inline constexpr std::uint64_t kEmbeddedGroundTruthFingerprint = 18370178534244727596ull;

inline const PaperGroundTruth& embedded_ground_truth() {
  static const PaperGroundTruth gt = [] {
    using detail::RawConfig;
    using detail::RawZRow;

    // Census, codimension 1 through 5, in published layout.
    const std::vector<RawConfig> census_raw = {
        // m = 1
        {1, 3, {2}, {4}, "I"},
        {2, 2, {3}, {3}, nullptr},
        // m = 2
        {1, 4, {1, 1}, {1, 4}, nullptr},
        {1, 4, {1, 1}, {2, 3}, nullptr},
        {1, 4, {2, 0}, {1, 4}, "II"},
        {1, 4, {2, 0}, {2, 3}, "III"},
        {1, 4, {2, 0}, {3, 2}, "IV"},
        {2, 3, {2, 1}, {0, 4}, "I"},
        {2, 3, {2, 1}, {1, 3}, nullptr},
        {2, 3, {2, 1}, {2, 2}, nullptr},
        {2, 3, {2, 1}, {3, 1}, nullptr},
        {2, 3, {3, 0}, {1, 3}, nullptr},
        {2, 3, {3, 0}, {2, 2}, nullptr},
        // m = 3
        {1, 5, {1, 1, 0}, {1, 1, 4}, nullptr},
        {1, 5, {1, 1, 0}, {1, 2, 3}, nullptr},
        {1, 5, {1, 1, 0}, {1, 3, 2}, nullptr},
        {1, 5, {1, 1, 0}, {2, 2, 2}, nullptr},
        {1, 5, {2, 0, 0}, {1, 2, 3}, "V"},
        {1, 5, {2, 0, 0}, {2, 2, 2}, "VI"},
        {2, 4, {2, 1, 0}, {0, 1, 4}, "II"},
        {2, 4, {2, 1, 0}, {0, 2, 3}, "III"},
        {2, 4, {2, 1, 0}, {0, 3, 2}, "IV"},
        {2, 4, {1, 1, 1}, {1, 3, 1}, nullptr},
        {2, 4, {1, 1, 1}, {2, 1, 2}, nullptr},
        {2, 4, {2, 1, 0}, {1, 1, 3}, nullptr},
        {2, 4, {2, 1, 0}, {1, 2, 2}, nullptr},
        {2, 4, {2, 1, 0}, {2, 1, 2}, nullptr},
        {3, 3, {2, 1, 1}, {0, 1, 3}, nullptr},
        {3, 3, {2, 1, 1}, {1, 1, 2}, nullptr},
        {3, 3, {2, 1, 1}, {2, 1, 1}, nullptr},
        {3, 3, {2, 2, 0}, {1, 0, 3}, nullptr},
        {3, 3, {2, 2, 0}, {1, 1, 2}, nullptr},
        {3, 3, {2, 2, 0}, {2, 0, 2}, nullptr},
        {2, 4, {3, 0, 0}, {1, 2, 2}, nullptr},
        {3, 3, {3, 1, 0}, {0, 1, 3}, nullptr},
        // m = 4
        {1, 6, {1, 1, 0, 0}, {1, 1, 2, 3}, nullptr},
        {1, 6, {1, 1, 0, 0}, {1, 2, 2, 2}, nullptr},
        {1, 6, {2, 0, 0, 0}, {1, 2, 2, 2}, "VII"},
        {2, 5, {2, 1, 0, 0}, {0, 1, 2, 3}, "V"},
        {2, 5, {2, 1, 0, 0}, {0, 2, 2, 2}, "VI"},
        {2, 5, {2, 1, 0, 0}, {1, 1, 2, 2}, nullptr},
        {2, 5, {1, 1, 1, 0}, {1, 1, 2, 2}, nullptr},
        {2, 5, {1, 1, 1, 0}, {1, 1, 1, 3}, nullptr},
        {3, 4, {1, 1, 1, 1}, {2, 1, 1, 1}, nullptr},
        {3, 4, {2, 1, 1, 0}, {0, 1, 1, 3}, nullptr},
        {3, 4, {2, 1, 1, 0}, {0, 1, 2, 2}, nullptr},
        {3, 4, {2, 1, 1, 0}, {1, 1, 1, 2}, nullptr},
        {3, 4, {2, 2, 0, 0}, {0, 1, 2, 2}, nullptr},
        {3, 4, {3, 1, 0, 0}, {0, 1, 2, 2}, nullptr},
        // m = 5
        {1, 7, {1, 1, 0, 0, 0}, {1, 1, 2, 2, 2}, nullptr},
        {2, 6, {2, 1, 0, 0, 0}, {0, 1, 2, 2, 2}, "VII"},
        {3, 5, {1, 1, 1, 1, 0}, {1, 1, 1, 1, 2}, nullptr},
        {4, 4, {1, 1, 1, 1, 1}, {1, 1, 1, 1, 1}, nullptr},
        {2, 6, {1, 1, 1, 0, 0}, {1, 1, 1, 2, 2}, nullptr},
        {3, 5, {2, 1, 1, 0, 0}, {0, 1, 1, 2, 2}, nullptr},
        {4, 4, {2, 1, 1, 1, 0}, {0, 1, 1, 1, 2}, nullptr},
        {4, 4, {2, 2, 1, 0, 0}, {0, 0, 1, 2, 2}, nullptr},
    };

    // Finite-bidegree table: every entry with at least two certified
    // bidegrees and codimension >= 2.
    const std::vector<RawZRow> z_raw = {
        {2, 3, {2, 1}, {0, 4}, {{2, 3}, {2, 4}}},
        {2, 3, {2, 1}, {1, 3}, {{2, 3}, {2, 4}, {3, 3}, {3, 4}}},
        {2, 3, {2, 1}, {2, 2}, {{2, 3}, {2, 4}, {3, 3}, {3, 4}, {4, 3}}},
        {2, 3, {2, 1}, {3, 1}, {{2, 3}, {2, 4}, {3, 3}}},
        {2, 3, {3, 0}, {1, 3}, {{2, 3}, {3, 3}}},
        {2, 3, {3, 0}, {2, 2}, {{2, 3}, {3, 3}}},
        {2, 4, {1, 1, 1}, {1, 3, 1}, {{2, 4}, {2, 5}, {3, 4}}},
        {2, 4, {1, 1, 1}, {2, 1, 2}, {{2, 4}, {2, 5}, {3, 4}}},
        {2, 4, {2, 1, 0}, {1, 1, 3}, {{2, 4}, {3, 4}}},
        {2, 4, {2, 1, 0}, {1, 2, 2}, {{2, 4}, {3, 4}}},
        {2, 4, {2, 1, 0}, {2, 1, 2}, {{2, 4}, {3, 4}}},
        {2, 4, {3, 0, 0}, {1, 2, 2}, {{2, 4}, {3, 4}}},
        {3, 3, {2, 1, 1}, {1, 1, 2}, {{3, 3}, {3, 4}, {4, 3}}},
        {3, 3, {2, 1, 1}, {2, 1, 1}, {{3, 3}, {3, 4}, {4, 3}}},
        {3, 3, {2, 2, 0}, {1, 1, 2}, {{3, 3}, {4, 3}}},
        {3, 3, {2, 1, 1}, {0, 1, 3}, {{3, 3}, {3, 4}}},
        {2, 5, {1, 1, 1, 0}, {1, 1, 1, 3}, {{2, 5}, {3, 5}}},
        {2, 5, {1, 1, 1, 0}, {1, 1, 2, 2}, {{2, 5}, {3, 5}}},
        {2, 5, {2, 1, 0, 0}, {1, 1, 2, 2}, {{2, 5}, {3, 5}}},
        {3, 4, {1, 1, 1, 1}, {2, 1, 1, 1}, {{3, 4}, {3, 5}, {4, 4}}},
        {3, 4, {2, 1, 1, 0}, {1, 1, 1, 2}, {{3, 4}, {4, 4}}},
        {2, 6, {1, 1, 1, 0, 0}, {1, 1, 1, 2, 2}, {{2, 6}, {3, 6}}},
        {3, 5, {1, 1, 1, 1, 0}, {1, 1, 1, 1, 2}, {{3, 5}, {4, 5}}},
        {4, 4, {1, 1, 1, 1, 1}, {1, 1, 1, 1, 1}, {{4, 4}, {4, 5}, {5, 4}}},
    };

    std::vector<ReferenceConfig> census_table;
    census_table.reserve(census_raw.size());
    for (const auto& raw : census_raw)
      census_table.push_back(
          {canonical_form(ConfigurationMatrix({raw.a1, raw.a2}, raw.r1, raw.r2)),
           raw.label ? std::optional<std::string>(raw.label) : std::nullopt});

    std::vector<ReferenceZRow> z_table;
    z_table.reserve(z_raw.size());
    for (const auto& raw : z_raw) z_table.push_back(detail::make_z_row(raw));

    // On the (3,3) hypersurface in P^2 x P^2 the certified set is the full
    // block 2 <= d1, d2 <= 5 minus its far corner.
    RawZRow hyper{2, 2, {3}, {3}, {}};
    for (int d1 = 2; d1 <= 5; ++d1)
      for (int d2 = 2; d2 <= 5; ++d2)
        if (!(d1 == 5 && d2 == 5)) hyper.z.push_back({d1, d2});

    ReferenceCounts counts;
    counts.total = 57;
    counts.by_codim = {{1, 2}, {2, 11}, {3, 22}, {4, 14}, {5, 8}};
    counts.with_p1_factor = 16;
    counts.with_both_factors_ge2 = 41;
    counts.multi_z_rows = 24;
    counts.singleton_z = 16;
    counts.duplicate_pairs = 7;
    return PaperGroundTruth{std::move(census_table), std::move(z_table), detail::make_z_row(hyper),
                            counts};
  }();
  return gt;
}

}  // namespace cicy
