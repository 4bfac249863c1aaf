#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <set>
#include <string>

#include "cicy/census.hpp"
#include "cicy/serialization.hpp"

using namespace cicy;

TEST_CASE("census sizes by codimension", "[census]") {
  CHECK(enumerate_census(1).size() == 2);
  CHECK(enumerate_census(2).size() == 13);
  const auto census = enumerate_census(5);
  CHECK(census.size() == 57);
  CHECK(census.counts_by_codim == std::map<int, int>{{1, 2}, {2, 11}, {3, 22}, {4, 14}, {5, 8}});
  CHECK_THROWS_AS(enumerate_census(0), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_census(6), std::invalid_argument);
}

TEST_CASE("census entries are canonical, valid, nondegenerate, and ordered", "[census]") {
  const auto census = enumerate_census(5);
  for (std::size_t i = 0; i < census.entries.size(); ++i) {
    const auto& entry = census.entries[i];
    REQUIRE_NOTHROW(validate_configuration(entry.matrix));
    CHECK(is_canonical(entry.matrix));
    CHECK_FALSE(is_degenerate(entry.matrix));
    CHECK(entry.codim == entry.matrix.codim());
    CHECK(entry.has_p1_factor == (entry.matrix.dims().a1 == 1));
    CHECK(entry.z_set.has_value() == (entry.matrix.dims().a1 >= 2));
    if (i > 0) {
      const auto& prev = census.entries[i - 1];
      CHECK((prev.codim < entry.codim ||
             (prev.codim == entry.codim && prev.matrix < entry.matrix)));
    }
  }
}

TEST_CASE("smaller censuses are prefixes of larger ones up to reordering", "[census]") {
  for (int k = 1; k < 5; ++k) {
    const auto small = enumerate_census(k);
    const auto large = enumerate_census(k + 1);
    std::set<ConfigurationMatrix> big_set;
    for (const auto& entry : large.entries) big_set.insert(entry.matrix);
    for (const auto& entry : small.entries) CHECK(big_set.count(entry.matrix) == 1);
  }
}

TEST_CASE("sequential and parallel enumeration agree byte for byte", "[census]") {
  const auto seq = enumerate_census(5, ExecutionMode::Sequential);
  const auto par = enumerate_census(5, ExecutionMode::Parallel);
  CHECK(census_to_json(seq).dump(2) == census_to_json(par).dump(2));
}

TEST_CASE("doubling a P^1 factor yields the documented partners", "[census]") {
  const auto partner = p1_doubling_partner(ConfigurationMatrix({1, 3}, {2}, {4}));
  REQUIRE(partner.has_value());
  CHECK(*partner == ConfigurationMatrix({2, 3}, {2, 1}, {0, 4}));

  CHECK_FALSE(p1_doubling_partner(ConfigurationMatrix({2, 2}, {3}, {3})).has_value());
  CHECK_FALSE(p1_doubling_partner(ConfigurationMatrix({1, 4}, {1, 1}, {1, 4})).has_value());

  const auto back = p1_doubling_partner(ConfigurationMatrix({2, 3}, {2, 1}, {0, 4}));
  REQUIRE(back.has_value());
  CHECK(*back == ConfigurationMatrix({1, 3}, {2}, {4}));
}

TEST_CASE("doubling is an involution wherever it is defined", "[census]") {
  int defined = 0;
  for (const auto& entry : enumerate_census(5).entries) {
    const auto partner = p1_doubling_partner(entry.matrix);
    if (!partner) continue;
    ++defined;
    REQUIRE_NOTHROW(validate_configuration(*partner));
    CHECK_FALSE(is_degenerate(*partner));
    const auto back = p1_doubling_partner(*partner);
    REQUIRE(back.has_value());
    CHECK(*back == entry.matrix);
  }
  CHECK(defined == 14);  // both members of each of the 7 pairs
}

TEST_CASE("exactly seven duplicate pairs, labeled consistently", "[census]") {
  const auto census = enumerate_census(5);
  const auto pairs = duplicate_pairs(census);
  REQUIRE(pairs.size() == 7);

  std::map<std::string, int> label_count;
  for (const auto& entry : census.entries)
    if (entry.duplicate_class) ++label_count[*entry.duplicate_class];
  CHECK(label_count ==
        std::map<std::string, int>{{"I", 2}, {"II", 2}, {"III", 2}, {"IV", 2}, {"V", 2}, {"VI", 2}, {"VII", 2}});

  for (const auto& [left, right] : pairs) {
    REQUIRE(left.duplicate_class.has_value());
    CHECK(left.duplicate_class == right.duplicate_class);
    CHECK(left.matrix.dims().a1 == 1);
    CHECK(right.matrix.dims().a1 == 2);
    CHECK(p1_doubling_partner(left.matrix) == right.matrix);
  }

  const ConfigurationMatrix quadric_p1({1, 3}, {2}, {4});
  for (const auto& [left, right] : pairs)
    if (left.matrix == quadric_p1) CHECK(right.matrix == ConfigurationMatrix({2, 3}, {2, 1}, {0, 4}));

  CHECK(duplicate_pairs(enumerate_census(1)).empty());  // partners live one codimension up
}

TEST_CASE("partition counts split the census as published", "[census]") {
  const auto census = enumerate_census(5);
  const auto part = census_partition_report(census);
  CHECK(part.total == 57);
  CHECK(part.with_p1_factor == 16);
  CHECK(part.with_both_factors_ge2 == 41);
  CHECK(part.multi_z_rows == 24);
  CHECK(part.singleton_z == 16);
  CHECK(part.codim1_hypersurface == 1);
  CHECK(part.duplicate_pair_count == 7);
  CHECK(part.with_p1_factor + part.with_both_factors_ge2 == part.total);
  CHECK(part.multi_z_rows + part.singleton_z + part.codim1_hypersurface ==
        part.with_both_factors_ge2);

  // the sixteen singletons: certified set collapses to the corner, never in
  // codimension one
  for (const auto& entry : census.entries) {
    if (!entry.z_set || entry.z_set->size() != 1) continue;
    CHECK(entry.codim > 1);
    CHECK(entry.z_set->front() == Bidegree{entry.matrix.dims().a1, entry.matrix.dims().a2});
  }
}
