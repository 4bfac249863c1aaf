#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "cech_oracle.hpp"
#include "cicy/census.hpp"
#include "cicy/cohomology.hpp"
#include "cicy/finiteness.hpp"

using namespace cicy;

TEST_CASE("binomial coefficients are exact and checked", "[cohomology]") {
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(3, 2) == 3);
  CHECK(binomial(19, 7) == 50388);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(5, -1) == 0);
  CHECK(binomial(-2, 0) == 0);
  CHECK(binomial(62, 31) == 465428353255261088LL);
  CHECK_THROWS_AS(binomial(70, 35), std::overflow_error);
}

TEST_CASE("line bundle cohomology on a single factor", "[cohomology]") {
  CHECK(h_projective_space(2, 1, 0) == 3);
  CHECK(h_projective_space(3, 5, 1) == 0);
  CHECK(h_projective_space(1, -2, 1) == 1);
  CHECK(h_projective_space(3, -4, 3) == 1);
  CHECK(h_projective_space(3, -1, 0) == 0);
  CHECK(h_projective_space(3, -1, 3) == 0);
  CHECK_THROWS_AS(h_projective_space(0, 1, 0), std::invalid_argument);
}

TEST_CASE("single-factor dimensions match the independent Cech oracle", "[cohomology]") {
  for (int n = 1; n <= 7; ++n)
    for (int b = -12; b <= 12; ++b)
      for (int p = 0; p <= n; ++p) {
        INFO("n=" << n << " b=" << b << " p=" << p);
        CHECK(h_projective_space(n, b, p) == cech::h_oracle(n, b, p));
      }
}

TEST_CASE("Serre duality holds on each factor", "[cohomology]") {
  for (int n = 1; n <= 7; ++n)
    for (int b = -12; b <= 12; ++b)
      for (int p = 0; p <= n; ++p) {
        INFO("n=" << n << " b=" << b << " p=" << p);
        CHECK(h_projective_space(n, b, p) == h_projective_space(n, -b - n - 1, n - p));
      }
}

TEST_CASE("product cohomology follows the Kunneth decomposition", "[cohomology]") {
  CHECK(h_product({2, 3}, {1, 1}, 0) == 12);
  CHECK(h_product({1, 1}, {-2, -2}, 2) == 1);
  CHECK(h_product({2, 2}, {3, 3}, 0) == 100);

  // against the oracle, convolved degree by degree
  for (int a1 = 1; a1 <= 4; ++a1)
    for (int a2 = a1; a2 <= 4; ++a2)
      for (int b1 = -7; b1 <= 7; ++b1)
        for (int b2 = -7; b2 <= 7; ++b2)
          for (int p = 0; p <= a1 + a2; ++p) {
            std::int64_t expect = 0;
            for (int p1 = 0; p1 <= std::min(p, a1); ++p1)
              if (p - p1 <= a2)
                expect += cech::h_oracle(a1, b1, p1) * cech::h_oracle(a2, b2, p - p1);
            INFO("a=(" << a1 << "," << a2 << ") b=(" << b1 << "," << b2 << ") p=" << p);
            CHECK(h_product({a1, a2}, {b1, b2}, p) == expect);
          }
}

TEST_CASE("product cohomology is symmetric under factor swap", "[cohomology]") {
  for (int a1 = 1; a1 <= 5; ++a1)
    for (int a2 = 1; a2 <= 5; ++a2)
      for (int b1 = -6; b1 <= 6; ++b1)
        for (int b2 = -6; b2 <= 6; ++b2)
          for (int p = 0; p <= a1 + a2; ++p)
            CHECK(h_product({a1, a2}, {b1, b2}, p) == h_product({a2, a1}, {b2, b1}, p));
}

TEST_CASE("nonnegative twists concentrate in degree zero with the right Euler characteristic",
          "[cohomology]") {
  for (const auto& entry : enumerate_census(5).entries) {
    const FactorDims a = entry.matrix.dims();
    for (int b1 = 0; b1 <= 8; ++b1)
      for (int b2 = 0; b2 <= 8; ++b2) {
        std::int64_t euler = 0;
        for (int p = 0; p <= a.a1 + a.a2; ++p) {
          const std::int64_t h = h_product(a, {b1, b2}, p);
          if (p > 0) CHECK(h == 0);
          euler += (p % 2 == 0 ? h : -h);
        }
        CHECK(euler == binomial(a.a1 + b1, a.a1) * binomial(a.a2 + b2, a.a2));
      }
  }
}

TEST_CASE("restriction degree is the bilinear pairing", "[cohomology]") {
  CHECK(curve_restriction_degree({2, 3}, {1, 3}) == 11);
  CHECK(curve_restriction_degree({5, 9}, {0, 0}) == 0);
  for (int b1 = 0; b1 <= 5; ++b1)
    for (int b2 = 0; b2 <= 5; ++b2)
      CHECK(curve_restriction_degree({1, 1}, {b1, b2}) == b1 + b2);
}

TEST_CASE("ideal-sheaf section counts evaluate the closed formula", "[cohomology]") {
  CHECK(h0_ideal_sheaf({2, 3}, {2, 3}, {1, 3}).value == 48);
  CHECK(h0_ideal_sheaf({2, 2}, {2, 2}, {3, 3}).value == 87);
  CHECK(h0_ideal_sheaf({4, 4}, {7, 2}, {0, 0}).value == 0);
  CHECK_FALSE(h0_ideal_sheaf({2, 3}, {2, 3}, {1, 3}).negative_warning);

  // curves of bidegree (1,1): a hyperplane section count independent of which
  // factors, (a1+1)(a2+1) - 3
  for (int a1 = 1; a1 <= 6; ++a1)
    for (int a2 = 1; a2 <= 6; ++a2)
      CHECK(h0_ideal_sheaf({a1, a2}, {1, 1}, {1, 1}).value == (a1 + 1) * (a2 + 1) - 3);

  CHECK_THROWS_AS(h0_ideal_sheaf({2, 3}, {2, 3}, {-1, 3}), std::invalid_argument);
  CHECK_THROWS_AS(h0_ideal_sheaf({2, 3}, {2, 3}, {1, 3}, -1), std::invalid_argument);
}

TEST_CASE("negative section counts are reported, not clamped", "[cohomology]") {
  const auto warned = h0_ideal_sheaf({2, 2}, {7, 0}, {1, 0});
  CHECK(warned.value == -5);
  CHECK(warned.negative_warning);
  // a supplied h^1 owns the consistency question; no warning either way
  const auto corrected = h0_ideal_sheaf({2, 2}, {7, 0}, {1, 0}, 5);
  CHECK(corrected.value == 0);
  CHECK_FALSE(corrected.negative_warning);
}

TEST_CASE("section counts can drop in the twist without a vanishing certificate",
          "[cohomology]") {
  // the raw formula is NOT monotone in b: more sections upstairs can be
  // outrun by the degree growth on a lopsided curve
  CHECK(h0_ideal_sheaf({2, 2}, {7, 0}, {0, 1}).value == 2);
  CHECK(h0_ideal_sheaf({2, 2}, {7, 0}, {1, 1}).value == 1);
}

TEST_CASE("twist monotonicity holds throughout the certified regime", "[cohomology]") {
  std::mt19937 rng(987654321);
  std::uniform_int_distribution<int> dim_dist(2, 7);
  std::uniform_int_distribution<int> excess_dist(0, 6);
  std::uniform_int_distribution<int> slack_dist(-1, 4);

  int certified = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const FactorDims a{dim_dist(rng), dim_dist(rng)};
    const Bidegree d{a.a1 + excess_dist(rng), a.a2 + excess_dist(rng)};
    const TwistDegree b{std::max(0, d.d2 - a.a2 + 1 + slack_dist(rng)),
                        std::max(0, d.d1 - a.a1 + 1 + slack_dist(rng))};
    if (h1_vanishing_by_regularity(a, d, b) != H1Vanishing::Vanishes) continue;
    ++certified;
    const auto base = h0_ideal_sheaf(a, d, b);
    CHECK_FALSE(base.negative_warning);
    CHECK(h0_ideal_sheaf(a, d, {b.b1 + 1, b.b2}).value >= base.value);
    CHECK(h0_ideal_sheaf(a, d, {b.b1, b.b2 + 1}).value >= base.value);
  }
  CHECK(certified > 300);  // the sampler covers the regime, not just its complement
}

TEST_CASE("degenerate-curve twist reduction lands in a cohomology-free zone", "[cohomology]") {
  CHECK(degenerate_twist_reduction({1, 3}) == TwistDegree{0, 3});
  CHECK(degenerate_twist_reduction({0, 0}) == TwistDegree{-1, 0});
  CHECK(degenerate_twist_reduction({2, 2}) == TwistDegree{1, 2});

  for (const auto& entry : enumerate_census(5).entries) {
    const FactorDims a = entry.matrix.dims();
    for (int b1 = 0; b1 <= 6; ++b1)
      for (int b2 = 0; b2 <= 6; ++b2) {
        const TwistDegree reduced = degenerate_twist_reduction({b1, b2});
        if (reduced.b1 < -1 || reduced.b2 < -1) continue;
        CHECK(h_product(a, reduced, 1) == 0);
        CHECK(h_product(a, reduced, 2) == 0);
      }
  }
}
