#pragma once

// Exact sheaf-cohomology dimensions for line bundles O(b) on P^n and
// O(b1, b2) on P^a1 x P^a2, plus the section-count bookkeeping used by the
// curve-counting arguments.  Everything is closed-form integer arithmetic:
//
//   h^0(P^n, O(b)) = C(n+b, n)      for b >= 0
//   h^n(P^n, O(b)) = C(-b-1, n)     for b <= -n-1
//   all other (p, b) vanish, and products follow by the Kunneth formula.
//
// Binomials are overflow-checked and abort the computation with
// std::overflow_error rather than wrapping.

#include <cstdint>
#include <limits>
#include <stdexcept>

#include "cicy/configuration.hpp"

namespace cicy {

/// C(n, k) as a checked 64-bit integer; 0 outside 0 <= k <= n.
inline std::int64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  constexpr auto limit =
      static_cast<unsigned __int128>(std::numeric_limits<std::int64_t>::max());
  unsigned __int128 result = 1;
  for (int i = 1; i <= k; ++i) {
    // exact: C(n-k+i-1, i-1) * (n-k+i) == i * C(n-k+i, i); the partial values
    // C(n-k+i, i) are nondecreasing in i, so checking after each division
    // throws exactly when the final coefficient does not fit.  The wide
    // intermediate keeps coefficients like C(62, 31) computable even though
    // the product before division tops 64 bits.
    result = result * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    if (result > limit) throw std::overflow_error("binomial coefficient exceeds 64 bits");
  }
  return static_cast<std::int64_t>(result);
}

/// h^p(P^n, O(b)).
inline std::int64_t h_projective_space(int n, int b, int p) {
  if (n < 1) throw std::invalid_argument("projective space dimension must be >= 1");
  if (p == 0 && b >= 0) return binomial(n + b, n);
  if (p == n && b <= -n - 1) return binomial(-b - 1, n);
  return 0;
}

struct CohomologyQuery {
  FactorDims ambient;
  TwistDegree twist;
  int degree = 0;  // cohomological degree p, 0 <= p <= a1 + a2
};

/// h^p(P^a1 x P^a2, O(b1, b2)) via the Kunneth decomposition.
inline std::int64_t h_product(const CohomologyQuery& q) {
  std::int64_t total = 0;
  for (int p1 = 0; p1 <= q.ambient.a1; ++p1) {
    const int p2 = q.degree - p1;
    if (p2 < 0 || p2 > q.ambient.a2) continue;
    const std::int64_t left = h_projective_space(q.ambient.a1, q.twist.b1, p1);
    if (left == 0) continue;
    const std::int64_t right = h_projective_space(q.ambient.a2, q.twist.b2, p2);
    std::int64_t term;
    if (__builtin_mul_overflow(left, right, &term))
      throw std::overflow_error("cohomology dimension exceeds 64 bits");
    total += term;
  }
  return total;
}

inline std::int64_t h_product(FactorDims ambient, TwistDegree twist, int degree) {
  return h_product(CohomologyQuery{ambient, twist, degree});
}

/// Degree of O(b1, b2) restricted to a rational curve of bidegree (d1, d2):
/// b1*d1 + b2*d2.
inline std::int64_t curve_restriction_degree(Bidegree d, TwistDegree b) {
  return static_cast<std::int64_t>(b.b1) * d.d1 + static_cast<std::int64_t>(b.b2) * d.d2;
}

struct IdealSheafQuery {
  FactorDims ambient;
  Bidegree curve;
  TwistDegree twist;
};

struct IdealSheafSections {
  std::int64_t value = 0;
  /// Set when the count came out negative with vanishing h^1 — the caller's
  /// vanishing assumption cannot hold for this query.  The value is reported
  /// as computed, never clamped.
  bool negative_warning = false;
};

/// Sections of the ideal sheaf of a rational curve of bidegree (d1, d2)
/// twisted by O(b1, b2), given the h^1 correction term:
///
///   h^0(I_C(b)) = h^0(O(b)) - h^0(C, O(b)|_C) + h^1(I_C(b))
///               = C(a1+b1, a1) * C(a2+b2, a2) - 1 - (b1 d1 + b2 d2) + h1
///
/// (a rational curve has h^0 of a degree-e bundle equal to e + 1).
inline IdealSheafSections h0_ideal_sheaf(const IdealSheafQuery& q, std::int64_t h1 = 0) {
  if (q.twist.b1 < 0 || q.twist.b2 < 0)
    throw std::invalid_argument("ideal-sheaf section count expects a nonnegative twist");
  if (h1 < 0) throw std::invalid_argument("h1 correction must be nonnegative");
  std::int64_t ambient_sections;
  if (__builtin_mul_overflow(binomial(q.ambient.a1 + q.twist.b1, q.ambient.a1),
                             binomial(q.ambient.a2 + q.twist.b2, q.ambient.a2), &ambient_sections))
    throw std::overflow_error("section count exceeds 64 bits");
  const std::int64_t on_curve = 1 + curve_restriction_degree(q.curve, q.twist);
  IdealSheafSections out;
  out.value = ambient_sections - on_curve + h1;
  out.negative_warning = out.value < 0 && h1 == 0;
  return out;
}

inline IdealSheafSections h0_ideal_sheaf(FactorDims ambient, Bidegree curve, TwistDegree twist,
                                         std::int64_t h1 = 0) {
  return h0_ideal_sheaf(IdealSheafQuery{ambient, curve, twist}, h1);
}

/// Twist drop used when trading a degenerate curve (contracted first factor)
/// for its image: O(b1, b2) data descends with b1 lowered by one.
inline TwistDegree degenerate_twist_reduction(TwistDegree b) { return {b.b1 - 1, b.b2}; }

}  // namespace cicy
