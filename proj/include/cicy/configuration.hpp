#pragma once

// Configuration matrices for Calabi-Yau complete intersections in a product
// of two projective spaces P^a1 x P^a2.
//
// A configuration is a 2 x m matrix of nonnegative integers b_ij; column j
// records the bidegree of the j-th defining hypersurface.  Admissibility:
//
//   * codimension match:  a1 + a2 = m + 3          (threefold)
//   * row sums:           sum_j b_ij = a_i + 1     (vanishing first Chern class)
//   * column sums:        sum_i b_ij >= 2          (columns of sum 1 reduce the
//                                                   ambient; sum 0 is vacuous)
//   * unit-factor columns: a column supported on factor i needs a_i > 1,
//                          else the intersection is reducible
//   * mixed column:       some column must touch both factors, otherwise the
//                          variety splits as a product of lower-dimensional pieces
//   * dimension bounds:   p <= alpha <= 6 and s <= 9, where alpha = sum(a_i - 1),
//                          p = #{a_i = 1}, s = #{a_i > 1}
//
// The type itself only guarantees shape (2 rows of equal positive length,
// entries >= 0); validate_configuration() is the admissibility gate.  That
// split keeps diagnostic predicates such as is_degenerate() expressible on
// inadmissible input.

#include <algorithm>
#include <compare>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cicy {

struct FactorDims {
  int a1 = 0;
  int a2 = 0;

  friend constexpr auto operator<=>(const FactorDims&, const FactorDims&) = default;
};

/// Bidegree (d1, d2) of a curve class: degrees of the two projections.
struct Bidegree {
  int d1 = 0;
  int d2 = 0;

  friend constexpr auto operator<=>(const Bidegree&, const Bidegree&) = default;
};

/// Twist (b1, b2) of a line bundle O(b1, b2) on the ambient product.
struct TwistDegree {
  int b1 = 0;
  int b2 = 0;

  friend constexpr auto operator<=>(const TwistDegree&, const TwistDegree&) = default;
};

enum class ValidationIssue {
  CodimMismatch,
  BoundViolation,
  RowSumViolation,
  ColumnSumViolation,
  UnitFactorColumn,
  ProductSplit,
};

inline const char* to_string(ValidationIssue issue) {
  switch (issue) {
    case ValidationIssue::CodimMismatch: return "CodimMismatch";
    case ValidationIssue::BoundViolation: return "BoundViolation";
    case ValidationIssue::RowSumViolation: return "RowSumViolation";
    case ValidationIssue::ColumnSumViolation: return "ColumnSumViolation";
    case ValidationIssue::UnitFactorColumn: return "UnitFactorColumn";
    case ValidationIssue::ProductSplit: return "ProductSplit";
  }
  return "?";
}

class ConfigurationError : public std::runtime_error {
 public:
  ConfigurationError(ValidationIssue issue, const std::string& what)
      : std::runtime_error(what), issue_(issue) {}

  ValidationIssue issue() const noexcept { return issue_; }

 private:
  ValidationIssue issue_;
};

class ConfigurationMatrix {
 public:
  ConfigurationMatrix(FactorDims dims, std::vector<int> row1, std::vector<int> row2)
      : dims_(dims), rows_{std::move(row1), std::move(row2)} {
    if (rows_[0].empty() || rows_[0].size() != rows_[1].size())
      throw std::invalid_argument("configuration matrix needs two rows of equal positive length");
    for (const auto& row : rows_)
      for (int e : row)
        if (e < 0) throw std::invalid_argument("configuration matrix entries must be nonnegative");
    if (dims_.a1 < 1 || dims_.a2 < 1)
      throw std::invalid_argument("projective factors must have dimension >= 1");
  }

  const FactorDims& dims() const noexcept { return dims_; }
  int cols() const noexcept { return static_cast<int>(rows_[0].size()); }
  int codim() const noexcept { return cols(); }

  const std::vector<int>& row(int i) const { return rows_.at(static_cast<std::size_t>(i)); }
  int entry(int i, int j) const { return rows_.at(static_cast<std::size_t>(i)).at(static_cast<std::size_t>(j)); }

  /// Column j as (top, bottom) = (b_1j, b_2j).
  std::pair<int, int> column(int j) const { return {entry(0, j), entry(1, j)}; }

  int row_sum(int i) const {
    int s = 0;
    for (int e : row(i)) s += e;
    return s;
  }

  int column_sum(int j) const { return entry(0, j) + entry(1, j); }

  friend bool operator==(const ConfigurationMatrix&, const ConfigurationMatrix&) = default;

  /// Ordering for census listings and set containers: factor dimensions first,
  /// then row-major lexicographic comparison of the entries.
  friend bool operator<(const ConfigurationMatrix& x, const ConfigurationMatrix& y) {
    if (x.dims_ != y.dims_) return x.dims_ < y.dims_;
    return x.rows_ < y.rows_;
  }

 private:
  FactorDims dims_;
  std::vector<std::vector<int>> rows_;
};

/// Admissibility bound on the ambient factors alone: p <= alpha <= 6 and
/// s <= 9, with alpha = sum(a_i - 1), p = #{a_i = 1}, s = #{a_i > 1}.
/// Independent of the matrix entries.  Accepts any number of factors as a
/// validation helper; everything else in this library works with exactly two.
inline bool codimension_bound_check(const std::vector<int>& factor_dims) {
  int alpha = 0, p = 0, s = 0;
  for (int a : factor_dims) {
    alpha += a - 1;
    ++(a == 1 ? p : s);
  }
  return p <= alpha && alpha <= 6 && s <= 9;
}

inline bool codimension_bound_check(FactorDims dims) {
  return codimension_bound_check(std::vector<int>{dims.a1, dims.a2});
}

/// True iff some defining hypersurface has total degree 1: the intersection
/// then lives in a smaller ambient and the configuration is redundant.
inline bool is_degenerate(const ConfigurationMatrix& A) {
  for (int j = 0; j < A.cols(); ++j)
    if (A.column_sum(j) == 1) return true;
  return false;
}

namespace detail {

inline std::string matrix_brief(const ConfigurationMatrix& A) {
  std::string s = "[";
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < A.cols(); ++j) {
      s += std::to_string(A.entry(i, j));
      if (j + 1 < A.cols()) s += ",";
    }
    s += i == 0 ? " ; " : "]";
  }
  return s;
}

}  // namespace detail

/// Full admissibility check.  Returns the (unmodified) matrix so callers can
/// chain construction and validation; throws ConfigurationError otherwise.
inline ConfigurationMatrix validate_configuration(FactorDims dims, std::vector<int> row1,
                                                  std::vector<int> row2) {
  ConfigurationMatrix A(dims, std::move(row1), std::move(row2));

  const auto fail = [&](ValidationIssue issue, const std::string& msg) {
    throw ConfigurationError(issue, msg + " in " + detail::matrix_brief(A) + " on (" +
                                        std::to_string(dims.a1) + "," + std::to_string(dims.a2) + ")");
  };

  if (dims.a1 + dims.a2 != A.cols() + 3)
    fail(ValidationIssue::CodimMismatch,
         "a1 + a2 must equal m + 3 for a threefold, got a1+a2=" + std::to_string(dims.a1 + dims.a2) +
             " with m=" + std::to_string(A.cols()));
  if (!codimension_bound_check(dims))
    fail(ValidationIssue::BoundViolation, "ambient factors violate p <= alpha <= 6, s <= 9");
  for (int i = 0; i < 2; ++i) {
    const int a_i = i == 0 ? dims.a1 : dims.a2;
    if (A.row_sum(i) != a_i + 1)
      fail(ValidationIssue::RowSumViolation, "row " + std::to_string(i + 1) + " must sum to " +
                                                 std::to_string(a_i + 1) + ", got " +
                                                 std::to_string(A.row_sum(i)));
  }
  for (int j = 0; j < A.cols(); ++j)
    if (A.column_sum(j) < 2)
      fail(ValidationIssue::ColumnSumViolation,
           "column " + std::to_string(j + 1) + " has sum " + std::to_string(A.column_sum(j)));
  for (int j = 0; j < A.cols(); ++j) {
    auto [top, bottom] = A.column(j);
    if (bottom == 0 && dims.a1 == 1)
      fail(ValidationIssue::UnitFactorColumn,
           "column " + std::to_string(j + 1) + " is supported on a P^1 factor");
    if (top == 0 && dims.a2 == 1)
      fail(ValidationIssue::UnitFactorColumn,
           "column " + std::to_string(j + 1) + " is supported on a P^1 factor");
  }
  bool mixed = false;
  for (int j = 0; j < A.cols() && !mixed; ++j) mixed = A.entry(0, j) > 0 && A.entry(1, j) > 0;
  if (!mixed)
    fail(ValidationIssue::ProductSplit, "no column touches both factors; the variety splits");

  return A;
}

inline ConfigurationMatrix validate_configuration(const ConfigurationMatrix& A) {
  return validate_configuration(A.dims(), A.row(0), A.row(1));
}

/// Non-throwing admissibility predicate (used in enumeration inner loops).
inline bool is_valid_configuration(const ConfigurationMatrix& A,
                                   ValidationIssue* issue = nullptr) noexcept {
  try {
    validate_configuration(A);
    return true;
  } catch (const ConfigurationError& e) {
    if (issue) *issue = e.issue();
    return false;
  } catch (const std::exception&) {
    return false;
  }
}

namespace detail {

/// Columns sorted lexicographically decreasing, optionally with the rows (and
/// factor dimensions) exchanged first.
inline ConfigurationMatrix column_sorted(const ConfigurationMatrix& A, bool swap_rows) {
  std::vector<std::pair<int, int>> cols(static_cast<std::size_t>(A.cols()));
  for (int j = 0; j < A.cols(); ++j) {
    auto [top, bottom] = A.column(j);
    cols[static_cast<std::size_t>(j)] = swap_rows ? std::pair{bottom, top} : std::pair{top, bottom};
  }
  std::sort(cols.begin(), cols.end(), std::greater<>());
  std::vector<int> r1(cols.size()), r2(cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    r1[j] = cols[j].first;
    r2[j] = cols[j].second;
  }
  const FactorDims dims =
      swap_rows ? FactorDims{A.dims().a2, A.dims().a1} : A.dims();
  return ConfigurationMatrix(dims, std::move(r1), std::move(r2));
}

}  // namespace detail

/// Canonical representative of the symmetry orbit (row swap combined with the
/// factor swap, column permutations):
///   * factors ordered a1 <= a2,
///   * columns sorted lexicographically decreasing by (b_1j, b_2j),
///   * for a1 == a2, the orientation whose (row1, row2) tuple is
///     lexicographically greatest wins; the first row then dominates the
///     second, so equal-dimension representatives are unique.
inline ConfigurationMatrix canonical_form(const ConfigurationMatrix& A) {
  if (A.dims().a1 < A.dims().a2) return detail::column_sorted(A, false);
  if (A.dims().a1 > A.dims().a2) return detail::column_sorted(A, true);
  return std::max(detail::column_sorted(A, false), detail::column_sorted(A, true));
}

/// True when moving A to canonical form exchanges the roles of the factors
/// (and therefore transposes any attached bidegree data).
inline bool canonical_form_swaps_factors(const ConfigurationMatrix& A) {
  if (A.dims().a1 != A.dims().a2) return A.dims().a1 > A.dims().a2;
  return canonical_form(A) != detail::column_sorted(A, false);
}

inline bool is_canonical(const ConfigurationMatrix& A) { return canonical_form(A) == A; }

}  // namespace cicy
