#ifndef SPINOR_FORGE_LINALG_HPP
#define SPINOR_FORGE_LINALG_HPP

#include "spinor_forge/rational.hpp"

#include <optional>
#include <span>
#include <vector>

namespace spinor_forge {

/// Incremental fraction-free row echelon form over Z.
///
/// Rational rows are cleared of denominators on entry; every stored row is
/// primitive (content 1) with a positive pivot, and elimination is
/// r <- p*r - r[c]*row followed by content removal, so no fractions appear.
class FractionFreeEchelon {
public:
  explicit FractionFreeEchelon(int columns) : columns_(columns) {}

  int columns() const { return columns_; }
  int rank() const { return static_cast<int>(rows_.size()); }

  /// Adds a row; returns true when the rank grew.
  bool add_row(std::span<const Rational> row);
  template <class Derived>
  bool add_row(const Eigen::MatrixBase<Derived>& row) {
    std::vector<Rational> tmp(row.size());
    for (Eigen::Index j = 0; j < row.size(); ++j) tmp[j] = row(j);
    return add_row(std::span<const Rational>(tmp));
  }

  /// True when the row lies in the current row space.
  bool contains(std::span<const Rational> row) const;

  std::vector<int> pivot_columns() const;

  /// Basis of {x : rows * x = 0} as columns, one per free column, in reduced
  /// form (x_free = 1 for its own free column, 0 for the others).
  RationalMatrix nullspace() const;

private:
  using IntRow = std::vector<mpz_class>;

  IntRow to_integer_row(std::span<const Rational> row) const;
  /// Reduces against the stored rows; returns the pivot column of the residual or -1.
  int reduce(IntRow& row) const;

  int columns_;
  std::vector<IntRow> rows_;  // sorted by pivot column
  std::vector<int> pivots_;
};

/// Null space of A (columns are basis vectors).
template <class Derived>
RationalMatrix nullspace(const Eigen::MatrixBase<Derived>& A) {
  FractionFreeEchelon ech(static_cast<int>(A.cols()));
  for (Eigen::Index i = 0; i < A.rows(); ++i) ech.add_row(A.row(i));
  return ech.nullspace();
}

template <class Derived>
int rank(const Eigen::MatrixBase<Derived>& A) {
  FractionFreeEchelon ech(static_cast<int>(A.cols()));
  for (Eigen::Index i = 0; i < A.rows(); ++i) ech.add_row(A.row(i));
  return ech.rank();
}

/// Column spaces of A and B coincide.
bool same_column_span(const RationalMatrix& A, const RationalMatrix& B);

Rational determinant(const RationalMatrix& A);
/// Exact inverse; throws DivisionByZero when A is singular.
RationalMatrix inverse(const RationalMatrix& A);
/// A solution of A x = b, if one exists.
std::optional<RationalVector> solve(const RationalMatrix& A, const RationalVector& b);

}  // namespace spinor_forge

#endif  // SPINOR_FORGE_LINALG_HPP
