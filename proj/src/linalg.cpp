#include "spinor_forge/linalg.hpp"

#include "spinor_forge/error.hpp"

#include <algorithm>

namespace spinor_forge {

namespace {

void make_primitive(std::vector<mpz_class>& row, int pivot) {
  mpz_class g = 0;
  for (const auto& x : row)
    if (x != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g == 0) return;
  if (row[pivot] < 0) g = -g;
  if (g == 1) return;
  for (auto& x : row)
    if (x != 0) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

int leading(const std::vector<mpz_class>& row) {
  for (std::size_t j = 0; j < row.size(); ++j)
    if (row[j] != 0) return static_cast<int>(j);
  return -1;
}

}  // namespace

FractionFreeEchelon::IntRow FractionFreeEchelon::to_integer_row(std::span<const Rational> row) const {
  if (static_cast<int>(row.size()) != columns_) throw Error(ErrorCode::ShapeMismatch, "row length differs from column count");
  mpz_class lcm = 1;
  for (const Rational& x : row)
    if (!x.is_zero()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.raw().get_den_mpz_t());
  IntRow out(row.size());
  for (std::size_t j = 0; j < row.size(); ++j) {
    if (row[j].is_zero()) continue;
    out[j] = row[j].raw().get_num() * (lcm / row[j].raw().get_den());
  }
  return out;
}

int FractionFreeEchelon::reduce(IntRow& row) const {
  for (std::size_t s = 0; s < rows_.size(); ++s) {
    const int c = pivots_[s];
    if (row[c] == 0) continue;
    const IntRow& p = rows_[s];
    const mpz_class a = p[c];
    const mpz_class b = row[c];
    for (int j = 0; j < columns_; ++j) {
      if (p[j] == 0) {
        if (row[j] != 0) row[j] *= a;
      } else {
        row[j] = a * row[j] - b * p[j];
      }
    }
    const int lead = leading(row);
    if (lead < 0) return -1;
    make_primitive(row, lead);
  }
  return leading(row);
}

bool FractionFreeEchelon::add_row(std::span<const Rational> row) {
  IntRow r = to_integer_row(row);
  const int lead = reduce(r);
  if (lead < 0) return false;
  make_primitive(r, lead);
  const auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), lead) - pivots_.begin();
  pivots_.insert(pivots_.begin() + pos, lead);
  rows_.insert(rows_.begin() + pos, std::move(r));
  return true;
}

bool FractionFreeEchelon::contains(std::span<const Rational> row) const {
  IntRow r = to_integer_row(row);
  return reduce(r) < 0;
}

std::vector<int> FractionFreeEchelon::pivot_columns() const { return pivots_; }

RationalMatrix FractionFreeEchelon::nullspace() const {
  // Back-substitute to reduced form: clear every pivot column above its pivot.
  std::vector<IntRow> red = rows_;
  for (std::size_t s = red.size(); s-- > 0;) {
    const int c = pivots_[s];
    for (std::size_t t = 0; t < s; ++t) {
      if (red[t][c] == 0) continue;
      const mpz_class a = red[s][c];
      const mpz_class b = red[t][c];
      for (int j = 0; j < columns_; ++j) red[t][j] = a * red[t][j] - b * red[s][j];
      make_primitive(red[t], pivots_[t]);
    }
  }
  std::vector<bool> is_pivot(columns_, false);
  for (int c : pivots_) is_pivot[c] = true;
  std::vector<int> free_cols;
  for (int j = 0; j < columns_; ++j)
    if (!is_pivot[j]) free_cols.push_back(j);

  RationalMatrix basis = zero_matrix(columns_, static_cast<Eigen::Index>(free_cols.size()));
  for (std::size_t f = 0; f < free_cols.size(); ++f) {
    const int fc = free_cols[f];
    basis(fc, f) = Rational(1);
    for (std::size_t s = 0; s < red.size(); ++s) {
      if (red[s][fc] == 0) continue;
      basis(pivots_[s], f) = -Rational(red[s][fc], red[s][pivots_[s]]);
    }
  }
  return basis;
}

bool same_column_span(const RationalMatrix& A, const RationalMatrix& B) {
  if (A.rows() != B.rows()) return false;
  const RationalMatrix At = A.transpose();
  const RationalMatrix Bt = B.transpose();
  FractionFreeEchelon ea(static_cast<int>(A.rows()));
  FractionFreeEchelon eb(static_cast<int>(A.rows()));
  for (Eigen::Index i = 0; i < At.rows(); ++i) ea.add_row(At.row(i));
  for (Eigen::Index i = 0; i < Bt.rows(); ++i) eb.add_row(Bt.row(i));
  if (ea.rank() != eb.rank()) return false;
  for (Eigen::Index i = 0; i < Bt.rows(); ++i)
    if (ea.add_row(Bt.row(i))) return false;
  return true;
}

// Bareiss elimination with row swaps; exact integer division at every step.
Rational determinant(const RationalMatrix& A) {
  if (A.rows() != A.cols()) throw Error(ErrorCode::ShapeMismatch, "determinant of a non-square matrix");
  const Eigen::Index n = A.rows();
  if (n == 0) return Rational(1);
  mpz_class den = 1;
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      if (!A(i, j).is_zero()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), A(i, j).raw().get_den_mpz_t());
  std::vector<std::vector<mpz_class>> M(n, std::vector<mpz_class>(n));
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) M[i][j] = A(i, j).raw().get_num() * (den / A(i, j).raw().get_den());
  int sign = 1;
  mpz_class prev = 1;
  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index p = k;
    while (p < n && M[p][k] == 0) ++p;
    if (p == n) return Rational(0);
    if (p != k) {
      std::swap(M[p], M[k]);
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        M[i][j] = M[k][k] * M[i][j] - M[i][k] * M[k][j];
        mpz_divexact(M[i][j].get_mpz_t(), M[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      M[i][k] = 0;
    }
    prev = M[k][k];
  }
  mpz_class scale;
  mpz_pow_ui(scale.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(mpz_class(sign * M[n - 1][n - 1]), scale);
}

RationalMatrix inverse(const RationalMatrix& A) {
  if (A.rows() != A.cols()) throw Error(ErrorCode::ShapeMismatch, "inverse of a non-square matrix");
  const Eigen::Index n = A.rows();
  RationalMatrix M = A;
  RationalMatrix I = identity_matrix(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index p = k;
    while (p < n && M(p, k).is_zero()) ++p;
    if (p == n) throw Error(ErrorCode::DivisionByZero, "matrix is singular");
    M.row(k).swap(M.row(p));
    I.row(k).swap(I.row(p));
    const Rational inv = M(k, k).inverse();
    for (Eigen::Index j = 0; j < n; ++j) {
      M(k, j) *= inv;
      I(k, j) *= inv;
    }
    for (Eigen::Index i = 0; i < n; ++i) {
      if (i == k || M(i, k).is_zero()) continue;
      const Rational f = M(i, k);
      for (Eigen::Index j = 0; j < n; ++j) {
        M(i, j) -= f * M(k, j);
        I(i, j) -= f * I(k, j);
      }
    }
  }
  return I;
}

std::optional<RationalVector> solve(const RationalMatrix& A, const RationalVector& b) {
  if (A.rows() != b.size()) throw Error(ErrorCode::ShapeMismatch, "right-hand side has the wrong length");
  RationalMatrix aug(A.rows(), A.cols() + 1);
  aug << A, b;
  const RationalMatrix ns = nullspace(aug);
  const Eigen::Index last = A.cols();
  for (Eigen::Index f = 0; f < ns.cols(); ++f) {
    if (ns(last, f).is_zero()) continue;
    const Rational scale = -ns(last, f).inverse();
    RationalVector x(A.cols());
    for (Eigen::Index j = 0; j < A.cols(); ++j) x(j) = ns(j, f) * scale;
    return x;
  }
  return std::nullopt;
}

}  // namespace spinor_forge
