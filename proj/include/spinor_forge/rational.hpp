#ifndef SPINOR_FORGE_RATIONAL_HPP
#define SPINOR_FORGE_RATIONAL_HPP

#include <gmpxx.h>

#include <Eigen/Core>
#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace spinor_forge {

/// Exact rational number with arbitrary-precision numerator and denominator.
/// Always stored in lowest terms with a positive denominator, so equality is
/// structural.
class Rational {
public:
  Rational() = default;
  Rational(long value) : v_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(long num, long den);
  explicit Rational(const mpz_class& value) : v_(value) {}
  Rational(const mpz_class& num, const mpz_class& den);
  explicit Rational(const mpq_class& value) : v_(value) { v_.canonicalize(); }

  /// Parses "p" or "p/q" (optional leading sign, decimal digits only).
  static Rational parse(std::string_view text);

  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }
  const mpq_class& raw() const { return v_; }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rational abs() const;
  Rational inverse() const;
  /// Exact square root when the value is the square of a rational.
  std::optional<Rational> sqrt_exact() const;

  /// "p/q", or "p" when the denominator is 1.
  std::string to_string() const;

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) {
    Rational r;
    mpq_neg(r.v_.get_mpq_t(), a.v_.get_mpq_t());
    return r;
  }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& q);

private:
  mpq_class v_;
};

Rational binomial(unsigned n, unsigned k);
Rational pow2(int exponent);

}  // namespace spinor_forge

namespace Eigen {

template <>
struct NumTraits<spinor_forge::Rational> : GenericNumTraits<spinor_forge::Rational> {
  using Real = spinor_forge::Rational;
  using NonInteger = spinor_forge::Rational;
  using Nested = spinor_forge::Rational;
  using Literal = spinor_forge::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 16,
    MulCost = 32,
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace spinor_forge {

using RationalMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using RationalVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

/// Exact equality of two dense matrices (shapes included).
template <class A, class B>
bool exactly_equal(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    for (Eigen::Index i = 0; i < a.rows(); ++i)
      if (!(a(i, j) == b(i, j))) return false;
  return true;
}

template <class A>
bool is_zero_matrix(const Eigen::MatrixBase<A>& a) {
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    for (Eigen::Index i = 0; i < a.rows(); ++i)
      if (!a(i, j).is_zero()) return false;
  return true;
}

inline RationalMatrix identity_matrix(Eigen::Index n) {
  RationalMatrix m = RationalMatrix::Constant(n, n, Rational(0));
  for (Eigen::Index i = 0; i < n; ++i) m(i, i) = Rational(1);
  return m;
}

inline RationalMatrix zero_matrix(Eigen::Index rows, Eigen::Index cols) {
  return RationalMatrix::Constant(rows, cols, Rational(0));
}

}  // namespace spinor_forge

#endif  // SPINOR_FORGE_RATIONAL_HPP
