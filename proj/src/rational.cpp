#include "spinor_forge/rational.hpp"

#include "spinor_forge/error.hpp"

#include <cctype>
#include <ostream>

namespace spinor_forge {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::NotUnitVector: return "NotUnitVector";
    case ErrorCode::OddLength: return "OddLength";
    case ErrorCode::ScaleMismatch: return "ScaleMismatch";
    case ErrorCode::WrongRank: return "WrongRank";
    case ErrorCode::ZeroSpinor: return "ZeroSpinor";
    case ErrorCode::RankTooSmall: return "RankTooSmall";
    case ErrorCode::MissingPair: return "MissingPair";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::NotOrthogonal: return "NotOrthogonal";
    case ErrorCode::UnsupportedDimension: return "UnsupportedDimension";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UnknownName: return "UnknownName";
  }
  return "Unknown";
}

Rational::Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator");
  v_.get_num() = num;
  v_.get_den() = den;
  v_.canonicalize();
}

namespace {

bool valid_integer(std::string_view s) {
  std::size_t i = 0;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

mpz_class parse_integer(std::string_view s) {
  if (!s.empty() && s[0] == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  const auto num = text.substr(0, slash);
  const auto den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!valid_integer(num) || !valid_integer(den) || (den[0] == '-' || den[0] == '+'))
    throw Error(ErrorCode::ParseError, "not a rational: \"" + std::string(text) + "\"");
  return Rational(parse_integer(num), parse_integer(den));
}

Rational Rational::abs() const {
  Rational r;
  mpq_abs(r.v_.get_mpq_t(), v_.get_mpq_t());
  return r;
}

Rational Rational::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  Rational r;
  mpq_inv(r.v_.get_mpq_t(), v_.get_mpq_t());
  return r;
}

std::optional<Rational> Rational::sqrt_exact() const {
  if (sign() < 0) return std::nullopt;
  const mpz_class& p = v_.get_num();
  const mpz_class& q = v_.get_den();
  if (!mpz_perfect_square_p(p.get_mpz_t()) || !mpz_perfect_square_p(q.get_mpz_t())) return std::nullopt;
  mpz_class sp, sq;
  mpz_sqrt(sp.get_mpz_t(), p.get_mpz_t());
  mpz_sqrt(sq.get_mpz_t(), q.get_mpz_t());
  return Rational(sp, sq);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero");
  v_ /= o.v_;
  return *this;
}

std::string Rational::to_string() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.to_string(); }

Rational binomial(unsigned n, unsigned k) {
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return Rational(out);
}

Rational pow2(int exponent) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  return exponent < 0 ? Rational(mpz_class(1), p) : Rational(p);
}

}  // namespace spinor_forge
