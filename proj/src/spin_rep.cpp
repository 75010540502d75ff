#include "spinor_forge/spin_rep.hpp"

#include "spinor_forge/error.hpp"

#include <string>

namespace spinor_forge {

namespace {

void check_dimension(int n) {
  if (n < 1 || n / 2 > 64) throw Error(ErrorCode::ShapeMismatch, "spinor dimension out of range: " + std::to_string(n));
}

void check_same(const SpinorVector& a, const SpinorVector& b) {
  if (a.n() != b.n())
    throw Error(ErrorCode::ShapeMismatch,
                "spinors live in Delta_" + std::to_string(a.n()) + " and Delta_" + std::to_string(b.n()));
}

}  // namespace

BasisIndex::BasisIndex(std::span<const int> eps) : length_(static_cast<int>(eps.size())) {
  if (eps.size() > 64) throw Error(ErrorCode::ShapeMismatch, "basis index longer than 64 entries");
  for (std::size_t p = 0; p < eps.size(); ++p) {
    if (eps[p] == -1)
      bits_ |= std::uint64_t{1} << p;
    else if (eps[p] != 1)
      throw Error(ErrorCode::ShapeMismatch, "basis index entries must be +1 or -1");
  }
}

BasisIndex BasisIndex::from_bits(std::uint64_t bits, int length) {
  BasisIndex out;
  out.length_ = length;
  out.bits_ = length >= 64 ? bits : bits & ((std::uint64_t{1} << length) - 1);
  return out;
}

std::vector<int> BasisIndex::to_vector() const {
  std::vector<int> out(length_);
  for (int p = 0; p < length_; ++p) out[p] = eps(p);
  return out;
}

BasisIndex BasisIndex::negated() const { return from_bits(~bits_, length_); }

bool FormTerm::is_basis() const {
  for (std::size_t i = 1; i < factors.size(); ++i)
    if (factors[i] <= factors[i - 1]) return false;
  return true;
}

SpinorVector::SpinorVector(int n) : n_(n) { check_dimension(n); }

SpinorVector SpinorVector::basis(int n, const BasisIndex& index) {
  SpinorVector out(n);
  out.add(index, GaussianRational(1));
  return out;
}

GaussianRational SpinorVector::operator[](const BasisIndex& index) const {
  if (index.length() != half()) throw Error(ErrorCode::ShapeMismatch, "basis index length differs from floor(n/2)");
  return coeffs_.at(index.bits());
}

void SpinorVector::add(const BasisIndex& index, const GaussianRational& value) {
  if (index.length() != half()) throw Error(ErrorCode::ShapeMismatch, "basis index length differs from floor(n/2)");
  coeffs_.add(index.bits(), value);
}

SpinorVector& SpinorVector::operator+=(const SpinorVector& o) {
  check_same(*this, o);
  coeffs_.add_scaled(o.coeffs_, GaussianRational(1));
  return *this;
}

SpinorVector& SpinorVector::operator-=(const SpinorVector& o) {
  check_same(*this, o);
  coeffs_.add_scaled(o.coeffs_, GaussianRational(-1));
  return *this;
}

SpinorVector operator*(const GaussianRational& c, const SpinorVector& v) {
  SpinorVector out(v.n_);
  out.coeffs_ = v.coeffs_.scaled(c);
  return out;
}

SpinorVector kappa_generator(int n, int i, const SpinorVector& psi) {
  if (psi.n() != n) throw Error(ErrorCode::ShapeMismatch, "spinor dimension differs from n");
  if (i < 1 || i > n)
    throw Error(ErrorCode::IndexOutOfRange, "generator e_" + std::to_string(i) + " outside 1.." + std::to_string(n));
  SpinorVector out(n);
  out.coeffs() = apply_generator(psi.coeffs(), n, i, 0);
  return out;
}

SpinorVector clifford_action(int n, const CliffordForm& omega, const SpinorVector& psi) {
  if (psi.n() != n) throw Error(ErrorCode::ShapeMismatch, "spinor dimension differs from n");
  SpinorVector out(n);
  for (const FormTerm& term : omega) {
    for (int f : term.factors)
      if (f < 1 || f > n)
        throw Error(ErrorCode::IndexOutOfRange, "form factor e_" + std::to_string(f) + " outside 1.." + std::to_string(n));
    if (term.coeff.is_zero()) continue;
    CoeffMap acc = psi.coeffs();
    for (auto it = term.factors.rbegin(); it != term.factors.rend(); ++it) acc = apply_generator(acc, n, *it, 0);
    out.coeffs().add_scaled(acc, GaussianRational(term.coeff));
  }
  return out;
}

SpinorVector vector_action(const RationalVector& x, const SpinorVector& psi) {
  const int n = psi.n();
  if (x.size() != n) throw Error(ErrorCode::ShapeMismatch, "vector length differs from spinor dimension");
  SpinorVector out(n);
  for (int j = 0; j < n; ++j) {
    if (x(j).is_zero()) continue;
    out.coeffs().add_scaled(apply_generator(psi.coeffs(), n, j + 1, 0), GaussianRational(x(j)));
  }
  return out;
}

GaussianRational hermitian(const SpinorVector& psi1, const SpinorVector& psi2) {
  check_same(psi1, psi2);
  return sesquilinear(psi1.coeffs(), psi2.coeffs());
}

// Every row of the n mod 8 table is the alternating product alpha (x) beta (x)
// alpha ... starting from the leftmost factor. On the u basis
//   alpha(u_e) = -i e u_{-e},   beta(u_e) = u_{-e}.
SpinorVector gamma_apply(int n, const SpinorVector& psi) {
  if (psi.n() != n) throw Error(ErrorCode::ShapeMismatch, "spinor dimension differs from n");
  const int k = n / 2;
  const std::uint64_t all = k >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;
  SpinorVector out(n);
  for (const auto& [key, value] : psi.coeffs()) {
    int power = 0;
    for (int p = 0; p < k; p += 2) power += (key >> p) & 1U ? 1 : 3;
    out.coeffs().raw().emplace(key ^ all, value.conj().times_i_power(power));
  }
  return out;
}

int gamma_square_sign(int n) {
  const int alphas = (n / 2 + 1) / 2;
  return alphas % 2 == 0 ? 1 : -1;
}

Rational dot(const RationalVector& a, const RationalVector& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::ShapeMismatch, "vector lengths differ");
  Rational acc(0);
  for (Eigen::Index j = 0; j < a.size(); ++j) acc += a(j) * b(j);
  return acc;
}

void validate_group_word(int n, std::span<const RationalVector> vectors) {
  if (vectors.size() % 2 != 0)
    throw Error(ErrorCode::OddLength, "a Spin group element needs an even number of unit vectors");
  for (const RationalVector& x : vectors) {
    if (x.size() != n) throw Error(ErrorCode::ShapeMismatch, "unit vector has the wrong length");
    if (!(dot(x, x) == Rational(1))) throw Error(ErrorCode::NotUnitVector, "vector has squared norm " + dot(x, x).to_string());
  }
}

SpinorVector spin_action_on_spinor(int n, std::span<const RationalVector> vectors, const SpinorVector& psi) {
  if (psi.n() != n) throw Error(ErrorCode::ShapeMismatch, "spinor dimension differs from n");
  validate_group_word(n, vectors);
  SpinorVector out = psi;
  for (auto it = vectors.rbegin(); it != vectors.rend(); ++it) out = vector_action(*it, out);
  return out;
}

RationalVector spin_action_on_vector(int n, std::span<const RationalVector> vectors, const RationalVector& v) {
  validate_group_word(n, vectors);
  if (v.size() != n) throw Error(ErrorCode::ShapeMismatch, "vector has the wrong length");
  RationalVector out = v;
  for (auto it = vectors.rbegin(); it != vectors.rend(); ++it) {
    const Rational c = Rational(2) * dot(out, *it);
    for (int j = 0; j < n; ++j) out(j) -= c * (*it)(j);
  }
  return out;
}

}  // namespace spinor_forge
