#ifndef SPINOR_FORGE_SPIN_REP_HPP
#define SPINOR_FORGE_SPIN_REP_HPP

#include "spinor_forge/coeff_map.hpp"
#include "spinor_forge/rational.hpp"

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace spinor_forge {

/// Label (eps_1, ..., eps_k) of the basis spinor u_{eps_1} (x) ... (x) u_{eps_k}.
/// Entry 0 is the leftmost Kronecker factor; internally bit p is set iff
/// eps_{p+1} = -1.
class BasisIndex {
public:
  BasisIndex() = default;
  BasisIndex(std::initializer_list<int> eps) : BasisIndex(std::span<const int>(eps.begin(), eps.size())) {}
  explicit BasisIndex(std::span<const int> eps);

  static BasisIndex from_bits(std::uint64_t bits, int length);
  /// u_{(1, ..., 1)}.
  static BasisIndex all_plus(int length) { return from_bits(0, length); }

  int length() const { return length_; }
  std::uint64_t bits() const { return bits_; }
  int eps(int position) const { return (bits_ >> position) & 1U ? -1 : 1; }
  std::vector<int> to_vector() const;
  BasisIndex negated() const;

  friend auto operator<=>(const BasisIndex&, const BasisIndex&) = default;

private:
  std::uint64_t bits_ = 0;
  int length_ = 0;
};

/// Element of Delta_n = (C^2)^{(x) floor(n/2)}, sparse in the u basis.
class SpinorVector {
public:
  explicit SpinorVector(int n);

  static SpinorVector basis(int n, const BasisIndex& index);

  int n() const { return n_; }
  int half() const { return n_ / 2; }

  GaussianRational operator[](const BasisIndex& index) const;
  void add(const BasisIndex& index, const GaussianRational& value);

  bool is_zero() const { return coeffs_.empty(); }
  const CoeffMap& coeffs() const { return coeffs_; }
  CoeffMap& coeffs() { return coeffs_; }

  SpinorVector& operator+=(const SpinorVector& o);
  SpinorVector& operator-=(const SpinorVector& o);
  friend SpinorVector operator+(SpinorVector a, const SpinorVector& b) { return a += b; }
  friend SpinorVector operator-(SpinorVector a, const SpinorVector& b) { return a -= b; }
  friend SpinorVector operator*(const GaussianRational& c, const SpinorVector& v);
  friend SpinorVector operator-(const SpinorVector& v) { return GaussianRational(-1) * v; }
  friend bool operator==(const SpinorVector& a, const SpinorVector& b) {
    return a.n_ == b.n_ && a.coeffs_ == b.coeffs_;
  }

private:
  int n_;
  CoeffMap coeffs_;
};

/// coeff * e_{f_1} e_{f_2} ... e_{f_s}. Factors may be any word over 1..n;
/// strictly increasing words are the Clifford basis products.
struct FormTerm {
  std::vector<int> factors;
  Rational coeff{1};

  bool is_basis() const;
};

using CliffordForm = std::vector<FormTerm>;

SpinorVector kappa_generator(int n, int i, const SpinorVector& psi);

/// omega . psi = sum coeff * kappa(e_{f_1}) o ... o kappa(e_{f_s}) (psi).
SpinorVector clifford_action(int n, const CliffordForm& omega, const SpinorVector& psi);

/// Clifford multiplication by a rational vector x = sum x_j e_j.
SpinorVector vector_action(const RationalVector& x, const SpinorVector& psi);

/// <psi1, psi2>, linear in the first slot and conjugate-linear in the second.
GaussianRational hermitian(const SpinorVector& psi1, const SpinorVector& psi2);

/// The real or quaternionic structure gamma_n (antilinear).
SpinorVector gamma_apply(int n, const SpinorVector& psi);
/// +1 when gamma_n is a real structure, -1 when quaternionic.
int gamma_square_sign(int n);

/// kappa_n(x_1 x_2 ... x_{2l}) psi for rational unit vectors x_j.
SpinorVector spin_action_on_spinor(int n, std::span<const RationalVector> vectors, const SpinorVector& psi);

/// lambda_n(x_1 ... x_{2l}) v = R_{x_1} o ... o R_{x_{2l}} (v), R_x(v) = v - 2<v,x>x.
RationalVector spin_action_on_vector(int n, std::span<const RationalVector> vectors, const RationalVector& v);

/// Throws NotUnitVector / OddLength / ShapeMismatch for malformed group words.
void validate_group_word(int n, std::span<const RationalVector> vectors);

Rational dot(const RationalVector& a, const RationalVector& b);

}  // namespace spinor_forge

#endif  // SPINOR_FORGE_SPIN_REP_HPP
