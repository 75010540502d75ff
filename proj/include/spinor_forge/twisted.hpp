#ifndef SPINOR_FORGE_TWISTED_HPP
#define SPINOR_FORGE_TWISTED_HPP

#include "spinor_forge/spin_rep.hpp"

#include <span>
#include <vector>

namespace spinor_forge {

/// (n, r, m) of Delta_n (x) Delta_r^{(x) m}. The spin slot comes first,
/// then twist slots 1..m, in basis labels and in serialization.
struct TwistedShape {
  int n = 0;
  int r = 0;
  int m = 0;

  int spin_bits() const { return n / 2; }
  int twist_bits() const { return r / 2; }
  int slot_offset(int slot) const { return spin_bits() + (slot - 1) * twist_bits(); }
  int total_bits() const { return spin_bits() + m * twist_bits(); }
  /// Complex dimension 2^{floor(n/2) + m floor(r/2)}.
  std::uint64_t dimension() const { return std::uint64_t{1} << total_bits(); }

  void validate() const;

  friend bool operator==(const TwistedShape&, const TwistedShape&) = default;
};

struct TwistedIndex {
  BasisIndex spin;
  std::vector<BasisIndex> twist;

  std::uint64_t pack(const TwistedShape& shape) const;
  static TwistedIndex unpack(std::uint64_t key, const TwistedShape& shape);

  friend bool operator==(const TwistedIndex&, const TwistedIndex&) = default;
};

/// phi = sqrt(scale2) * (coefficient vector). Irrational normalizations live
/// in scale2 so the coefficients stay in Q(i).
class ScaledSpinor {
public:
  ScaledSpinor(TwistedShape shape, Rational scale2 = Rational(1));

  const TwistedShape& shape() const { return shape_; }
  int n() const { return shape_.n; }
  int r() const { return shape_.r; }
  int m() const { return shape_.m; }
  const Rational& scale2() const { return scale2_; }
  void set_scale2(Rational s);

  GaussianRational operator[](const TwistedIndex& index) const;
  void add(const TwistedIndex& index, const GaussianRational& value);

  const CoeffMap& coeffs() const { return coeffs_; }
  CoeffMap& coeffs() { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  /// Same shape and scale, new coefficients.
  ScaledSpinor with_coeffs(CoeffMap coeffs) const;

  /// |phi|^2 including the scale.
  Rational norm2() const { return scale2_ * coeffs_.norm2(); }

  ScaledSpinor& operator+=(const ScaledSpinor& o);
  ScaledSpinor& operator-=(const ScaledSpinor& o);
  friend ScaledSpinor operator+(ScaledSpinor a, const ScaledSpinor& b) { return a += b; }
  friend ScaledSpinor operator-(ScaledSpinor a, const ScaledSpinor& b) { return a -= b; }
  /// Multiplies the coefficients (the scale is untouched).
  friend ScaledSpinor operator*(const GaussianRational& c, const ScaledSpinor& v) {
    return v.with_coeffs(v.coeffs_.scaled(c));
  }
  friend bool operator==(const ScaledSpinor& a, const ScaledSpinor& b) {
    return a.shape_ == b.shape_ && a.scale2_ == b.scale2_ && a.coeffs_ == b.coeffs_;
  }

private:
  TwistedShape shape_;
  Rational scale2_;
  CoeffMap coeffs_;
};

/// kappa(e_i) on the Delta_n slot.
ScaledSpinor spin_generator_action(int i, const ScaledSpinor& phi);
/// Clifford product of a form over R^n on the Delta_n slot.
ScaledSpinor spin_clifford_action(const CliffordForm& omega, const ScaledSpinor& phi);
/// X . phi for X in R^n (mu_n (x) Id).
ScaledSpinor tangent_action(const RationalVector& X, const ScaledSpinor& phi);

/// kappa_{r*}^m(f_k f_l) phi = sum_a mu_r^a(f_k f_l) phi. Any k, l in 1..r are
/// accepted; k = l gives -m * phi.
ScaledSpinor twist_bivector_action(int k, int l, const ScaledSpinor& phi);

/// Clifford multiplication by a form over R^r in twist slot `slot` only.
ScaledSpinor mu_slot(int slot, const CliffordForm& omega, const ScaledSpinor& phi);

/// [g, h] . phi = kappa_n(g) (x) kappa_r(h)^{(x) m} phi.
ScaledSpinor twisted_group_action(std::span<const RationalVector> g_vectors, std::span<const RationalVector> h_vectors,
                                  const ScaledSpinor& phi);

/// <phi1, phi2> = sqrt(s1 s2) * sum c1 conj(c2); requires s1 s2 to be a
/// rational square (ScaleMismatch otherwise).
GaussianRational twisted_hermitian(const ScaledSpinor& phi1, const ScaledSpinor& phi2);

}  // namespace spinor_forge

#endif  // SPINOR_FORGE_TWISTED_HPP
