#ifndef SPINOR_FORGE_ETA_FORMS_HPP
#define SPINOR_FORGE_ETA_FORMS_HPP

#include "spinor_forge/twisted.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace spinor_forge {

/// Real 2-form on R^n stored as an exactly antisymmetric matrix,
/// omega(e_a, e_b) = matrix()(a-1, b-1).
class TwoForm {
public:
  explicit TwoForm(int n);
  /// Throws ShapeMismatch unless `mat` is square and antisymmetric.
  explicit TwoForm(RationalMatrix mat);

  /// e_a ^ e_b (1-based, a != b).
  static TwoForm basic(int n, int a, int b);

  int n() const { return static_cast<int>(mat_.rows()); }
  const RationalMatrix& matrix() const { return mat_; }

  /// omega(e_a, e_b), 1-based.
  const Rational& operator()(int a, int b) const { return mat_(a - 1, b - 1); }
  /// Sets omega(e_a, e_b) = v and omega(e_b, e_a) = -v.
  void set(int a, int b, const Rational& v);
  /// Adds c * e_a ^ e_b.
  void add_term(int a, int b, const Rational& c);

  bool is_zero() const { return is_zero_matrix(mat_); }

  /// sum_{a<b} omega_ab e_a e_b as a Clifford form (the spinor action of omega).
  CliffordForm clifford() const;

  /// "e1^e2 - e3^e4 + 1/2 * e5^e6"; "0" for the zero form.
  std::string to_text() const;

  TwoForm& operator+=(const TwoForm& o);
  TwoForm& operator-=(const TwoForm& o);
  friend TwoForm operator+(TwoForm a, const TwoForm& b) { return a += b; }
  friend TwoForm operator-(TwoForm a, const TwoForm& b) { return a -= b; }
  friend TwoForm operator*(const Rational& c, const TwoForm& w);
  friend bool operator==(const TwoForm& a, const TwoForm& b) { return exactly_equal(a.mat_, b.mat_); }

private:
  RationalMatrix mat_;
};

/// Endomorphism of R^n in the standard basis (columns are images).
using Endo = RationalMatrix;

using PairKey = std::pair<int, int>;
using EtaTable = std::map<PairKey, TwoForm>;
using EndoTable = std::map<PairKey, Endo>;

/// eta_kl(e_a, e_b) = scale2 * Re <e_a ^ e_b . kappa_{r*}^m(f_k f_l) v, v>.
TwoForm eta(const ScaledSpinor& phi, int k, int l);

/// eta_kl for every 1 <= k < l <= r.
EtaTable eta_table(const ScaledSpinor& phi);

/// X -> (X _| omega)^#, i.e. hat(e_a) = sum_b omega(e_a, e_b) e_b.
Endo eta_hat(const TwoForm& omega);

EndoTable hat_table(const EtaTable& etas);

struct BivectorTerm {
  int k = 0;
  int l = 0;
  Rational coeff{1};
};
using Bivector = std::vector<BivectorTerm>;

/// Phi^phi(beta) = sum c_kl eta_kl (linear extension).
TwoForm phi_extend(const ScaledSpinor& phi, const Bivector& beta);

/// The twisted Spin^c form eta_12 (requires r = 2, m = 1).
TwoForm spinc_form(const ScaledSpinor& phi);
/// Untwisted Spin^c form: omega_ab = Re( i <e_a e_b . phi, phi> ).
TwoForm spinc_form(const SpinorVector& phi);

/// omega . phi on the Delta_n slot.
ScaledSpinor form_action(const TwoForm& omega, const ScaledSpinor& phi);
SpinorVector form_action(const TwoForm& omega, const SpinorVector& phi);

}  // namespace spinor_forge

#endif  // SPINOR_FORGE_ETA_FORMS_HPP
