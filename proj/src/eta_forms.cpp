#include "spinor_forge/eta_forms.hpp"

#include "spinor_forge/error.hpp"
#include "spinor_forge/parallel.hpp"

#include <sstream>

namespace spinor_forge {

namespace {

void check_pair(int n, int a, int b) {
  if (a < 1 || a > n || b < 1 || b > n)
    throw Error(ErrorCode::IndexOutOfRange, "e_" + std::to_string(a) + "^e_" + std::to_string(b) + " outside 1.." +
                                                std::to_string(n));
}

// <e_a e_b w, v> = -<e_b w, e_a v> since every kappa(e_a) is skew-Hermitian.
// The images e_b w and e_a v are computed once each.
RationalMatrix real_pairing_matrix(const CoeffMap& w, const CoeffMap& v, int n, bool imaginary_times_i) {
  std::vector<CoeffMap> ew(n), ev(n);
  for (int a = 0; a < n; ++a) {
    ew[a] = apply_generator(w, n, a + 1, 0);
    ev[a] = apply_generator(v, n, a + 1, 0);
  }
  RationalMatrix out = zero_matrix(n, n);
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      const GaussianRational z = -sesquilinear(ew[b], ev[a]);
      // Re(z), or Re(i z) = -Im(z) for the Spin^c prototype formula.
      const Rational value = imaginary_times_i ? -z.im() : z.re();
      out(a, b) = value;
      out(b, a) = -value;
    }
  }
  return out;
}

}  // namespace

TwoForm::TwoForm(int n) : mat_(zero_matrix(n, n)) {
  if (n < 0) throw Error(ErrorCode::ShapeMismatch, "negative dimension");
}

TwoForm::TwoForm(RationalMatrix mat) : mat_(std::move(mat)) {
  if (mat_.rows() != mat_.cols()) throw Error(ErrorCode::ShapeMismatch, "2-form matrix must be square");
  for (Eigen::Index i = 0; i < mat_.rows(); ++i)
    for (Eigen::Index j = i; j < mat_.cols(); ++j)
      if (!(mat_(i, j) == -mat_(j, i))) throw Error(ErrorCode::ShapeMismatch, "2-form matrix must be antisymmetric");
}

TwoForm TwoForm::basic(int n, int a, int b) {
  TwoForm out(n);
  out.add_term(a, b, Rational(1));
  return out;
}

void TwoForm::set(int a, int b, const Rational& v) {
  check_pair(n(), a, b);
  if (a == b) {
    if (!v.is_zero()) throw Error(ErrorCode::ShapeMismatch, "diagonal of a 2-form must vanish");
    return;
  }
  mat_(a - 1, b - 1) = v;
  mat_(b - 1, a - 1) = -v;
}

void TwoForm::add_term(int a, int b, const Rational& c) {
  check_pair(n(), a, b);
  if (a == b) return;
  mat_(a - 1, b - 1) += c;
  mat_(b - 1, a - 1) -= c;
}

CliffordForm TwoForm::clifford() const {
  CliffordForm out;
  for (int a = 1; a <= n(); ++a)
    for (int b = a + 1; b <= n(); ++b)
      if (!(*this)(a, b).is_zero()) out.push_back(FormTerm{{a, b}, (*this)(a, b)});
  return out;
}

std::string TwoForm::to_text() const {
  std::ostringstream os;
  bool first = true;
  for (int a = 1; a <= n(); ++a) {
    for (int b = a + 1; b <= n(); ++b) {
      const Rational& c = (*this)(a, b);
      if (c.is_zero()) continue;
      if (first)
        os << (c.sign() < 0 ? "-" : "");
      else
        os << (c.sign() < 0 ? " - " : " + ");
      const Rational mag = c.abs();
      if (!(mag == Rational(1))) os << mag << " * ";
      os << 'e' << a << "^e" << b;
      first = false;
    }
  }
  return first ? std::string("0") : os.str();
}

TwoForm& TwoForm::operator+=(const TwoForm& o) {
  if (o.n() != n()) throw Error(ErrorCode::ShapeMismatch, "2-forms of different dimension");
  mat_ += o.mat_;
  return *this;
}

TwoForm& TwoForm::operator-=(const TwoForm& o) {
  if (o.n() != n()) throw Error(ErrorCode::ShapeMismatch, "2-forms of different dimension");
  mat_ -= o.mat_;
  return *this;
}

TwoForm operator*(const Rational& c, const TwoForm& w) {
  TwoForm out(w.n());
  out.mat_ = w.mat_ * c;
  return out;
}

TwoForm eta(const ScaledSpinor& phi, int k, int l) {
  const ScaledSpinor w = twist_bivector_action(k, l, phi);
  RationalMatrix mat = real_pairing_matrix(w.coeffs(), phi.coeffs(), phi.n(), false);
  if (!(phi.scale2() == Rational(1))) mat *= phi.scale2();
  return TwoForm(std::move(mat));
}

EtaTable eta_table(const ScaledSpinor& phi) {
  std::vector<PairKey> pairs;
  for (int k = 1; k <= phi.r(); ++k)
    for (int l = k + 1; l <= phi.r(); ++l) pairs.emplace_back(k, l);
  std::vector<TwoForm> forms(pairs.size(), TwoForm(phi.n()));
  parallel_for(pairs.size(), [&](std::size_t i) { forms[i] = eta(phi, pairs[i].first, pairs[i].second); });
  EtaTable out;
  for (std::size_t i = 0; i < pairs.size(); ++i) out.emplace(pairs[i], std::move(forms[i]));
  return out;
}

Endo eta_hat(const TwoForm& omega) { return omega.matrix().transpose(); }

EndoTable hat_table(const EtaTable& etas) {
  EndoTable out;
  for (const auto& [key, form] : etas) out.emplace(key, eta_hat(form));
  return out;
}

TwoForm phi_extend(const ScaledSpinor& phi, const Bivector& beta) {
  TwoForm out(phi.n());
  for (const BivectorTerm& t : beta) {
    if (t.coeff.is_zero()) continue;
    out += t.coeff * eta(phi, t.k, t.l);
  }
  return out;
}

TwoForm spinc_form(const ScaledSpinor& phi) {
  if (phi.r() != 2) throw Error(ErrorCode::WrongRank, "Spin^c form needs r = 2, got r = " + std::to_string(phi.r()));
  if (phi.m() != 1) throw Error(ErrorCode::ShapeMismatch, "Spin^c form needs m = 1");
  return eta(phi, 1, 2);
}

TwoForm spinc_form(const SpinorVector& phi) {
  return TwoForm(real_pairing_matrix(phi.coeffs(), phi.coeffs(), phi.n(), true));
}

ScaledSpinor form_action(const TwoForm& omega, const ScaledSpinor& phi) {
  if (omega.n() != phi.n()) throw Error(ErrorCode::ShapeMismatch, "2-form dimension differs from n");
  return spin_clifford_action(omega.clifford(), phi);
}

SpinorVector form_action(const TwoForm& omega, const SpinorVector& phi) {
  if (omega.n() != phi.n()) throw Error(ErrorCode::ShapeMismatch, "2-form dimension differs from n");
  return clifford_action(phi.n(), omega.clifford(), phi);
}

}  // namespace spinor_forge
