#include "doctest.h"

#include "spinor_forge/catalog.hpp"
#include "spinor_forge/eta_forms.hpp"
#include "spinor_forge/exact_groups.hpp"
#include "test_support.hpp"

#include <random>

using namespace spinor_forge;
using GR = GaussianRational;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no exception");
  return ErrorCode::ParseError;
}

/// Entry-by-entry evaluation of scale2 * Re <e_a e_b . chi, phi>.
TwoForm form_from_action(const ScaledSpinor& chi, const ScaledSpinor& phi) {
  TwoForm out(phi.n());
  for (int a = 1; a <= phi.n(); ++a)
    for (int b = a + 1; b <= phi.n(); ++b)
      out.set(a, b, twisted_hermitian(spin_clifford_action(CliffordForm{{{a, b}, Rational(1)}}, chi), phi).re());
  return out;
}

TwoForm direct_eta(const ScaledSpinor& phi, int k, int l) {
  return form_from_action(twist_bivector_action(k, l, phi), phi);
}

TwoForm sum_pairs(int n, std::initializer_list<std::tuple<int, int, int>> terms) {
  TwoForm w(n);
  for (const auto& [a, b, c] : terms) w.add_term(a, b, Rational(c));
  return w;
}

}  // namespace

TEST_CASE("TwoForm basics") {
  TwoForm w(6);
  w.add_term(1, 2, Rational(1));
  w.add_term(4, 3, Rational(1));
  w.add_term(5, 6, Rational(1, 2));
  CHECK(w(2, 1) == Rational(-1));
  CHECK(w(3, 4) == Rational(-1));
  CHECK(w.to_text() == "e1^e2 - e3^e4 + 1/2 * e5^e6");
  CHECK(TwoForm(3).to_text() == "0");
  CHECK((Rational(-2) * TwoForm::basic(3, 1, 3)).to_text() == "-2 * e1^e3");
  CHECK(TwoForm::basic(4, 2, 1) == Rational(-1) * TwoForm::basic(4, 1, 2));
  const CliffordForm cl = w.clifford();
  CHECK(cl.size() == 3);
  RationalMatrix sym = zero_matrix(2, 2);
  sym(0, 1) = 1;
  sym(1, 0) = 1;
  CHECK(code_of([&] { TwoForm bad(sym); }) == ErrorCode::ShapeMismatch);
  CHECK(code_of([] { (void)TwoForm::basic(3, 1, 4); }) == ErrorCode::IndexOutOfRange);
  CHECK(code_of([] { (void)(TwoForm(3) + TwoForm(4)); }) == ErrorCode::ShapeMismatch);
}

TEST_CASE("eta examples") {
  std::mt19937_64 rng(1);
  const ScaledSpinor phi = random_spinor(rng, TwistedShape{4, 3, 2});
  for (int k = 1; k <= 3; ++k) CHECK(eta(phi, k, k).is_zero());

  const ScaledSpinor phi2 = build_spin7_reducing().spinor;
  for (int k = 1; k <= 7; ++k)
    for (int l = k + 1; l <= 7; ++l) CHECK(eta(phi2, k, l) == TwoForm::basic(8, k, l));

  const ScaledSpinor phi1 = build_spin7_pure().spinor;
  CHECK(eta(phi1, 1, 2) == sum_pairs(8, {{1, 2, 1}, {3, 4, -1}, {5, 6, 1}, {7, 8, 1}}));
  CHECK(eta(phi1, 1, 2).to_text() == "e1^e2 - e3^e4 + e5^e6 + e7^e8");
  CHECK(code_of([&] { (void)eta(phi1, 0, 1); }) == ErrorCode::IndexOutOfRange);
  CHECK(code_of([&] { (void)eta(phi1, 1, 8); }) == ErrorCode::IndexOutOfRange);
}

TEST_CASE("eta matches the definition evaluated entry by entry") {
  std::mt19937_64 rng(2);
  const std::vector<TwistedShape> shapes{{4, 3, 1}, {5, 4, 2}, {6, 3, 1}, {3, 5, 1}};
  for (const auto& shape : shapes) {
    ScaledSpinor phi = random_spinor(rng, shape);
    phi.set_scale2(Rational(2, 3));
    for (int k = 1; k <= shape.r; ++k)
      for (int l = 1; l <= shape.r; ++l) {
        const TwoForm w = eta(phi, k, l);
        if (k != l) CHECK(w == direct_eta(phi, k, l));
        CHECK(w == Rational(-1) * eta(phi, l, k));
        CHECK(exactly_equal(w.matrix(), RationalMatrix(-w.matrix().transpose())));
      }
    const EtaTable table = eta_table(phi);
    CHECK(table.size() == static_cast<std::size_t>(shape.r * (shape.r - 1) / 2));
    for (const auto& [kl, w] : table) CHECK(w == eta(phi, kl.first, kl.second));
  }
}

TEST_CASE("eta is invariant under unit scalars") {
  std::mt19937_64 rng(3);
  const ScaledSpinor phi = random_spinor(rng, TwistedShape{6, 4, 1});
  for (const GR& c : {GR::i(), GR(-1), -GR::i()})
    for (int k = 1; k <= 4; ++k)
      for (int l = k + 1; l <= 4; ++l) CHECK(eta(c * phi, k, l) == eta(phi, k, l));
  // Non-unit scalars rescale by |c|^2.
  CHECK(eta(GR(1, 1) * phi, 1, 2) == Rational(2) * eta(phi, 1, 2));
}

TEST_CASE("eta_hat examples") {
  const Endo J = eta_hat(TwoForm::basic(2, 1, 2));
  CHECK(exactly_equal(RationalMatrix(J * J), RationalMatrix(-identity_matrix(2))));
  CHECK(J(1, 0) == Rational(1));  // hat(e1) = e2
  CHECK(is_zero_matrix(eta_hat(TwoForm(5))));
  const Endo H = eta_hat(eta(build_spin7_pure().spinor, 1, 2));
  CHECK(exactly_equal(RationalMatrix(H * H), RationalMatrix(-identity_matrix(8))));
  const EndoTable hats = hat_table(eta_table(build_spin7_pure().spinor));
  CHECK(hats.size() == 21);
}

TEST_CASE("phi_extend examples") {
  const ScaledSpinor phi1 = build_spin7_pure().spinor;
  CHECK(phi_extend(phi1, Bivector{{1, 2, Rational(1)}}) == eta(phi1, 1, 2));
  CHECK(phi_extend(phi1, Bivector{{1, 2, Rational(1)}, {2, 1, Rational(1)}}).is_zero());
  CHECK(phi_extend(phi1, Bivector{{1, 2, Rational(2)}, {3, 5, Rational(-1, 3)}}) ==
        Rational(2) * eta(phi1, 1, 2) - Rational(1, 3) * eta(phi1, 3, 5));

  // Rotated frame: kappa(f'_k f'_l) = sum_{s,t} a_ks a_lt kappa(f_s f_t), evaluated directly.
  std::mt19937_64 rng(4);
  const ScaledSpinor qk = build_qk_pure(2).spinor;
  const RationalMatrix A = random_rotation(rng, 3);
  for (int k = 1; k <= 3; ++k)
    for (int l = k + 1; l <= 3; ++l) {
      ScaledSpinor chi(qk.shape(), qk.scale2());
      for (int s = 1; s <= 3; ++s)
        for (int t = 1; t <= 3; ++t)
          chi += GR(A(k - 1, s - 1) * A(l - 1, t - 1)) * twist_bivector_action(s, t, qk);
      Bivector beta;
      for (int s = 1; s <= 3; ++s)
        for (int t = s + 1; t <= 3; ++t)
          beta.push_back({s, t, A(k - 1, s - 1) * A(l - 1, t - 1) - A(k - 1, t - 1) * A(l - 1, s - 1)});
      CHECK(phi_extend(qk, beta) == form_from_action(chi, qk));
    }
}

TEST_CASE("Spin^c prototype form") {
  SpinorVector u2(2);
  u2.add(BasisIndex{1}, GR(1));
  CHECK(spinc_form(u2) == Rational(-1) * TwoForm::basic(2, 1, 2));

  for (int n = 2; n <= 3; ++n) {
    const SpinorVector u = SpinorVector::basis(2 * n, BasisIndex::all_plus(n));
    const TwoForm w = spinc_form(u);
    TwoForm expect(2 * n);
    for (int a = 1; a <= n; ++a) expect.add_term(2 * a - 1, 2 * a, Rational(-1));
    CHECK(w == expect);
    RationalMatrix J0 = zero_matrix(2 * n, 2 * n);
    for (int a = 0; a < n; ++a) {
      J0(2 * a + 1, 2 * a) = 1;
      J0(2 * a, 2 * a + 1) = -1;
    }
    CHECK(exactly_equal(eta_hat(w), RationalMatrix(-J0)));
    const SpinorVector defect = form_action(w, u) + GR(Rational(0), Rational(n)) * u;
    CHECK(defect.is_zero());
    // The twisted route through kappa(f_12) on Delta_2 gives the same form.
    CHECK(spinc_form(build_spinc(n).spinor) == w);
  }
  CHECK(code_of([] { (void)spinc_form(build_spin7_reducing().spinor); }) == ErrorCode::WrongRank);
}

TEST_CASE("form_action is the Clifford action of sum omega_ab e_a e_b") {
  std::mt19937_64 rng(5);
  const ScaledSpinor phi = random_spinor(rng, TwistedShape{5, 3, 1});
  TwoForm w(5);
  w.add_term(1, 2, Rational(3));
  w.add_term(2, 5, Rational(-1, 2));
  const ScaledSpinor expect = GR(3) * spin_clifford_action(CliffordForm{{{1, 2}, Rational(1)}}, phi) -
                              GR(Rational(1, 2)) * spin_clifford_action(CliffordForm{{{2, 5}, Rational(1)}}, phi);
  CHECK(form_action(w, phi) == expect);
  CHECK(code_of([&] { (void)form_action(TwoForm(4), phi); }) == ErrorCode::ShapeMismatch);
}
