#include "doctest.h"

#include "spinor_forge/catalog.hpp"
#include "spinor_forge/exact_groups.hpp"
#include "spinor_forge/linalg.hpp"
#include "spinor_forge/structure.hpp"
#include "test_support.hpp"

#include <cstdlib>
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

AmbientElement a_elem(int n, int r, int i, int j) { return AmbientElement(n, r).add_a(i, j, Rational(1)); }

AmbientElement random_element(std::mt19937_64& rng, int n, int r) {
  RationalVector c(AmbientElement::coordinate_count(n, r));
  for (Eigen::Index i = 0; i < c.size(); ++i) c(i) = random_rational(rng, 3);
  return AmbientElement::from_coordinates(n, r, c);
}

RationalMatrix sq(const RationalMatrix& A) { return A * A; }
RationalMatrix comm(const RationalMatrix& A, const RationalMatrix& B) { return A * B - B * A; }

/// Cl_r^0 = Cl_{r-1}; Bott table of Cl_0 .. Cl_7 for e_i^2 = -1.
ClDims bott(int r) {
  struct Row {
    long d;
    int v;
    const char* alg;
  };
  static const Row rows[8] = {{1, 1, "R"}, {2, 1, "C"}, {4, 1, "H"}, {4, 2, "H"},
                              {8, 1, "H"}, {8, 1, "C"}, {8, 1, "R"}, {8, 2, "R"}};
  const int q = (r - 1) / 8, p = (r - 1) % 8;
  long d = rows[p].d;
  for (int s = 0; s < q; ++s) d *= 16;
  return {r, d, rows[p].v, rows[p].alg};
}

}  // namespace

TEST_CASE("AmbientElement construction") {
  AmbientElement x(4, 4);
  x.add_a(2, 1, Rational(3));
  CHECK(x.a().at({1, 2}) == Rational(-3));
  x.add_a(1, 2, Rational(3));
  CHECK(x.is_zero());
  CHECK(code_of([&] { x.add_a(2, 2, Rational(1)); }) == ErrorCode::IndexOutOfRange);
  CHECK(code_of([&] { x.add_b(1, 5, Rational(1)); }) == ErrorCode::IndexOutOfRange);

  AmbientElement y(8, 7);
  y.add_a(1, 2, Rational(1)).add_a(3, 4, Rational(-1)).add_b(1, 2, Rational(1)).add_b(3, 4, Rational(-1));
  CHECK(y.to_text() == "e1e2 - e3e4 + f1f2 - f3f4");
  CHECK(AmbientElement::coordinate_count(8, 7) == 28 + 21);
  CHECK(AmbientElement::from_coordinates(8, 7, y.coordinates()) == y);
  const RationalVector c = y.coordinates();
  CHECK(c(0) == Rational(1));               // (1,2)
  CHECK(c(27 + 1) == Rational(1));          // b (1,2)

  TwoForm w(4);
  w.add_term(1, 3, Rational(2));
  CHECK(AmbientElement(4, 3).add_form(w, Rational(1, 2)).a().at({1, 3}) == Rational(1));
}

TEST_CASE("bracket agrees with the operator commutator on spinors") {
  CHECK(bracket(a_elem(4, 3, 1, 2), a_elem(4, 3, 2, 3)) == Rational(-2) * a_elem(4, 3, 1, 3));
  CHECK(bracket(a_elem(4, 3, 1, 2), a_elem(4, 3, 3, 4)).is_zero());
  CHECK(bracket(a_elem(4, 3, 1, 2), a_elem(4, 3, 1, 2)).is_zero());

  std::mt19937_64 rng(1);
  const std::vector<TwistedShape> shapes{{4, 3, 1}, {5, 4, 2}, {6, 3, 2}};
  for (const auto& shape : shapes)
    for (int trial = 0; trial < 4; ++trial) {
      const AmbientElement x = random_element(rng, shape.n, shape.r);
      const AmbientElement y = random_element(rng, shape.n, shape.r);
      const ScaledSpinor phi = random_spinor(rng, shape);
      CHECK(bracket(x, y).act(phi) == x.act(y.act(phi)) - y.act(x.act(phi)));
    }
}

TEST_CASE("lie_closure_report examples") {
  const std::vector<AmbientElement> so3{a_elem(3, 0, 1, 2), a_elem(3, 0, 1, 3), a_elem(3, 0, 2, 3)};
  const LieSubalgebra alg = lie_closure_report(so3);
  CHECK(alg.closed);
  CHECK(alg.dim == 3);
  // [e1e2, e1e3] = 2 e2e3, [e1e2, e2e3] = -2 e1e3, [e1e3, e2e3] = 2 e1e2.
  CHECK(alg.structure_constant(0, 1, 2) == Rational(2));
  CHECK(alg.structure_constant(0, 2, 1) == Rational(-2));
  CHECK(alg.structure_constant(1, 2, 0) == Rational(2));
  CHECK(alg.structure_constant(1, 0, 2) == Rational(-2));
  CHECK(alg.structure_constant(0, 0, 0) == Rational(0));

  const std::vector<AmbientElement> one{a_elem(3, 0, 1, 2)};
  const LieSubalgebra ab = lie_closure_report(one);
  CHECK(ab.closed);
  CHECK(ab.dim == 1);

  const std::vector<AmbientElement> open{a_elem(3, 0, 1, 2), a_elem(3, 0, 1, 3)};
  CHECK_FALSE(lie_closure_report(open).closed);

  const std::vector<AmbientElement> dup{a_elem(3, 0, 1, 2), Rational(2) * a_elem(3, 0, 1, 2)};
  CHECK(lie_closure_report(dup).dim == 1);
  CHECK(code_of([] { (void)lie_closure_report(std::vector<AmbientElement>{}); }) == ErrorCode::EmptyInput);
  const std::vector<AmbientElement> mixed{a_elem(3, 0, 1, 2), a_elem(4, 0, 1, 2)};
  CHECK(code_of([&] { (void)lie_closure_report(mixed); }) == ErrorCode::ShapeMismatch);
}

TEST_CASE("check_pure examples") {
  CHECK(check_pure(build_spin7_pure().spinor).is_pure);
  const PurityReport p2 = check_pure(build_spin7_reducing().spinor);
  CHECK_FALSE(p2.is_pure);
  CHECK(p2.per_pair.size() == 21);
  for (const auto& pc : p2.per_pair) {
    CHECK(pc.defect_norm2 > Rational(0));
    CHECK_FALSE(pc.square_ok);
  }
  for (int m = 1; m <= 2; ++m) {
    const PurityReport rep = check_pure(build_qk_pure(m).spinor);
    CHECK(rep.is_pure);
    for (const auto& pc : rep.per_pair) {
      CHECK(pc.defect_norm2 == Rational(0));
      CHECK(pc.square_ok);
    }
  }
  CHECK(code_of([] { (void)check_pure(ScaledSpinor(TwistedShape{8, 7, 1})); }) == ErrorCode::ZeroSpinor);
  CHECK(code_of([] { (void)check_pure(build_spinc(2).spinor); }) == ErrorCode::RankTooSmall);
}

TEST_CASE("check_reducing examples") {
  CHECK(check_reducing(build_spin7_reducing().spinor).is_reducing);
  CHECK(check_reducing(build_generic_reducing(4).spinor).is_reducing);
  CHECK_FALSE(check_reducing(build_spin7_pure().spinor).is_reducing);
  CHECK(certify(build_spin7_pure().spinor, Certificate::Pure));
  CHECK_FALSE(certify(build_spin7_pure().spinor, Certificate::Reducing));
  std::mt19937_64 rng(2);
  CHECK(code_of([&] { (void)check_reducing(random_spinor(rng, TwistedShape{4, 1, 1})); }) ==
        ErrorCode::RankTooSmall);
  CHECK(code_of([] { (void)check_reducing(ScaledSpinor(TwistedShape{4, 3, 1})); }) == ErrorCode::ZeroSpinor);
}

TEST_CASE("random spinors are neither pure nor reducing") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 3; ++trial) {
    const ScaledSpinor phi = random_spinor(rng, TwistedShape{4, 3, 1});
    CHECK_FALSE(check_pure(phi).is_pure);
    CHECK_FALSE(check_reducing(phi).is_reducing);
  }
}

TEST_CASE("Spin^c purity examples") {
  CHECK(check_spinc_pure(SpinorVector::basis(4, BasisIndex{1, 1})));
  CHECK(check_spinc_pure(SpinorVector::basis(4, BasisIndex{1, -1})));
  CHECK_FALSE(check_spinc_pure(SpinorVector::basis(4, BasisIndex{1, 1}) + SpinorVector::basis(4, BasisIndex{-1, -1})));
  for (int k = 1; k <= 4; ++k) CHECK(check_spinc_pure(build_spinc(k).spinor));
  CHECK(code_of([] { (void)check_spinc_pure(SpinorVector(4)); }) == ErrorCode::ZeroSpinor);
  CHECK(code_of([] { (void)check_spinc_pure(SpinorVector::basis(5, BasisIndex{1, 1})); }) ==
        ErrorCode::ShapeMismatch);
}

TEST_CASE("even Clifford relations") {
  const EndoTable h1 = hat_table(eta_table(build_spin7_pure().spinor));
  const RelationReport r1 = even_clifford_verify(h1);
  CHECK(r1.ok);
  CHECK_FALSE(r1.first_violation.has_value());
  CHECK(r1.relations_checked > 0);
  CHECK(even_clifford_verify(hat_table(eta_table(build_qk_pure(2).spinor))).ok);

  EndoTable bad;
  bad[{1, 2}] = eta_hat(TwoForm::basic(4, 1, 2));
  bad[{1, 3}] = eta_hat(TwoForm::basic(4, 1, 3));
  bad[{2, 3}] = eta_hat(TwoForm::basic(4, 2, 3));
  const RelationReport rb = even_clifford_verify(bad);
  CHECK_FALSE(rb.ok);
  REQUIRE(rb.first_violation.has_value());
  CHECK(rb.first_violation->relation == Relation::Square);
  CHECK(to_string(Relation::Square) == "square");

  EndoTable flipped = h1;
  flipped[{2, 5}] = -flipped[{2, 5}];
  CHECK_FALSE(even_clifford_verify(flipped).ok);
  EndoTable entry = h1;
  RationalMatrix& h36 = entry[{3, 6}];
  Eigen::Index row = 0;
  while (h36(row, 0).is_zero()) ++row;
  h36(row, 0) = -h36(row, 0);
  CHECK_FALSE(even_clifford_verify(entry).ok);

  EndoTable missing = h1;
  missing.erase({4, 7});
  CHECK(code_of([&] { (void)even_clifford_verify(missing); }) == ErrorCode::MissingPair);
  CHECK(code_of([] { (void)even_clifford_verify(EndoTable{}); }) == ErrorCode::EmptyInput);
}

TEST_CASE("commutator identities of pure spinors as matrix identities") {
  for (const ScaledSpinor& phi : {build_spin7_pure().spinor, build_qk_pure(1).spinor, build_qk_pure(2).spinor}) {
    const EndoTable h = hat_table(eta_table(phi));
    const int r = phi.r();
    const auto H = [&](int a, int b) -> RationalMatrix {
      if (a < b) return h.at({a, b});
      return -h.at({b, a});
    };
    const RationalMatrix minus_id = -identity_matrix(phi.n());
    for (int i = 1; i <= r; ++i)
      for (int j = 1; j <= r; ++j) {
        if (i == j) continue;
        CHECK(exactly_equal(sq(H(i, j)), minus_id));
        for (int k = 1; k <= r; ++k) {
          if (k == i || k == j) continue;
          CHECK(exactly_equal(comm(H(i, j), H(j, k)), RationalMatrix(Rational(-2) * H(i, k))));
          CHECK(exactly_equal(RationalMatrix(H(i, j) * H(j, k)), RationalMatrix(-H(i, k))));
          for (int l = 1; l <= r; ++l) {
            if (l == i || l == j || l == k) continue;
            CHECK(is_zero_matrix(comm(H(i, j), H(k, l))));
          }
        }
      }
    // An irreducible Cl_r^0 module has dimension d_r, which divides n.
    CHECK(phi.n() % cl_dims(r).d_r == 0);
    CHECK(phi.n() % 2 == 0);
  }
}

TEST_CASE("annihilator examples") {
  const ScaledSpinor phi1 = build_spin7_pure().spinor;
  const ScaledSpinor phi2 = build_spin7_reducing().spinor;
  const std::vector<ScaledSpinor> one{phi1};
  const LieSubalgebra a1 = annihilator(one);
  CHECK(a1.dim == 21);
  CHECK(a1.closed);
  for (const auto& x : a1.basis) CHECK(x.act(phi1).is_zero());

  const std::vector<ScaledSpinor> both{phi1, phi2};
  const LieSubalgebra g2 = annihilator(both);
  CHECK(g2.dim == 14);
  CHECK(g2.closed);
  const auto gens = g2_generators();
  CHECK(same_column_span(coordinate_matrix(g2.basis), coordinate_matrix(gens)));

  const std::vector<ScaledSpinor> qk{build_qk_pure(1).spinor};
  const LieSubalgebra aq = annihilator(qk);
  CHECK(aq.dim == 6);
  CHECK(aq.closed);

  CHECK(code_of([] { (void)annihilator(std::vector<ScaledSpinor>{}); }) == ErrorCode::EmptyInput);
  const std::vector<ScaledSpinor> mixed{phi1, build_qk_pure(2).spinor};
  CHECK(code_of([&] { (void)annihilator(mixed); }) == ErrorCode::ShapeMismatch);
}

TEST_CASE("commutant examples") {
  std::vector<Endo> h1, hq;
  for (const auto& [kl, H] : hat_table(eta_table(build_spin7_pure().spinor))) h1.push_back(H);
  for (const auto& [kl, H] : hat_table(eta_table(build_qk_pure(1).spinor))) hq.push_back(H);
  CHECK(commutant(h1, true).dim == 0);
  CHECK(commutant(h1, false).dim == 1);
  const CommutantResult cq = commutant(hq, true);
  CHECK(cq.dim == 3);
  for (const auto& X : cq.basis) {
    CHECK(exactly_equal(X, RationalMatrix(-X.transpose())));
    for (const auto& H : hq) CHECK(is_zero_matrix(comm(X, H)));
  }
  CHECK(commutant(hq, false).dim == 4);
  CHECK(code_of([] { (void)commutant(std::vector<Endo>{}, true); }) == ErrorCode::EmptyInput);
}

TEST_CASE("frame_rotation_check examples") {
  const ScaledSpinor phi1 = build_spin7_pure().spinor;
  CHECK(frame_rotation_check(phi1, identity_matrix(7)));
  CHECK(frame_rotation_check(phi1, givens_rotation(7, 1, 2, Rational(3, 5), Rational(4, 5))));
  std::mt19937_64 rng(4);
  const RationalMatrix C = cayley_transform(random_skew(rng, 3));
  CHECK(is_orthogonal(C));
  CHECK(determinant(C) == Rational(1));
  CHECK(frame_rotation_check(build_qk_pure(2).spinor, C));
  CHECK(frame_rotation_check(build_spin7_reducing().spinor, random_rotation(rng, 7), Certificate::Reducing));

  RationalMatrix shear = identity_matrix(3);
  shear(0, 1) = 1;
  CHECK(code_of([&] { (void)frame_rotation_check(build_qk_pure(1).spinor, shear); }) == ErrorCode::NotOrthogonal);
  RationalMatrix reflect = identity_matrix(3);
  reflect(0, 0) = -1;
  CHECK(code_of([&] { (void)frame_rotation_check(build_qk_pure(1).spinor, reflect); }) == ErrorCode::NotOrthogonal);
}

TEST_CASE("equivariance_check examples") {
  const ScaledSpinor phi1 = build_spin7_pure().spinor;
  CHECK(equivariance_check(phi1, {}, {}));
  const std::vector<RationalVector> e12{basis_vector(8, 1), basis_vector(8, 2)};
  CHECK(equivariance_check(phi1, e12, {}));
  CHECK(check_pure(twisted_group_action(e12, {}, phi1)).is_pure);

  std::mt19937_64 rng(5);
  const std::vector<RationalVector> g{random_unit_vector(rng, 4), random_unit_vector(rng, 4)};
  const std::vector<RationalVector> f12{basis_vector(3, 1), basis_vector(3, 2)};
  const ScaledSpinor qk = build_qk_pure(1).spinor;
  CHECK(equivariance_check(qk, g, f12));
  CHECK(check_pure(twisted_group_action(g, f12, qk)).is_pure);
  CHECK(equivariance_check(build_spin7_reducing().spinor, random_spin_word(rng, 8), random_spin_word(rng, 7),
                           Certificate::Reducing));
}

TEST_CASE("cl_dims matches the Bott table") {
  CHECK(cl_dims(3).d_r == 4);
  CHECK(cl_dims(3).v_r == 1);
  CHECK(cl_dims(7).d_r == 8);
  CHECK(cl_dims(7).v_r == 1);
  CHECK(cl_dims(8).d_r == 8);
  CHECK(cl_dims(8).v_r == 2);
  for (int r = 1; r <= 24; ++r) {
    CAPTURE(r);
    const ClDims got = cl_dims(r), want = bott(r);
    CHECK(got.r == r);
    CHECK(got.d_r == want.d_r);
    CHECK(got.v_r == want.v_r);
    CHECK(got.algebra == want.algebra);
  }
  CHECK(code_of([] { (void)cl_dims(0); }) == ErrorCode::IndexOutOfRange);
}

TEST_CASE("annihilator output does not depend on the thread count") {
  const std::vector<ScaledSpinor> both{build_spin7_pure().spinor, build_spin7_reducing().spinor};
  setenv("SPINOR_FORGE_THREADS", "1", 1);
  const LieSubalgebra serial = annihilator(both);
  setenv("SPINOR_FORGE_THREADS", "4", 1);
  const LieSubalgebra threaded = annihilator(both);
  unsetenv("SPINOR_FORGE_THREADS");
  CHECK(serial.basis == threaded.basis);
  CHECK(serial.structure_constants == threaded.structure_constants);
}
