#include "doctest.h"

#include "spinor_forge/catalog.hpp"
#include "spinor_forge/exact_groups.hpp"
#include "spinor_forge/serialize.hpp"

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

}  // namespace

TEST_CASE("rationals") {
  CHECK(to_json(Rational(-3, 4)) == json("-3/4"));
  CHECK(to_json(Rational(5)) == json("5"));
  CHECK(rational_from_json(json("6/8")) == Rational(3, 4));
  CHECK(rational_from_json(json(7)) == Rational(7));
  CHECK(code_of([] { (void)rational_from_json(json(0.5)); }) == ErrorCode::ParseError);
  CHECK(code_of([] { (void)rational_from_json(json("x")); }) == ErrorCode::ParseError);
}

TEST_CASE("spinor vector schema and round trip") {
  SpinorVector v(4);
  v.add(BasisIndex{1, -1}, GR(Rational(1, 2), Rational(-3)));
  const json j = to_json(v);
  CHECK(j == parse_json(R"({"n":4,"coeffs":[{"eps":[1,-1],"re":"1/2","im":"-3"}]})"));
  CHECK(spinor_vector_from_json(j) == v);
  CHECK(code_of([] {
          (void)spinor_vector_from_json(parse_json(R"({"n":4,"coeffs":[{"eps":[1],"re":"1"}]})"));
        }) == ErrorCode::ShapeMismatch);
  CHECK(code_of([] {
          (void)spinor_vector_from_json(
              parse_json(R"({"n":4,"coeffs":[{"eps":[1,1],"re":"1"},{"eps":[1,1],"im":"1"}]})"));
        }) == ErrorCode::ParseError);
  CHECK(code_of([] {
          (void)spinor_vector_from_json(parse_json(R"({"n":4,"coeffs":[{"eps":[1,2],"re":"1"}]})"));
        }) == ErrorCode::ParseError);
}

TEST_CASE("scaled spinor round trip") {
  std::mt19937_64 rng(9);
  for (const TwistedShape& s : {TwistedShape{4, 3, 1}, TwistedShape{5, 4, 2}, TwistedShape{8, 7, 1}}) {
    ScaledSpinor phi = random_spinor(rng, s);
    phi.set_scale2(Rational(3, 7));
    CHECK(scaled_spinor_from_json(to_json(phi)) == phi);
    CHECK(scaled_spinor_from_json(parse_json(to_json(phi).dump())) == phi);
  }
  for (const char* name : {"spin7_pure", "spin7_reducing", "qk(2)", "generic(5)", "spinc(2)"}) {
    const ScaledSpinor phi = catalog_lookup(name).spinor;
    CHECK(scaled_spinor_from_json(to_json(phi)) == phi);
  }
  const json j = to_json(build_spinc(1).spinor);
  CHECK(j == parse_json(
                 R"({"n":2,"r":2,"m":1,"scale2":"1","coeffs":[{"spin":[1],"twist":[[1]],"re":"1","im":"0"}]})"));
}

TEST_CASE("scaled spinor rejects malformed input") {
  const auto load = [](const char* text) { (void)scaled_spinor_from_json(parse_json(text)); };
  CHECK(code_of([&] { load(R"({"n":4,"r":3,"coeffs":[]})"); }) == ErrorCode::ParseError);
  CHECK(code_of([&] { load(R"({"n":4,"r":3,"m":1,"coeffs":[{"spin":[1,1],"twist":[],"re":"1"}]})"); }) ==
        ErrorCode::ShapeMismatch);
  CHECK(code_of([&] { load(R"({"n":4,"r":3,"m":1,"coeffs":[{"spin":[1,1],"twist":[[1,1]],"re":"1"}]})"); }) ==
        ErrorCode::ShapeMismatch);
  CHECK(code_of([&] {
          load(R"({"n":4,"r":3,"m":1,"coeffs":[{"spin":[1,1],"twist":[[1]],"re":"1"},
                                              {"spin":[1,1],"twist":[[1]],"re":"2"}]})");
        }) == ErrorCode::ParseError);
  CHECK(code_of([&] { load(R"({"n":4,"r":3,"m":1,"scale2":"0","coeffs":[]})"); }) == ErrorCode::ShapeMismatch);
  CHECK(code_of([&] { load(R"({"n":"4","r":3,"m":1,"coeffs":[]})"); }) == ErrorCode::ParseError);
  CHECK(code_of([&] { load(R"([1,2])"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { (void)parse_json("{\"n\": 4,"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { (void)read_json_file("/nonexistent/file.json"); }) == ErrorCode::ParseError);
}

TEST_CASE("two-form schema and round trip") {
  TwoForm w(4);
  w.add_term(1, 2, Rational(1, 3));
  w.add_term(4, 3, Rational(2));
  const json j = to_json(w);
  CHECK(j == parse_json(R"({"n":4,"terms":[{"a":1,"b":2,"coeff":"1/3"},{"a":3,"b":4,"coeff":"-2"}]})"));
  CHECK(two_form_from_json(j) == w);
  CHECK(code_of([] { (void)two_form_from_json(parse_json(R"({"n":3,"terms":[{"a":1,"b":4,"coeff":"1"}]})")); }) ==
        ErrorCode::IndexOutOfRange);
  const json t = to_json(eta_table(build_spin7_reducing().spinor));
  CHECK(t.size() == 21);
  CHECK(t[0]["k"] == 1);
  CHECK(t[0]["l"] == 2);
  CHECK(two_form_from_json(t[0]["form"]) == TwoForm::basic(8, 1, 2));
}

TEST_CASE("algebra and report schemas") {
  const std::vector<AmbientElement> basis{AmbientElement(3, 2).add_a(1, 2, Rational(1)).add_b(1, 2, Rational(-1, 2))};
  const json j = to_json(lie_closure_report(basis));
  CHECK(j == parse_json(R"({"dim":1,"closed":true,"basis":[{"a":[{"i":1,"j":2,"coeff":"1"}],
                                                           "b":[{"k":1,"l":2,"coeff":"-1/2"}]}]})"));
  const json p = to_json(check_pure(build_qk_pure(1).spinor));
  CHECK(p["is_pure"] == true);
  CHECK(p["per_pair"].size() == 3);
  CHECK(p["per_pair"][0]["defect_norm2"] == "0");
  CHECK(p["per_pair"][0]["square_ok"] == true);
  const json r = to_json(check_reducing(build_spin7_reducing().spinor));
  CHECK(r["is_reducing"] == true);
  CHECK_FALSE(r["per_pair"][0].contains("square_ok"));
}
