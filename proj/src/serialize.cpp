#include "spinor_forge/serialize.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace spinor_forge {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

const json& field(const json& j, const char* name) {
  if (!j.is_object()) bad("expected a JSON object");
  const auto it = j.find(name);
  if (it == j.end()) bad(std::string("missing field '") + name + "'");
  return *it;
}

int int_field(const json& j, const char* name) {
  const json& v = field(j, name);
  if (!v.is_number_integer()) bad(std::string("field '") + name + "' must be an integer");
  return v.get<int>();
}

json sign_array(const BasisIndex& index) { return index.to_vector(); }

BasisIndex sign_tuple(const json& j, int length) {
  if (!j.is_array()) bad("sign tuple must be an array");
  std::vector<int> eps;
  for (const json& e : j) {
    if (!e.is_number_integer() || (e.get<int>() != 1 && e.get<int>() != -1)) bad("sign tuple entries must be 1 or -1");
    eps.push_back(e.get<int>());
  }
  if (static_cast<int>(eps.size()) != length)
    throw Error(ErrorCode::ShapeMismatch,
                "sign tuple of length " + std::to_string(eps.size()) + ", expected " + std::to_string(length));
  return BasisIndex(std::span<const int>(eps));
}

GaussianRational coefficient(const json& entry) {
  const Rational re = entry.contains("re") ? rational_from_json(entry["re"]) : Rational(0);
  const Rational im = entry.contains("im") ? rational_from_json(entry["im"]) : Rational(0);
  return GaussianRational(re, im);
}

json coefficient_fields(json entry, const GaussianRational& c) {
  entry["re"] = to_json(c.re());
  entry["im"] = to_json(c.im());
  return entry;
}

json pair_terms(const std::map<PairKey, Rational>& part, const char* first, const char* second) {
  json out = json::array();
  for (const auto& [p, c] : part) out.push_back({{first, p.first}, {second, p.second}, {"coeff", to_json(c)}});
  return out;
}

json pair_checks(const std::vector<PairCheck>& checks, bool with_square) {
  json out = json::array();
  for (const PairCheck& c : checks) {
    json row{{"k", c.k}, {"l", c.l}, {"defect_norm2", to_json(c.defect_norm2)}, {"eta_nonzero", c.eta_nonzero}};
    if (with_square) row["square_ok"] = c.square_ok;
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace

json to_json(const Rational& q) { return q.to_string(); }

json to_json(const SpinorVector& v) {
  json coeffs = json::array();
  for (const auto& [key, c] : v.coeffs())
    coeffs.push_back(coefficient_fields({{"eps", sign_array(BasisIndex::from_bits(key, v.half()))}}, c));
  return {{"n", v.n()}, {"coeffs", std::move(coeffs)}};
}

json to_json(const ScaledSpinor& v) {
  json coeffs = json::array();
  for (const auto& [key, c] : v.coeffs()) {
    const TwistedIndex index = TwistedIndex::unpack(key, v.shape());
    json twist = json::array();
    for (const BasisIndex& t : index.twist) twist.push_back(sign_array(t));
    coeffs.push_back(coefficient_fields({{"spin", sign_array(index.spin)}, {"twist", std::move(twist)}}, c));
  }
  return {{"n", v.n()}, {"r", v.r()}, {"m", v.m()}, {"scale2", to_json(v.scale2())}, {"coeffs", std::move(coeffs)}};
}

json to_json(const TwoForm& w) {
  json terms = json::array();
  for (int a = 1; a <= w.n(); ++a)
    for (int b = a + 1; b <= w.n(); ++b)
      if (!w(a, b).is_zero()) terms.push_back({{"a", a}, {"b", b}, {"coeff", to_json(w(a, b))}});
  return {{"n", w.n()}, {"terms", std::move(terms)}};
}

json to_json(const EtaTable& table) {
  json out = json::array();
  for (const auto& [key, w] : table) out.push_back({{"k", key.first}, {"l", key.second}, {"form", to_json(w)}});
  return out;
}

json to_json(const AmbientElement& x) { return {{"a", pair_terms(x.a(), "i", "j")}, {"b", pair_terms(x.b(), "k", "l")}}; }

json to_json(const LieSubalgebra& algebra) {
  json basis = json::array();
  for (const AmbientElement& x : algebra.basis) basis.push_back(to_json(x));
  return {{"dim", algebra.dim}, {"closed", algebra.closed}, {"basis", std::move(basis)}};
}

json to_json(const PurityReport& report) {
  return {{"is_pure", report.is_pure}, {"per_pair", pair_checks(report.per_pair, true)}};
}

json to_json(const ReducingReport& report) {
  return {{"is_reducing", report.is_reducing}, {"per_pair", pair_checks(report.per_pair, false)}};
}

Rational rational_from_json(const json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  bad("rationals must be strings \"p/q\" or integers");
}

SpinorVector spinor_vector_from_json(const json& j) {
  const int n = int_field(j, "n");
  if (n < 1) throw Error(ErrorCode::ShapeMismatch, "n must be positive");
  SpinorVector out(n);
  std::set<std::uint64_t> seen;
  const json& coeffs = field(j, "coeffs");
  if (!coeffs.is_array()) bad("'coeffs' must be an array");
  for (const json& entry : coeffs) {
    const BasisIndex eps = sign_tuple(field(entry, "eps"), n / 2);
    if (!seen.insert(eps.bits()).second) bad("duplicate basis label in 'coeffs'");
    out.add(eps, coefficient(entry));
  }
  return out;
}

ScaledSpinor scaled_spinor_from_json(const json& j) {
  const TwistedShape shape{int_field(j, "n"), int_field(j, "r"), int_field(j, "m")};
  const Rational scale2 = j.contains("scale2") ? rational_from_json(j["scale2"]) : Rational(1);
  ScaledSpinor out(shape, scale2);
  std::set<std::uint64_t> seen;
  const json& coeffs = field(j, "coeffs");
  if (!coeffs.is_array()) bad("'coeffs' must be an array");
  for (const json& entry : coeffs) {
    TwistedIndex index{sign_tuple(field(entry, "spin"), shape.spin_bits()), {}};
    const json& twist = field(entry, "twist");
    if (!twist.is_array()) bad("'twist' must be an array of sign tuples");
    if (static_cast<int>(twist.size()) != shape.m) throw Error(ErrorCode::ShapeMismatch, "'twist' needs m sign tuples");
    for (const json& t : twist) index.twist.push_back(sign_tuple(t, shape.twist_bits()));
    if (!seen.insert(index.pack(shape)).second) bad("duplicate basis label in 'coeffs'");
    out.add(index, coefficient(entry));
  }
  return out;
}

TwoForm two_form_from_json(const json& j) {
  const int n = int_field(j, "n");
  if (n < 1) throw Error(ErrorCode::ShapeMismatch, "n must be positive");
  TwoForm out(n);
  const json& terms = field(j, "terms");
  if (!terms.is_array()) bad("'terms' must be an array");
  for (const json& t : terms) {
    const int a = int_field(t, "a");
    const int b = int_field(t, "b");
    if (a < 1 || b < 1 || a > n || b > n || a == b) throw Error(ErrorCode::IndexOutOfRange, "2-form index out of range");
    out.add_term(a, b, rational_from_json(field(t, "coeff")));
  }
  return out;
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    bad(std::string("malformed JSON: ") + e.what());
  }
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_json(buf.str());
}

}  // namespace spinor_forge
