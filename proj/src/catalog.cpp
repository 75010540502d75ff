#include "spinor_forge/catalog.hpp"

#include <array>
#include <bit>
#include <charconv>
#include <sstream>

namespace spinor_forge {

namespace {

struct Term8x7 {
  std::array<int, 4> spin;
  std::array<int, 3> twist;
  int sign;
};

// Index pairs shared by phi_1 and phi_2; the two spinors differ only in
// terms 4 and 5.
constexpr std::array<Term8x7, 8> kSpin7Pure{{
    {{-1, -1, -1, -1}, {1, 1, 1}, 1},
    {{1, -1, -1, 1}, {1, 1, -1}, -1},
    {{1, -1, 1, -1}, {1, -1, 1}, 1},
    {{1, 1, -1, -1}, {1, -1, -1}, -1},
    {{-1, -1, 1, 1}, {-1, 1, 1}, -1},
    {{-1, 1, -1, 1}, {-1, 1, -1}, 1},
    {{-1, 1, 1, -1}, {-1, -1, 1}, -1},
    {{1, 1, 1, 1}, {-1, -1, -1}, 1},
}};

constexpr std::array<Term8x7, 8> kSpin7Reducing{{
    {{-1, -1, -1, -1}, {1, 1, 1}, 1},
    {{1, -1, -1, 1}, {1, 1, -1}, -1},
    {{1, -1, 1, -1}, {1, -1, 1}, 1},
    {{-1, -1, 1, 1}, {1, -1, -1}, -1},
    {{1, 1, -1, -1}, {-1, 1, 1}, -1},
    {{-1, 1, -1, 1}, {-1, 1, -1}, 1},
    {{-1, 1, 1, -1}, {-1, -1, 1}, -1},
    {{1, 1, 1, 1}, {-1, -1, -1}, 1},
}};

// Rows of the phi_1 table, (k, l) then signed digit pairs "+12" = + e1^e2.
constexpr std::array<std::pair<PairKey, const char*>, 21> kSpin7PureEtas{{
    {{1, 2}, "+12 -34 +56 +78"}, {{1, 3}, "+13 +24 +57 -68"}, {{1, 4}, "+14 -23 +58 +67"},
    {{1, 5}, "+15 -26 -37 -48"}, {{1, 6}, "+16 +25 +38 -47"}, {{1, 7}, "+17 -28 +35 +46"},
    {{2, 3}, "-14 +23 +58 +67"}, {{2, 4}, "+13 +24 -57 +68"}, {{2, 5}, "+16 +25 -38 +47"},
    {{2, 6}, "-15 +26 -37 -48"}, {{2, 7}, "+18 +27 +36 -45"}, {{3, 4}, "-12 +34 +56 +78"},
    {{3, 5}, "+17 +28 +35 -46"}, {{3, 6}, "-18 +27 +36 +45"}, {{3, 7}, "-15 -26 +37 -48"},
    {{4, 5}, "+18 -27 +36 +45"}, {{4, 6}, "+17 +28 -35 +46"}, {{4, 7}, "-16 +25 +38 +47"},
    {{5, 6}, "+12 +34 +56 -78"}, {{5, 7}, "+13 -24 +57 +68"}, {{6, 7}, "+14 +23 -58 +67"},
}};

// e-part of each listed g2 generator; the f-part carries the same pattern.
constexpr std::array<const char*, 14> kG2Printed{
    "+12 -34", "+12 +56", "+13 +24", "+14 -23", "+14 +67", "+24 -57", "+15 -37",
    "+15 +26", "+25 +47", "+16 +25", "+17 +35", "+27 -45", "+27 +36", "+15 -26",
};
// Entry 8 of the printed list does not annihilate phi_1; replaced by the
// nearest two-term element of the annihilator.
constexpr int kG2MisprintIndex = 7;
constexpr const char* kG2Correction = "+17 +46";


template <class F>
void for_each_digit_term(const char* text, F&& emit) {
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    if (tok.size() != 3 || (tok[0] != '+' && tok[0] != '-'))
      throw Error(ErrorCode::ParseError, "bad table token " + tok);
    emit(tok[1] - '0', tok[2] - '0', tok[0] == '+' ? 1 : -1);
  }
}

TwoForm digits_to_form(int n, const char* text) {
  TwoForm w(n);
  for_each_digit_term(text, [&](int a, int b, int s) { w.add_term(a, b, Rational(s)); });
  return w;
}

std::vector<AmbientElement> g2_from_text(const std::array<const char*, 14>& rows) {
  std::vector<AmbientElement> out;
  for (const char* text : rows) {
    AmbientElement x(8, 7);
    for_each_digit_term(text, [&](int a, int b, int s) {
      x.add_a(a, b, Rational(s));
      x.add_b(a, b, Rational(s));
    });
    out.push_back(std::move(x));
  }
  return out;
}

ScaledSpinor spin7_spinor(const std::array<Term8x7, 8>& terms, const Rational& scale2) {
  ScaledSpinor phi(TwistedShape{8, 7, 1}, scale2);
  for (const Term8x7& t : terms)
    phi.add(TwistedIndex{BasisIndex(std::span<const int>(t.spin)), {BasisIndex(std::span<const int>(t.twist))}},
            GaussianRational(Rational(t.sign)));
  return phi;
}

int parse_int(std::string_view text) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw Error(ErrorCode::ParseError, "bad integer '" + std::string(text) + "'");
  return value;
}

}  // namespace

std::pair<std::vector<int>, int> maps_G_H(std::span<const int> eps) {
  std::vector<int> doubled;
  doubled.reserve(eps.size() * 2);
  int minus = 0;
  for (int e : eps) {
    if (e != 1 && e != -1) throw Error(ErrorCode::IndexOutOfRange, "sign tuple entries must be +-1");
    doubled.push_back(e);
    doubled.push_back(e);
    if (e == -1) ++minus;
  }
  return {std::move(doubled), minus};
}

std::vector<BasisIndex> sign_tuples_with_count(int m, int j) {
  std::vector<BasisIndex> out;
  if (j < 0 || j > m) return out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << m); ++bits)
    if (std::popcount(bits) == j) out.push_back(BasisIndex::from_bits(bits, m));
  return out;
}

SpinorVector qk_psi(int m, int j) {
  if (m < 1) throw Error(ErrorCode::IndexOutOfRange, "m must be positive");
  SpinorVector psi(4 * m);
  for (const BasisIndex& eps : sign_tuples_with_count(m, j)) {
    const std::vector<int> e = eps.to_vector();
    psi.add(BasisIndex(std::span<const int>(maps_G_H(e).first)), GaussianRational(1));
  }
  return psi;
}

CatalogEntry build_qk_pure(int m) {
  if (m < 1) throw Error(ErrorCode::IndexOutOfRange, "m must be positive");
  const TwistedShape shape{4 * m, 3, m};
  ScaledSpinor phi(shape, Rational(3, static_cast<long>((m + 2) * (m + 1))));
  for (int j = 0; j <= m; ++j) {
    const GaussianRational c(binomial(m, j).inverse());
    const auto eps_list = sign_tuples_with_count(m, j);
    const auto delta_list = sign_tuples_with_count(m, m - j);
    for (const BasisIndex& eps : eps_list) {
      const BasisIndex spin(std::span<const int>(maps_G_H(eps.to_vector()).first));
      for (const BasisIndex& delta : delta_list) {
        TwistedIndex index{spin, {}};
        for (int a = 0; a < m; ++a) index.twist.push_back(BasisIndex{delta.eps(a)});
        phi.add(index, c);
      }
    }
  }

  EtaTable etas;
  TwoForm e12(4 * m), e13(4 * m), e23(4 * m);
  for (int j = 1; j <= m; ++j) {
    const int a = 4 * j - 3, b = 4 * j - 2, c = 4 * j - 1, d = 4 * j;
    e12.add_term(a, b, Rational(1));
    e12.add_term(c, d, Rational(1));
    e13.add_term(a, c, Rational(-1));
    e13.add_term(b, d, Rational(1));
    e23.add_term(a, d, Rational(-1));
    e23.add_term(b, c, Rational(-1));
  }
  etas.emplace(PairKey{1, 2}, e12);
  etas.emplace(PairKey{1, 3}, e13);
  etas.emplace(PairKey{2, 3}, e23);
  return CatalogEntry{"qk(" + std::to_string(m) + ")", std::move(phi), std::move(etas), m * (2 * m + 1) + 3, {}};
}

CatalogEntry build_spin7_pure() {
  EtaTable etas;
  for (const auto& [key, text] : kSpin7PureEtas) etas.emplace(key, digits_to_form(8, text));
  return CatalogEntry{"spin7_pure", spin7_spinor(kSpin7Pure, Rational(1, 4)), std::move(etas), 21, {}};
}

CatalogEntry build_spin7_reducing() {
  EtaTable etas;
  for (int k = 1; k <= 7; ++k)
    for (int l = k + 1; l <= 7; ++l) etas.emplace(PairKey{k, l}, TwoForm::basic(8, k, l));
  return CatalogEntry{"spin7_reducing", spin7_spinor(kSpin7Reducing, Rational(1, 8)), std::move(etas), 21, {}};
}

GaussianRational generic_coefficient(int n, const BasisIndex& eps) {
  if (n < 2 || n > 8) throw Error(ErrorCode::UnsupportedDimension, "generic reducing spinor needs 2 <= n <= 8");
  if (eps.length() != n / 2) throw Error(ErrorCode::ShapeMismatch, "sign tuple length must be floor(n/2)");
  const int k = n / 8;
  const int row = (n % 8) / 2;
  const int counted = std::array<int, 4>{2 * k, 2 * k + 1, 2 * k + 1, 2 * k + 2}[row];
  int exponent = k;
  for (int j = 0; j < counted; ++j)
    if (eps.eps(2 * j) == 1) ++exponent;
  const Rational sign(exponent % 2 == 0 ? 1 : -1);
  return row % 2 == 1 ? GaussianRational(Rational(0), sign) : GaussianRational(sign);
}

CatalogEntry build_generic_reducing(int n) {
  if (n < 2 || n > 8) throw Error(ErrorCode::UnsupportedDimension, "generic reducing spinor needs 2 <= n <= 8");
  const int half = n / 2;
  ScaledSpinor phi(TwistedShape{n, n, 1}, pow2(-half));
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << half); ++bits) {
    const BasisIndex eps = BasisIndex::from_bits(bits, half);
    phi.add(TwistedIndex{eps, {eps.negated()}}, generic_coefficient(n, eps));
  }
  EtaTable etas;
  for (int p = 1; p <= n; ++p)
    for (int q = p + 1; q <= n; ++q) etas.emplace(PairKey{p, q}, TwoForm::basic(n, p, q));
  return CatalogEntry{"generic(" + std::to_string(n) + ")", std::move(phi), std::move(etas), {}, pow2(half)};
}

CatalogEntry build_spinc(int k) {
  if (k < 1) throw Error(ErrorCode::IndexOutOfRange, "Spin^c prototype needs k >= 1");
  ScaledSpinor phi(TwistedShape{2 * k, 2, 1});
  phi.add(TwistedIndex{BasisIndex::all_plus(k), {BasisIndex::all_plus(1)}}, GaussianRational(1));
  return CatalogEntry{"spinc(" + std::to_string(k) + ")", std::move(phi), {}, {}, {}};
}

std::vector<AmbientElement> g2_generators() {
  auto rows = kG2Printed;
  rows[kG2MisprintIndex] = kG2Correction;
  return g2_from_text(rows);
}

std::vector<AmbientElement> g2_generators_verbatim() { return g2_from_text(kG2Printed); }

int g2_misprint_index() { return kG2MisprintIndex; }

namespace {

/// The printed beta_ij^s, with e_a e_a terms dropped.
TwoForm printed_beta(int n, int i, int j, int s) {
  TwoForm w(n);
  auto term = [&w](int a, int b, int sign) {
    if (a != b) w.add_term(a, b, Rational(sign));
  };
  switch (s) {
    case 1:
      for (int t = 3; t >= 0; --t) term(4 * i - t, 4 * j - t, 1);
      break;
    case 2:
      term(4 * i - 3, 4 * j - 2, 1);
      term(4 * i - 1, 4 * j, -1);
      break;
    case 3:
      term(4 * i - 3, 4 * j - 1, 1);
      term(4 * i - 2, 4 * j, 1);
      break;
    case 4:
      term(4 * i - 3, 4 * j, 1);
      term(4 * i - 2, 4 * j - 1, -1);
      break;
  }
  return w;
}

std::vector<BetaForm> collect_betas(int m, bool symmetrize) {
  if (m < 1) throw Error(ErrorCode::IndexOutOfRange, "m must be positive");
  const int n = 4 * m;
  std::vector<BetaForm> out;
  for (int i = 1; i <= m; ++i)
    for (int j = i; j <= m; ++j)
      for (int s = 1; s <= 4; ++s) {
        TwoForm w = printed_beta(n, i, j, s);
        if (symmetrize && s > 1 && i != j) w += printed_beta(n, j, i, s);
        out.push_back({i, j, s, std::move(w)});
      }
  return out;
}

}  // namespace

std::vector<BetaForm> beta_forms(int m) { return collect_betas(m, true); }

std::vector<BetaForm> beta_forms_verbatim(int m) { return collect_betas(m, false); }

bool eta13_recursion_check(int m) {
  if (m < 1 || m > 4) throw Error(ErrorCode::IndexOutOfRange, "recursion check supports 1 <= m <= 4");
  const ScaledSpinor phi = build_qk_pure(m).spinor;
  const TwoForm e13 = eta(phi, 1, 3);
  for (int j = 0; j <= m; ++j) {
    const SpinorVector lhs = form_action(e13, qk_psi(m, j));
    SpinorVector rhs(4 * m);
    if (j < m) rhs += GaussianRational(Rational(-2 * (j + 1))) * qk_psi(m, j + 1);
    if (j > 0) rhs += GaussianRational(Rational(-2 * (j - 1 - m))) * qk_psi(m, j - 1);
    if (!(lhs == rhs)) return false;
  }
  return true;
}

std::vector<std::string> catalog_names() {
  return {"spin7_pure", "spin7_reducing", "qk(m)", "generic(n)", "spinc(n)"};
}

CatalogEntry catalog_lookup(std::string_view name, std::optional<int> param) {
  std::string_view base = name;
  if (const auto open = name.find('('); open != std::string_view::npos) {
    if (name.back() != ')') throw Error(ErrorCode::ParseError, "unbalanced parameter in '" + std::string(name) + "'");
    base = name.substr(0, open);
    param = parse_int(name.substr(open + 1, name.size() - open - 2));
  }
  if (base == "spin7_pure") return build_spin7_pure();
  if (base == "spin7_reducing") return build_spin7_reducing();
  const bool parametric = base == "qk" || base == "generic" || base == "spinc";
  if (!parametric) throw Error(ErrorCode::UnknownName, "unknown catalog entry '" + std::string(name) + "'");
  if (!param) throw Error(ErrorCode::ParseError, "catalog entry '" + std::string(base) + "' needs a parameter");
  if (base == "qk") return build_qk_pure(*param);
  if (base == "generic") return build_generic_reducing(*param);
  return build_spinc(*param);
}

CatalogSource default_catalog() {
  return [](std::string_view name) { return catalog_lookup(name); };
}

}  // namespace spinor_forge
