#ifndef SPINOR_FORGE_CATALOG_HPP
#define SPINOR_FORGE_CATALOG_HPP

#include "spinor_forge/structure.hpp"

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace spinor_forge {

struct CatalogEntry {
  std::string name;
  ScaledSpinor spinor;
  std::optional<EtaTable> expected_etas;
  std::optional<int> expected_annihilator_dim;
  /// Ratio between the eta of the unnormalized spinor and expected_etas
  /// (only for the generic reducing spinor).
  std::optional<Rational> unnormalized_eta_factor;
};

/// G(eps) = (eps_1, eps_1, ..., eps_m, eps_m) and H(eps) = #{j : eps_j = -1}.
std::pair<std::vector<int>, int> maps_G_H(std::span<const int> eps);

/// All eps in {+-1}^m with H(eps) = j, in increasing bit order.
std::vector<BasisIndex> sign_tuples_with_count(int m, int j);

/// psi_j = sum_{H(eps) = j} u_{G(eps)} in Delta_{4m}.
SpinorVector qk_psi(int m, int j);

/// Pure spinor in Delta_{4m} (x) Delta_3^{(x) m}.
CatalogEntry build_qk_pure(int m);
/// phi_1 in Delta_8 (x) Delta_7 (pure).
CatalogEntry build_spin7_pure();
/// phi_2 in Delta_8 (x) Delta_7 (reducing).
CatalogEntry build_spin7_reducing();
/// Unit-norm phi_0 = sum psi (x) gamma_n(psi) in Delta_n (x) Delta_n, 2 <= n <= 8.
CatalogEntry build_generic_reducing(int n);
/// C(n; eps), the coefficient of u_eps (x) u_{-eps} in the unnormalized phi_0.
GaussianRational generic_coefficient(int n, const BasisIndex& eps);
/// u_{(1,...,1)} (x) v_{+1} in Delta_{2k} (x) Delta_2, k >= 1.
CatalogEntry build_spinc(int k);

/// The 14 listed generators of the common annihilator of phi_1 and phi_2,
/// with the misprinted entry corrected to e1e7 + e4e6 + f1f7 + f4f6.
std::vector<AmbientElement> g2_generators();
/// The list as printed; entry g2_misprint_index() reads e1e5 + e2e6 + f1f5 + f2f6.
std::vector<AmbientElement> g2_generators_verbatim();
int g2_misprint_index();

struct BetaForm {
  int i = 0;
  int j = 0;
  int s = 0;
  TwoForm form;
};

/// beta_ij^s for 1 <= i <= j <= m and s = 1..4, ordered by (i, j, s).
/// For i = j, beta^1 reduces to the zero 2-form since e_a ^ e_a = 0. For
/// i < j and s = 2, 3, 4 the two-term display is symmetrized in i and j
/// (beta_ij + beta_ji); at i = j that sum is twice the display.
std::vector<BetaForm> beta_forms(int m);
/// The two-term displays without symmetrization.
std::vector<BetaForm> beta_forms_verbatim(int m);

/// eta_13 . psi_j = -2[(j+1) psi_{j+1} + (j-1-m) psi_{j-1}] for 0 <= j <= m.
/// Throws IndexOutOfRange unless 1 <= m <= 4.
bool eta13_recursion_check(int m);

/// Names with their parameter hint, e.g. "qk(m)".
std::vector<std::string> catalog_names();

/// Accepts "spin7_pure", "spin7_reducing", "qk(2)", "generic(5)", "spinc(3)";
/// a bare "qk" uses `param`. Throws UnknownName or ParseError.
CatalogEntry catalog_lookup(std::string_view name, std::optional<int> param = std::nullopt);

using CatalogSource = std::function<CatalogEntry(std::string_view)>;

/// catalog_lookup wrapped as a CatalogSource.
CatalogSource default_catalog();

}  // namespace spinor_forge

#endif  // SPINOR_FORGE_CATALOG_HPP
