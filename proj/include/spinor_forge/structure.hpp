#ifndef SPINOR_FORGE_STRUCTURE_HPP
#define SPINOR_FORGE_STRUCTURE_HPP

#include "spinor_forge/eta_forms.hpp"

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace spinor_forge {

/// Element sum a_ij e_i e_j + sum b_kl f_k f_l of spin(n) + spin(r), stored
/// by bivector coefficients (i < j, k < l).
class AmbientElement {
public:
  AmbientElement(int n, int r);

  /// Coordinates ordered (1,2), (1,3), ..., (n-1,n) for the a-part, then the
  /// b-part in the same order.
  static AmbientElement from_coordinates(int n, int r, const RationalVector& coords);
  RationalVector coordinates() const;
  static int coordinate_count(int n, int r) { return n * (n - 1) / 2 + r * (r - 1) / 2; }

  int n() const { return n_; }
  int r() const { return r_; }

  /// Adds c * e_i e_j (any order, i != j; e_j e_i = -e_i e_j).
  AmbientElement& add_a(int i, int j, const Rational& c);
  AmbientElement& add_b(int k, int l, const Rational& c);
  /// Adds the 2-form omega as sum omega_ij e_i e_j.
  AmbientElement& add_form(const TwoForm& omega, const Rational& c = Rational(1));

  const std::map<PairKey, Rational>& a() const { return a_; }
  const std::map<PairKey, Rational>& b() const { return b_; }

  bool is_zero() const { return a_.empty() && b_.empty(); }

  /// Action on a twisted spinor: a-part on Delta_n, b-part via kappa_{r*}^m.
  ScaledSpinor act(const ScaledSpinor& phi) const;

  /// "e1e2 - e3e4 + f1f2 - f3f4".
  std::string to_text() const;

  friend AmbientElement operator+(AmbientElement x, const AmbientElement& y);
  friend AmbientElement operator*(const Rational& c, const AmbientElement& x);
  friend bool operator==(const AmbientElement&, const AmbientElement&) = default;

private:
  static void add_to(std::map<PairKey, Rational>& part, int dim, int i, int j, const Rational& c);

  int n_;
  int r_;
  std::map<PairKey, Rational> a_;
  std::map<PairKey, Rational> b_;
};

/// Commutator in the Clifford algebra, part by part:
/// [e_ie_j, e_ke_l] = 2(-d_jk e_ie_l + d_ik e_je_l + d_jl e_ie_k - d_il e_je_k).
AmbientElement bracket(const AmbientElement& x, const AmbientElement& y);

struct LieSubalgebra {
  std::vector<AmbientElement> basis;
  int dim = 0;
  bool closed = false;
  /// When closed: [basis_p, basis_q] = sum_s c(p, q, s) basis_s, stored at
  /// index (p * dim + q) * dim + s.
  std::vector<Rational> structure_constants;

  const Rational& structure_constant(int p, int q, int s) const {
    return structure_constants.at((static_cast<std::size_t>(p) * dim + q) * dim + s);
  }
};

/// Extracts an independent subset of `basis`, then checks bracket closure and
/// computes structure constants.
LieSubalgebra lie_closure_report(std::span<const AmbientElement> basis);

/// Span of the elements as a coordinate matrix (one column per element).
RationalMatrix coordinate_matrix(std::span<const AmbientElement> elements);

/// All x in spin(n) + spin(r) with x . phi = 0 for every phi in the list.
LieSubalgebra annihilator(std::span<const ScaledSpinor> spinors);

struct PairCheck {
  int k = 0;
  int l = 0;
  /// |(eta_kl + c kappa(f_kl)) . phi|^2 with c = 2 (pure) or 1 (reducing).
  Rational defect_norm2;
  bool square_ok = false;
  bool eta_nonzero = false;
};

struct PurityReport {
  bool is_pure = false;
  std::vector<PairCheck> per_pair;
};

struct ReducingReport {
  bool is_reducing = false;
  std::vector<PairCheck> per_pair;
};

/// Pure: (eta_kl + 2 kappa(f_kl)) phi = 0 and hat(eta_kl)^2 = -Id for all k < l.
/// Throws ZeroSpinor, RankTooSmall (r < 3).
PurityReport check_pure(const ScaledSpinor& phi);

/// Reducing: (eta_kl + kappa(f_kl)) phi = 0 and eta_kl != 0 for all k < l.
/// Throws ZeroSpinor, RankTooSmall (r < 2).
ReducingReport check_reducing(const ScaledSpinor& phi);

/// Untwisted prototype in Delta_{2n}: (eta + n i) phi = 0 and hat(eta)^2 = -Id.
bool check_spinc_pure(const SpinorVector& phi);
/// Twisted r = 2 form: (eta_12 + n kappa(f_12)) phi = 0 and hat(eta_12)^2 = -Id.
bool check_spinc_pure(const ScaledSpinor& phi);

enum class Certificate { Pure, Reducing };

bool certify(const ScaledSpinor& phi, Certificate kind);

enum class Relation { Square, DisjointCommute, Commutator, Anticommute, SixProduct };

std::string_view to_string(Relation relation);

struct RelationViolation {
  Relation relation;
  std::vector<int> indices;
};

struct RelationReport {
  bool ok = false;
  std::optional<RelationViolation> first_violation;
  long relations_checked = 0;
};

/// Even-Clifford relations among hat(eta_kl):
///   (i)   hat_kl^2 = -Id
///   (ii)  [hat_ij, hat_kl] = 0 for disjoint pairs
///   (iii) [hat_ij, hat_jk] = -2 hat_ik and hat_ij hat_jk = -hat_jk hat_ij = -hat_ik
///   (iv)  hat_ij hat_kl = -hat_ik hat_jl = -hat_jl hat_ik = hat_kl hat_ij
///                       = hat_jk hat_il = hat_il hat_jk
/// Stops at the first violation. Throws MissingPair, EmptyInput.
RelationReport even_clifford_verify(const EndoTable& etas);

struct CommutantResult {
  int dim = 0;
  std::vector<RationalMatrix> basis;
};

/// {X : [X, H] = 0 for all H}, optionally restricted to X^T = -X.
CommutantResult commutant(std::span<const Endo> etas, bool restrict_skew);

/// Re-certifies phi in the frame f'_k = sum_s A_ks f_s and compares with the
/// verdict in the standard frame. Throws NotOrthogonal unless A in SO(r).
bool frame_rotation_check(const ScaledSpinor& phi, const RationalMatrix& A, Certificate kind = Certificate::Pure);

/// Verdict for [g, h] . phi equals the verdict for phi.
bool equivariance_check(const ScaledSpinor& phi, std::span<const RationalVector> g_vectors,
                        std::span<const RationalVector> h_vectors, Certificate kind = Certificate::Pure);

/// Irreducible real representations of Cl_r^0.
struct ClDims {
  int r = 0;
  long d_r = 0;
  int v_r = 0;
  /// "R", "C" or "H": the division algebra of the matrix algebra Cl_r^0.
  std::string algebra;
};

ClDims cl_dims(int r);

}  // namespace spinor_forge

#endif  // SPINOR_FORGE_STRUCTURE_HPP
