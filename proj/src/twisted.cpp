#include "spinor_forge/twisted.hpp"

#include "spinor_forge/error.hpp"

#include <string>

namespace spinor_forge {

namespace {

void check_same_shape(const ScaledSpinor& a, const ScaledSpinor& b) {
  if (!(a.shape() == b.shape())) throw Error(ErrorCode::ShapeMismatch, "twisted spinors have different (n, r, m)");
}

void check_same_scale(const ScaledSpinor& a, const ScaledSpinor& b) {
  check_same_shape(a, b);
  if (!(a.scale2() == b.scale2()))
    throw Error(ErrorCode::ScaleMismatch, "cannot add spinors with scale2 " + a.scale2().to_string() + " and " +
                                              b.scale2().to_string());
}

CoeffMap apply_word(CoeffMap acc, const std::vector<int>& factors, int dim, int offset) {
  for (auto it = factors.rbegin(); it != factors.rend(); ++it) acc = apply_generator(acc, dim, *it, offset);
  return acc;
}

CoeffMap vector_on_block(const CoeffMap& in, const RationalVector& x, int dim, int offset) {
  CoeffMap out;
  for (int j = 0; j < dim; ++j) {
    if (x(j).is_zero()) continue;
    out.add_scaled(apply_generator(in, dim, j + 1, offset), GaussianRational(x(j)));
  }
  return out;
}

}  // namespace

void TwistedShape::validate() const {
  if (n < 1 || r < 0 || m < 0) throw Error(ErrorCode::ShapeMismatch, "invalid twisted shape");
  if (m > 0 && r < 1) throw Error(ErrorCode::ShapeMismatch, "twist slots need r >= 1");
  if (total_bits() > 62) throw Error(ErrorCode::ShapeMismatch, "twisted spinor space too large to index");
}

std::uint64_t TwistedIndex::pack(const TwistedShape& shape) const {
  if (spin.length() != shape.spin_bits() || static_cast<int>(twist.size()) != shape.m)
    throw Error(ErrorCode::ShapeMismatch, "twisted index does not match the shape");
  std::uint64_t key = spin.bits();
  for (int a = 1; a <= shape.m; ++a) {
    const BasisIndex& t = twist[a - 1];
    if (t.length() != shape.twist_bits()) throw Error(ErrorCode::ShapeMismatch, "twist index has the wrong length");
    key |= t.bits() << shape.slot_offset(a);
  }
  return key;
}

TwistedIndex TwistedIndex::unpack(std::uint64_t key, const TwistedShape& shape) {
  TwistedIndex out;
  out.spin = BasisIndex::from_bits(key, shape.spin_bits());
  for (int a = 1; a <= shape.m; ++a)
    out.twist.push_back(BasisIndex::from_bits(key >> shape.slot_offset(a), shape.twist_bits()));
  return out;
}

ScaledSpinor::ScaledSpinor(TwistedShape shape, Rational scale2) : shape_(shape), scale2_(std::move(scale2)) {
  shape_.validate();
  if (scale2_.sign() <= 0) throw Error(ErrorCode::ShapeMismatch, "scale2 must be positive");
}

void ScaledSpinor::set_scale2(Rational s) {
  if (s.sign() <= 0) throw Error(ErrorCode::ShapeMismatch, "scale2 must be positive");
  scale2_ = std::move(s);
}

GaussianRational ScaledSpinor::operator[](const TwistedIndex& index) const { return coeffs_.at(index.pack(shape_)); }

void ScaledSpinor::add(const TwistedIndex& index, const GaussianRational& value) { coeffs_.add(index.pack(shape_), value); }

ScaledSpinor ScaledSpinor::with_coeffs(CoeffMap coeffs) const {
  ScaledSpinor out(shape_, scale2_);
  out.coeffs_ = std::move(coeffs);
  return out;
}

ScaledSpinor& ScaledSpinor::operator+=(const ScaledSpinor& o) {
  check_same_scale(*this, o);
  coeffs_.add_scaled(o.coeffs_, GaussianRational(1));
  return *this;
}

ScaledSpinor& ScaledSpinor::operator-=(const ScaledSpinor& o) {
  check_same_scale(*this, o);
  coeffs_.add_scaled(o.coeffs_, GaussianRational(-1));
  return *this;
}

ScaledSpinor spin_generator_action(int i, const ScaledSpinor& phi) {
  if (i < 1 || i > phi.n())
    throw Error(ErrorCode::IndexOutOfRange, "generator e_" + std::to_string(i) + " outside 1.." + std::to_string(phi.n()));
  return phi.with_coeffs(apply_generator(phi.coeffs(), phi.n(), i, 0));
}

ScaledSpinor spin_clifford_action(const CliffordForm& omega, const ScaledSpinor& phi) {
  CoeffMap out;
  for (const FormTerm& term : omega) {
    for (int f : term.factors)
      if (f < 1 || f > phi.n()) throw Error(ErrorCode::IndexOutOfRange, "form factor outside 1..n");
    if (term.coeff.is_zero()) continue;
    out.add_scaled(apply_word(phi.coeffs(), term.factors, phi.n(), 0), GaussianRational(term.coeff));
  }
  return phi.with_coeffs(std::move(out));
}

ScaledSpinor tangent_action(const RationalVector& X, const ScaledSpinor& phi) {
  if (X.size() != phi.n()) throw Error(ErrorCode::ShapeMismatch, "tangent vector length differs from n");
  return phi.with_coeffs(vector_on_block(phi.coeffs(), X, phi.n(), 0));
}

ScaledSpinor twist_bivector_action(int k, int l, const ScaledSpinor& phi) {
  const int r = phi.r();
  if (k < 1 || k > r || l < 1 || l > r)
    throw Error(ErrorCode::IndexOutOfRange, "f_" + std::to_string(k) + "f_" + std::to_string(l) + " outside 1.." +
                                                std::to_string(r));
  CoeffMap out;
  for (int a = 1; a <= phi.m(); ++a) {
    const int offset = phi.shape().slot_offset(a);
    out.add_scaled(apply_generator(apply_generator(phi.coeffs(), r, l, offset), r, k, offset), GaussianRational(1));
  }
  return phi.with_coeffs(std::move(out));
}

ScaledSpinor mu_slot(int slot, const CliffordForm& omega, const ScaledSpinor& phi) {
  if (slot < 1 || slot > phi.m())
    throw Error(ErrorCode::IndexOutOfRange, "twist slot " + std::to_string(slot) + " outside 1.." + std::to_string(phi.m()));
  const int offset = phi.shape().slot_offset(slot);
  CoeffMap out;
  for (const FormTerm& term : omega) {
    for (int f : term.factors)
      if (f < 1 || f > phi.r()) throw Error(ErrorCode::IndexOutOfRange, "form factor outside 1..r");
    if (term.coeff.is_zero()) continue;
    out.add_scaled(apply_word(phi.coeffs(), term.factors, phi.r(), offset), GaussianRational(term.coeff));
  }
  return phi.with_coeffs(std::move(out));
}

ScaledSpinor twisted_group_action(std::span<const RationalVector> g_vectors, std::span<const RationalVector> h_vectors,
                                  const ScaledSpinor& phi) {
  validate_group_word(phi.n(), g_vectors);
  validate_group_word(phi.r(), h_vectors);
  CoeffMap acc = phi.coeffs();
  for (auto it = g_vectors.rbegin(); it != g_vectors.rend(); ++it) acc = vector_on_block(acc, *it, phi.n(), 0);
  for (int a = 1; a <= phi.m(); ++a) {
    const int offset = phi.shape().slot_offset(a);
    for (auto it = h_vectors.rbegin(); it != h_vectors.rend(); ++it) acc = vector_on_block(acc, *it, phi.r(), offset);
  }
  return phi.with_coeffs(std::move(acc));
}

GaussianRational twisted_hermitian(const ScaledSpinor& phi1, const ScaledSpinor& phi2) {
  check_same_shape(phi1, phi2);
  Rational prefactor = phi1.scale2();
  if (!(phi1.scale2() == phi2.scale2())) {
    const auto root = (phi1.scale2() * phi2.scale2()).sqrt_exact();
    if (!root)
      throw Error(ErrorCode::ScaleMismatch, "sqrt(" + phi1.scale2().to_string() + " * " + phi2.scale2().to_string() +
                                                ") is irrational");
    prefactor = *root;
  }
  return prefactor * sesquilinear(phi1.coeffs(), phi2.coeffs());
}

}  // namespace spinor_forge
