#include "spinor_forge/exact_groups.hpp"

#include "spinor_forge/error.hpp"
#include "spinor_forge/linalg.hpp"

namespace spinor_forge {

RationalVector unit_vector_from_parameters(const RationalVector& t) {
  const Eigen::Index d = t.size();
  Rational s(0);
  for (Eigen::Index j = 0; j < d; ++j) s += t(j) * t(j);
  const Rational den = s + Rational(1);
  RationalVector x(d + 1);
  for (Eigen::Index j = 0; j < d; ++j) x(j) = Rational(2) * t(j) / den;
  x(d) = (s - Rational(1)) / den;
  return x;
}

RationalMatrix cayley_transform(const RationalMatrix& S) {
  if (S.rows() != S.cols()) throw Error(ErrorCode::ShapeMismatch, "Cayley transform needs a square matrix");
  if (!exactly_equal(S, RationalMatrix(-S.transpose())))
    throw Error(ErrorCode::NotOrthogonal, "Cayley transform needs an antisymmetric matrix");
  const RationalMatrix I = identity_matrix(S.rows());
  return RationalMatrix(I - S) * inverse(RationalMatrix(I + S));
}

RationalMatrix givens_rotation(int dim, int p, int q, const Rational& c, const Rational& s) {
  if (p < 1 || q < 1 || p > dim || q > dim || p == q) throw Error(ErrorCode::IndexOutOfRange, "bad Givens plane");
  if (!(c * c + s * s == Rational(1))) throw Error(ErrorCode::NotOrthogonal, "Givens pair is not on the unit circle");
  RationalMatrix G = identity_matrix(dim);
  G(p - 1, p - 1) = c;
  G(q - 1, q - 1) = c;
  G(p - 1, q - 1) = -s;
  G(q - 1, p - 1) = s;
  return G;
}

bool is_orthogonal(const RationalMatrix& A) {
  if (A.rows() != A.cols()) return false;
  return exactly_equal(RationalMatrix(A.transpose() * A), identity_matrix(A.rows()));
}

RationalVector basis_vector(int n, int i) {
  if (i < 1 || i > n) throw Error(ErrorCode::IndexOutOfRange, "basis vector index outside 1..n");
  RationalVector v = RationalVector::Constant(n, Rational(0));
  v(i - 1) = Rational(1);
  return v;
}

Rational random_rational(std::mt19937_64& rng, int spread) {
  std::uniform_int_distribution<long> num(-spread, spread);
  std::uniform_int_distribution<long> den(1, spread);
  return Rational(num(rng), den(rng));
}

RationalVector random_unit_vector(std::mt19937_64& rng, int n, int spread) {
  if (n == 1) {
    RationalVector v(1);
    v(0) = Rational(std::bernoulli_distribution(0.5)(rng) ? 1 : -1);
    return v;
  }
  RationalVector t(n - 1);
  for (int j = 0; j < n - 1; ++j) t(j) = random_rational(rng, spread);
  return unit_vector_from_parameters(t);
}

RationalVector random_vector(std::mt19937_64& rng, int n, int spread) {
  RationalVector v(n);
  for (int j = 0; j < n; ++j) v(j) = random_rational(rng, spread);
  return v;
}

RationalMatrix random_skew(std::mt19937_64& rng, int r, int spread) {
  RationalMatrix S = zero_matrix(r, r);
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j) {
      S(i, j) = random_rational(rng, spread);
      S(j, i) = -S(i, j);
    }
  return S;
}

RationalMatrix random_rotation(std::mt19937_64& rng, int r) { return cayley_transform(random_skew(rng, r)); }

std::vector<RationalVector> random_spin_word(std::mt19937_64& rng, int n, int pairs) {
  std::vector<RationalVector> out;
  for (int i = 0; i < 2 * pairs; ++i) out.push_back(random_unit_vector(rng, n));
  return out;
}

ScaledSpinor random_spinor(std::mt19937_64& rng, const TwistedShape& shape, double density, int spread) {
  ScaledSpinor phi(shape);
  std::bernoulli_distribution keep(density);
  const std::uint64_t dim = shape.dimension();
  for (std::uint64_t key = 0; key < dim; ++key) {
    if (!keep(rng)) continue;
    phi.coeffs().add(key, GaussianRational(random_rational(rng, spread), random_rational(rng, spread)));
  }
  if (phi.is_zero()) phi.coeffs().add(0, GaussianRational(1));
  return phi;
}

}  // namespace spinor_forge
