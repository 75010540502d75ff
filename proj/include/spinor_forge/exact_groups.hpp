#ifndef SPINOR_FORGE_EXACT_GROUPS_HPP
#define SPINOR_FORGE_EXACT_GROUPS_HPP

#include "spinor_forge/twisted.hpp"

#include <random>
#include <vector>

namespace spinor_forge {

// Exact elements of SO(r) and Spin(n) with rational entries, plus random
// rational test data. Everything is deterministic given the engine state.

/// Inverse stereographic projection of t in Q^{n-1}: a rational unit vector
/// (2t, |t|^2 - 1) / (|t|^2 + 1) in Q^n.
RationalVector unit_vector_from_parameters(const RationalVector& t);

/// (I - S)(I + S)^{-1} for antisymmetric S; always in SO(r).
RationalMatrix cayley_transform(const RationalMatrix& S);

/// Rotation by (c, s) in the (p, q) plane of R^dim (1-based); needs c^2 + s^2 = 1.
RationalMatrix givens_rotation(int dim, int p, int q, const Rational& c, const Rational& s);

bool is_orthogonal(const RationalMatrix& A);

/// Column vector with a single 1 at position i (1-based).
RationalVector basis_vector(int n, int i);

Rational random_rational(std::mt19937_64& rng, int spread);
RationalVector random_unit_vector(std::mt19937_64& rng, int n, int spread = 4);
RationalVector random_vector(std::mt19937_64& rng, int n, int spread = 4);
RationalMatrix random_skew(std::mt19937_64& rng, int r, int spread = 3);
RationalMatrix random_rotation(std::mt19937_64& rng, int r);
/// 2 * pairs random rational unit vectors in R^n.
std::vector<RationalVector> random_spin_word(std::mt19937_64& rng, int n, int pairs = 1);

/// Random element of Delta_n (x) Delta_r^{(x) m}; each basis coefficient is
/// nonzero with probability `density`.
ScaledSpinor random_spinor(std::mt19937_64& rng, const TwistedShape& shape, double density = 0.6, int spread = 3);

}  // namespace spinor_forge

#endif  // SPINOR_FORGE_EXACT_GROUPS_HPP
