#ifndef SPINOR_FORGE_COEFF_MAP_HPP
#define SPINOR_FORGE_COEFF_MAP_HPP

#include "spinor_forge/gaussian.hpp"

#include <bit>
#include <cstdint>
#include <map>

namespace spinor_forge {

/// Sparse vector over Q(i) keyed by packed basis bits. Zero coefficients are
/// never stored.
class CoeffMap {
public:
  using Map = std::map<std::uint64_t, GaussianRational>;
  using const_iterator = Map::const_iterator;

  void add(std::uint64_t key, const GaussianRational& value) {
    if (value.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(key, value);
    if (!inserted) {
      it->second += value;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  GaussianRational at(std::uint64_t key) const {
    const auto it = terms_.find(key);
    return it == terms_.end() ? GaussianRational() : it->second;
  }

  void add_scaled(const CoeffMap& other, const GaussianRational& factor) {
    if (factor.is_zero()) return;
    for (const auto& [key, value] : other.terms_) add(key, factor * value);
  }

  CoeffMap scaled(const GaussianRational& factor) const {
    CoeffMap out;
    if (factor.is_zero()) return out;
    for (const auto& [key, value] : terms_) out.terms_.emplace_hint(out.terms_.end(), key, factor * value);
    return out;
  }

  /// sum a[k] * conj(b[k]) by merge over the sorted keys.
  friend GaussianRational sesquilinear(const CoeffMap& a, const CoeffMap& b) {
    GaussianRational acc;
    auto ia = a.terms_.begin();
    auto ib = b.terms_.begin();
    while (ia != a.terms_.end() && ib != b.terms_.end()) {
      if (ia->first < ib->first) {
        ++ia;
      } else if (ib->first < ia->first) {
        ++ib;
      } else {
        acc += ia->second * ib->second.conj();
        ++ia;
        ++ib;
      }
    }
    return acc;
  }

  Rational norm2() const {
    Rational acc(0);
    for (const auto& [key, value] : terms_) acc += value.norm2();
    return acc;
  }

  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const_iterator begin() const { return terms_.begin(); }
  const_iterator end() const { return terms_.end(); }
  Map& raw() { return terms_; }
  const Map& raw() const { return terms_; }

  friend bool operator==(const CoeffMap& a, const CoeffMap& b) { return a.terms_ == b.terms_; }

private:
  Map terms_;
};

/// Result of one Clifford generator on a single basis key: i^power * key'.
struct UnitStep {
  int i_power = 0;
  std::uint64_t bits = 0;
};

/// Applies kappa(e_gen) of Cl_dim to the block of floor(dim/2) tuple entries
/// that starts at bit `offset`. Tuple entry p (0 = leftmost Kronecker factor)
/// lives at bit offset+p; a set bit means eps = -1.
///
/// e_{2j-1}, e_{2j} put g1/g2 on entry k-j and T on every entry to its right;
/// e_dim for odd dim is i*T on every entry. In the u_{+-1} basis:
///   g1 u_e = i u_{-e},  g2 u_e = e u_{-e},  T u_e = -e u_e.
inline UnitStep generator_on_block(int dim, int gen, std::uint64_t bits, int offset) {
  const int k = dim / 2;
  int power = 0;
  int t_from = 0;
  if (dim % 2 == 1 && gen == dim) {
    power = 1;
  } else {
    const int pos = k - (gen + 1) / 2;
    const std::uint64_t bit = std::uint64_t{1} << (offset + pos);
    if (gen % 2 == 1)
      power += 1;
    else if (bits & bit)
      power += 2;
    bits ^= bit;
    t_from = pos + 1;
  }
  const int width = k - t_from;
  if (width > 0) {
    const std::uint64_t mask = ((width == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << width) - 1)))
                               << (offset + t_from);
    const int plus = width - std::popcount(bits & mask);
    power += 2 * (plus & 1);
  }
  return {power & 3, bits};
}

/// Applies a generator to every term of a coefficient map (block at `offset`).
inline CoeffMap apply_generator(const CoeffMap& in, int dim, int gen, int offset) {
  CoeffMap out;
  for (const auto& [key, value] : in) {
    const UnitStep step = generator_on_block(dim, gen, key, offset);
    out.raw().emplace(step.bits, value.times_i_power(step.i_power));
  }
  return out;
}

}  // namespace spinor_forge

#endif  // SPINOR_FORGE_COEFF_MAP_HPP
