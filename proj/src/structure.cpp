#include "spinor_forge/structure.hpp"

#include "spinor_forge/exact_groups.hpp"
#include "spinor_forge/linalg.hpp"
#include "spinor_forge/parallel.hpp"

#include <array>
#include <functional>
#include <sstream>

namespace spinor_forge {

namespace {

std::vector<PairKey> ordered_pairs(int dim) {
  std::vector<PairKey> out;
  for (int i = 1; i <= dim; ++i)
    for (int j = i + 1; j <= dim; ++j) out.emplace_back(i, j);
  return out;
}

int pair_position(int dim, int i, int j) {
  // (1,2) -> 0, ..., (1,dim) -> dim-2, (2,3) -> dim-1, ...
  return (i - 1) * (2 * dim - i) / 2 + (j - i - 1);
}

void bracket_part(const std::map<PairKey, Rational>& x, const std::map<PairKey, Rational>& y,
                  const std::function<void(int, int, const Rational&)>& emit) {
  for (const auto& [p, cx] : x) {
    const auto [i, j] = p;
    for (const auto& [q, cy] : y) {
      const auto [k, l] = q;
      if (i == k && j == l) continue;
      const Rational c = Rational(2) * cx * cy;
      if (j == k) emit(i, l, -c);
      if (i == k) emit(j, l, c);
      if (j == l) emit(i, k, c);
      if (i == l) emit(j, k, -c);
    }
  }
}

void require_nonzero(const ScaledSpinor& phi) {
  if (phi.is_zero()) throw Error(ErrorCode::ZeroSpinor, "the zero spinor is not certified");
}

bool squares_to_minus_identity(const Endo& h) {
  const Endo sq = h * h;
  return exactly_equal(sq, -identity_matrix(h.rows()));
}

/// sum_{s<t} (a_ks a_lt - a_kt a_ls) X_st for a table X indexed by pairs.
Rational rotated_coefficient(const RationalMatrix& A, int k, int l, int s, int t) {
  return A(k - 1, s - 1) * A(l - 1, t - 1) - A(k - 1, t - 1) * A(l - 1, s - 1);
}

struct PairData {
  TwoForm eta;
  ScaledSpinor kappa_phi;
};

/// eta_kl and kappa(f_kl) phi in the standard frame, or in the frame rows of A.
std::vector<PairCheck> pair_checks(const ScaledSpinor& phi, const Rational& coefficient, bool test_square,
                                   const RationalMatrix* frame) {
  const int r = phi.r();
  const std::vector<PairKey> pairs = ordered_pairs(r);
  std::vector<PairData> base;
  base.reserve(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) base.push_back({TwoForm(phi.n()), phi});
  parallel_for(pairs.size(), [&](std::size_t i) {
    base[i].eta = eta(phi, pairs[i].first, pairs[i].second);
    base[i].kappa_phi = twist_bivector_action(pairs[i].first, pairs[i].second, phi);
  });

  std::vector<PairCheck> out(pairs.size());
  parallel_for(pairs.size(), [&](std::size_t i) {
    const auto [k, l] = pairs[i];
    TwoForm form(phi.n());
    ScaledSpinor kphi = phi.with_coeffs({});
    if (frame == nullptr) {
      form = base[i].eta;
      kphi = base[i].kappa_phi;
    } else {
      for (std::size_t j = 0; j < pairs.size(); ++j) {
        const Rational c = rotated_coefficient(*frame, k, l, pairs[j].first, pairs[j].second);
        if (c.is_zero()) continue;
        form += c * base[j].eta;
        kphi.coeffs().add_scaled(base[j].kappa_phi.coeffs(), GaussianRational(c));
      }
    }
    ScaledSpinor defect = form_action(form, phi);
    defect.coeffs().add_scaled(kphi.coeffs(), GaussianRational(coefficient));
    PairCheck& check = out[i];
    check.k = k;
    check.l = l;
    check.defect_norm2 = defect.norm2();
    check.eta_nonzero = !form.is_zero();
    check.square_ok = test_square ? squares_to_minus_identity(eta_hat(form)) : true;
  });
  return out;
}

PurityReport purity(const ScaledSpinor& phi, const RationalMatrix* frame) {
  require_nonzero(phi);
  if (phi.r() < 3) throw Error(ErrorCode::RankTooSmall, "purity needs r >= 3, got r = " + std::to_string(phi.r()));
  PurityReport report;
  report.per_pair = pair_checks(phi, Rational(2), true, frame);
  report.is_pure = true;
  for (const PairCheck& c : report.per_pair)
    if (!c.defect_norm2.is_zero() || !c.square_ok) report.is_pure = false;
  return report;
}

ReducingReport reducing(const ScaledSpinor& phi, const RationalMatrix* frame) {
  require_nonzero(phi);
  if (phi.r() < 2)
    throw Error(ErrorCode::RankTooSmall, "reducing spinors need r >= 2, got r = " + std::to_string(phi.r()));
  ReducingReport report;
  report.per_pair = pair_checks(phi, Rational(1), false, frame);
  report.is_reducing = true;
  for (const PairCheck& c : report.per_pair)
    if (!c.defect_norm2.is_zero() || !c.eta_nonzero) report.is_reducing = false;
  return report;
}

bool verdict(const ScaledSpinor& phi, Certificate kind, const RationalMatrix* frame) {
  return kind == Certificate::Pure ? purity(phi, frame).is_pure : reducing(phi, frame).is_reducing;
}

}  // namespace

AmbientElement::AmbientElement(int n, int r) : n_(n), r_(r) {
  if (n < 0 || r < 0) throw Error(ErrorCode::IndexOutOfRange, "negative dimension");
}

void AmbientElement::add_to(std::map<PairKey, Rational>& part, int dim, int i, int j, const Rational& c) {
  if (i < 1 || j < 1 || i > dim || j > dim || i == j)
    throw Error(ErrorCode::IndexOutOfRange,
                "bivector index (" + std::to_string(i) + "," + std::to_string(j) + ") out of range");
  if (c.is_zero()) return;
  const Rational v = i < j ? c : -c;
  const PairKey key = i < j ? PairKey{i, j} : PairKey{j, i};
  auto [it, inserted] = part.try_emplace(key, v);
  if (!inserted) {
    it->second += v;
    if (it->second.is_zero()) part.erase(it);
  }
}

AmbientElement& AmbientElement::add_a(int i, int j, const Rational& c) {
  add_to(a_, n_, i, j, c);
  return *this;
}

AmbientElement& AmbientElement::add_b(int k, int l, const Rational& c) {
  add_to(b_, r_, k, l, c);
  return *this;
}

AmbientElement& AmbientElement::add_form(const TwoForm& omega, const Rational& c) {
  if (omega.n() != n_) throw Error(ErrorCode::ShapeMismatch, "2-form dimension differs from n");
  for (int i = 1; i <= n_; ++i)
    for (int j = i + 1; j <= n_; ++j)
      if (!omega(i, j).is_zero()) add_a(i, j, c * omega(i, j));
  return *this;
}

AmbientElement AmbientElement::from_coordinates(int n, int r, const RationalVector& coords) {
  if (coords.size() != coordinate_count(n, r)) throw Error(ErrorCode::ShapeMismatch, "coordinate vector length");
  AmbientElement x(n, r);
  Eigen::Index idx = 0;
  for (const auto& [i, j] : ordered_pairs(n)) x.add_a(i, j, coords(idx++));
  for (const auto& [k, l] : ordered_pairs(r)) x.add_b(k, l, coords(idx++));
  return x;
}

RationalVector AmbientElement::coordinates() const {
  const int na = n_ * (n_ - 1) / 2;
  RationalVector out = RationalVector::Constant(coordinate_count(n_, r_), Rational(0));
  for (const auto& [p, c] : a_) out(pair_position(n_, p.first, p.second)) = c;
  for (const auto& [p, c] : b_) out(na + pair_position(r_, p.first, p.second)) = c;
  return out;
}

ScaledSpinor AmbientElement::act(const ScaledSpinor& phi) const {
  if (phi.n() != n_ || phi.r() != r_) throw Error(ErrorCode::ShapeMismatch, "element and spinor shapes differ");
  CliffordForm form;
  for (const auto& [p, c] : a_) form.push_back({{p.first, p.second}, c});
  ScaledSpinor out = form.empty() ? phi.with_coeffs({}) : spin_clifford_action(form, phi);
  for (const auto& [p, c] : b_)
    out.coeffs().add_scaled(twist_bivector_action(p.first, p.second, phi).coeffs(), GaussianRational(c));
  return out;
}

std::string AmbientElement::to_text() const {
  std::ostringstream os;
  bool first = true;
  auto emit = [&](const std::map<PairKey, Rational>& part, char letter) {
    for (const auto& [p, c] : part) {
      const Rational mag = c.abs();
      if (first) {
        if (c.sign() < 0) os << "-";
      } else {
        os << (c.sign() < 0 ? " - " : " + ");
      }
      if (!(mag == Rational(1))) os << mag << " * ";
      os << letter << p.first << letter << p.second;
      first = false;
    }
  };
  emit(a_, 'e');
  emit(b_, 'f');
  return first ? std::string("0") : os.str();
}

AmbientElement operator+(AmbientElement x, const AmbientElement& y) {
  if (x.n_ != y.n_ || x.r_ != y.r_) throw Error(ErrorCode::ShapeMismatch, "element shapes differ");
  for (const auto& [p, c] : y.a_) x.add_a(p.first, p.second, c);
  for (const auto& [p, c] : y.b_) x.add_b(p.first, p.second, c);
  return x;
}

AmbientElement operator*(const Rational& c, const AmbientElement& x) {
  AmbientElement out(x.n_, x.r_);
  for (const auto& [p, v] : x.a_) out.add_a(p.first, p.second, c * v);
  for (const auto& [p, v] : x.b_) out.add_b(p.first, p.second, c * v);
  return out;
}

AmbientElement bracket(const AmbientElement& x, const AmbientElement& y) {
  if (x.n() != y.n() || x.r() != y.r()) throw Error(ErrorCode::ShapeMismatch, "element shapes differ");
  AmbientElement out(x.n(), x.r());
  bracket_part(x.a(), y.a(), [&](int i, int j, const Rational& c) { out.add_a(i, j, c); });
  bracket_part(x.b(), y.b(), [&](int k, int l, const Rational& c) { out.add_b(k, l, c); });
  return out;
}

RationalMatrix coordinate_matrix(std::span<const AmbientElement> elements) {
  if (elements.empty()) throw Error(ErrorCode::EmptyInput, "no elements");
  const int n = elements.front().n();
  const int r = elements.front().r();
  RationalMatrix out(AmbientElement::coordinate_count(n, r), static_cast<Eigen::Index>(elements.size()));
  for (std::size_t c = 0; c < elements.size(); ++c) {
    if (elements[c].n() != n || elements[c].r() != r) throw Error(ErrorCode::ShapeMismatch, "element shapes differ");
    out.col(static_cast<Eigen::Index>(c)) = elements[c].coordinates();
  }
  return out;
}

LieSubalgebra lie_closure_report(std::span<const AmbientElement> basis) {
  if (basis.empty()) throw Error(ErrorCode::EmptyInput, "empty basis");
  const int n = basis.front().n();
  const int r = basis.front().r();
  const int width = AmbientElement::coordinate_count(n, r);

  LieSubalgebra out;
  FractionFreeEchelon span(width);
  for (const AmbientElement& x : basis) {
    if (x.n() != n || x.r() != r) throw Error(ErrorCode::ShapeMismatch, "element shapes differ");
    if (span.add_row(x.coordinates().transpose())) out.basis.push_back(x);
  }
  out.dim = static_cast<int>(out.basis.size());
  if (out.dim == 0) {
    out.closed = true;
    return out;
  }

  const int d = out.dim;
  const RationalMatrix B = coordinate_matrix(out.basis);
  std::vector<std::pair<int, int>> jobs;
  for (int p = 0; p < d; ++p)
    for (int q = p + 1; q < d; ++q) jobs.emplace_back(p, q);
  std::vector<std::optional<RationalVector>> solutions(jobs.size());
  parallel_for(jobs.size(), [&](std::size_t j) {
    const auto [p, q] = jobs[j];
    solutions[j] = solve(B, bracket(out.basis[p], out.basis[q]).coordinates());
  });

  out.closed = true;
  for (const auto& s : solutions)
    if (!s) out.closed = false;
  if (!out.closed) return out;

  out.structure_constants.assign(static_cast<std::size_t>(d) * d * d, Rational(0));
  for (std::size_t j = 0; j < jobs.size(); ++j) {
    const auto [p, q] = jobs[j];
    for (int s = 0; s < d; ++s) {
      out.structure_constants[(static_cast<std::size_t>(p) * d + q) * d + s] = (*solutions[j])(s);
      out.structure_constants[(static_cast<std::size_t>(q) * d + p) * d + s] = -(*solutions[j])(s);
    }
  }
  return out;
}

LieSubalgebra annihilator(std::span<const ScaledSpinor> spinors) {
  if (spinors.empty()) throw Error(ErrorCode::EmptyInput, "annihilator of an empty list");
  const TwistedShape shape = spinors.front().shape();
  for (const ScaledSpinor& phi : spinors)
    if (!(phi.shape() == shape)) throw Error(ErrorCode::ShapeMismatch, "spinors of different shape");

  const std::vector<PairKey> a_pairs = ordered_pairs(shape.n);
  const std::vector<PairKey> b_pairs = ordered_pairs(shape.r);
  const std::size_t unknowns = a_pairs.size() + b_pairs.size();
  const std::size_t total = unknowns * spinors.size();

  // Image of each unknown's generator on each spinor, assembled in parallel.
  std::vector<CoeffMap> images(total);
  parallel_for(total, [&](std::size_t job) {
    const std::size_t u = job % unknowns;
    const ScaledSpinor& phi = spinors[job / unknowns];
    if (u < a_pairs.size()) {
      const auto [i, j] = a_pairs[u];
      images[job] = spin_clifford_action({FormTerm{{i, j}, Rational(1)}}, phi).coeffs();
    } else {
      const auto [k, l] = b_pairs[u - a_pairs.size()];
      images[job] = twist_bivector_action(k, l, phi).coeffs();
    }
  });

  FractionFreeEchelon system(static_cast<int>(unknowns));
  for (std::size_t s = 0; s < spinors.size(); ++s) {
    std::map<std::uint64_t, std::vector<GaussianRational>> rows;
    for (std::size_t u = 0; u < unknowns; ++u)
      for (const auto& [key, value] : images[s * unknowns + u]) {
        auto [it, inserted] = rows.try_emplace(key);
        if (inserted) it->second.assign(unknowns, GaussianRational());
        it->second[u] = value;
      }
    std::vector<Rational> re(unknowns), im(unknowns);
    for (const auto& [key, row] : rows) {
      bool any_re = false, any_im = false;
      for (std::size_t u = 0; u < unknowns; ++u) {
        re[u] = row[u].re();
        im[u] = row[u].im();
        any_re = any_re || !re[u].is_zero();
        any_im = any_im || !im[u].is_zero();
      }
      if (any_re) system.add_row(std::span<const Rational>(re));
      if (any_im) system.add_row(std::span<const Rational>(im));
      if (system.rank() == static_cast<int>(unknowns)) break;
    }
  }

  const RationalMatrix kernel = system.nullspace();
  std::vector<AmbientElement> basis;
  for (Eigen::Index c = 0; c < kernel.cols(); ++c)
    basis.push_back(AmbientElement::from_coordinates(shape.n, shape.r, kernel.col(c)));
  if (basis.empty()) {
    LieSubalgebra zero;
    zero.closed = true;
    return zero;
  }
  return lie_closure_report(basis);
}

PurityReport check_pure(const ScaledSpinor& phi) { return purity(phi, nullptr); }

ReducingReport check_reducing(const ScaledSpinor& phi) { return reducing(phi, nullptr); }

bool certify(const ScaledSpinor& phi, Certificate kind) { return verdict(phi, kind, nullptr); }

bool check_spinc_pure(const SpinorVector& phi) {
  if (phi.is_zero()) throw Error(ErrorCode::ZeroSpinor, "the zero spinor is not certified");
  if (phi.n() % 2 != 0) throw Error(ErrorCode::ShapeMismatch, "Spin^c purity needs an even dimension");
  const TwoForm omega = spinc_form(phi);
  SpinorVector defect = form_action(omega, phi);
  defect.coeffs().add_scaled(phi.coeffs(), GaussianRational(Rational(0), Rational(phi.n() / 2)));
  return defect.is_zero() && squares_to_minus_identity(eta_hat(omega));
}

bool check_spinc_pure(const ScaledSpinor& phi) {
  require_nonzero(phi);
  if (phi.n() % 2 != 0) throw Error(ErrorCode::ShapeMismatch, "Spin^c purity needs an even dimension");
  const TwoForm omega = spinc_form(phi);
  ScaledSpinor defect = form_action(omega, phi);
  defect.coeffs().add_scaled(twist_bivector_action(1, 2, phi).coeffs(), GaussianRational(Rational(phi.n() / 2)));
  return defect.is_zero() && squares_to_minus_identity(eta_hat(omega));
}

std::string_view to_string(Relation relation) {
  switch (relation) {
    case Relation::Square: return "square";
    case Relation::DisjointCommute: return "disjoint-commute";
    case Relation::Commutator: return "commutator";
    case Relation::Anticommute: return "anticommute";
    case Relation::SixProduct: return "six-product";
  }
  return "unknown";
}

RelationReport even_clifford_verify(const EndoTable& etas) {
  if (etas.empty()) throw Error(ErrorCode::EmptyInput, "no endomorphisms");
  int r = 0;
  for (const auto& [key, h] : etas) {
    if (key.first < 1 || key.first >= key.second) throw Error(ErrorCode::IndexOutOfRange, "pairs must satisfy 1 <= k < l");
    r = std::max(r, key.second);
  }
  const Eigen::Index n = etas.begin()->second.rows();
  for (const auto& [key, h] : etas)
    if (h.rows() != n || h.cols() != n) throw Error(ErrorCode::ShapeMismatch, "endomorphisms of different size");
  for (int k = 1; k <= r; ++k)
    for (int l = k + 1; l <= r; ++l)
      if (!etas.contains({k, l}))
        throw Error(ErrorCode::MissingPair, "missing pair (" + std::to_string(k) + "," + std::to_string(l) + ")");

  // H(i, j) for i != j with H(j, i) = -H(i, j).
  auto H = [&](int i, int j) -> Endo { return i < j ? etas.at({i, j}) : Endo(-etas.at({j, i})); };
  std::map<std::array<int, 4>, Endo> cache;
  auto prod = [&](int i, int j, int k, int l) -> const Endo& {
    auto [it, inserted] = cache.try_emplace({i, j, k, l});
    if (inserted) it->second = H(i, j) * H(k, l);
    return it->second;
  };
  const Endo minus_id = -identity_matrix(n);

  RelationReport report;
  auto fail = [&](Relation rel, std::vector<int> idx) {
    report.ok = false;
    report.first_violation = RelationViolation{rel, std::move(idx)};
    return report;
  };

  for (int k = 1; k <= r; ++k)
    for (int l = k + 1; l <= r; ++l) {
      ++report.relations_checked;
      if (!exactly_equal(prod(k, l, k, l), minus_id)) return fail(Relation::Square, {k, l});
    }

  for (int i = 1; i <= r; ++i)
    for (int j = i + 1; j <= r; ++j)
      for (int k = 1; k <= r; ++k)
        for (int l = k + 1; l <= r; ++l) {
          if (k == i || k == j || l == i || l == j || std::pair{k, l} <= std::pair{i, j}) continue;
          ++report.relations_checked;
          if (!exactly_equal(prod(i, j, k, l), prod(k, l, i, j))) return fail(Relation::DisjointCommute, {i, j, k, l});
        }

  for (int i = 1; i <= r; ++i)
    for (int j = 1; j <= r; ++j)
      for (int k = 1; k <= r; ++k) {
        if (i == j || j == k || i == k) continue;
        ++report.relations_checked;
        const Endo& ab = prod(i, j, j, k);
        const Endo& ba = prod(j, k, i, j);
        const Endo hik = H(i, k);
        if (!exactly_equal(Endo(ab - ba), Endo(hik * Rational(-2)))) return fail(Relation::Commutator, {i, j, k});
        if (!exactly_equal(ab, Endo(-ba)) || !exactly_equal(ab, Endo(-hik))) return fail(Relation::Anticommute, {i, j, k});
      }

  for (int i = 1; i <= r; ++i)
    for (int j = 1; j <= r; ++j)
      for (int k = 1; k <= r; ++k)
        for (int l = 1; l <= r; ++l) {
          if (i == j || i == k || i == l || j == k || j == l || k == l) continue;
          ++report.relations_checked;
          const Endo& base = prod(i, j, k, l);
          const bool ok = exactly_equal(base, Endo(-prod(i, k, j, l))) && exactly_equal(base, Endo(-prod(j, l, i, k))) &&
                          exactly_equal(base, prod(k, l, i, j)) && exactly_equal(base, prod(j, k, i, l)) &&
                          exactly_equal(base, prod(i, l, j, k));
          if (!ok) return fail(Relation::SixProduct, {i, j, k, l});
        }

  report.ok = true;
  return report;
}

CommutantResult commutant(std::span<const Endo> etas, bool restrict_skew) {
  if (etas.empty()) throw Error(ErrorCode::EmptyInput, "commutant of an empty list");
  const Eigen::Index n = etas.front().rows();
  for (const Endo& h : etas)
    if (h.rows() != n || h.cols() != n) throw Error(ErrorCode::ShapeMismatch, "endomorphisms of different size");

  const int unknowns = static_cast<int>(n * n);
  auto var = [n](Eigen::Index i, Eigen::Index j) { return static_cast<std::size_t>(i * n + j); };
  FractionFreeEchelon system(unknowns);
  std::vector<Rational> row(unknowns);
  auto reset = [&] { std::fill(row.begin(), row.end(), Rational(0)); };

  if (restrict_skew) {
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = i; j < n; ++j) {
        reset();
        row[var(i, j)] += Rational(1);
        row[var(j, i)] += Rational(1);
        system.add_row(std::span<const Rational>(row));
      }
  }
  // (XH - HX)_ij = sum_t X_it H_tj - H_it X_tj.
  for (const Endo& h : etas)
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j) {
        reset();
        for (Eigen::Index t = 0; t < n; ++t) {
          row[var(i, t)] += h(t, j);
          row[var(t, j)] -= h(i, t);
        }
        system.add_row(std::span<const Rational>(row));
      }

  const RationalMatrix kernel = system.nullspace();
  CommutantResult out;
  out.dim = static_cast<int>(kernel.cols());
  for (Eigen::Index c = 0; c < kernel.cols(); ++c) {
    RationalMatrix X(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j) X(i, j) = kernel(static_cast<Eigen::Index>(var(i, j)), c);
    out.basis.push_back(std::move(X));
  }
  return out;
}

bool frame_rotation_check(const ScaledSpinor& phi, const RationalMatrix& A, Certificate kind) {
  if (A.rows() != phi.r() || A.cols() != phi.r()) throw Error(ErrorCode::ShapeMismatch, "frame matrix must be r x r");
  if (!is_orthogonal(A) || !(determinant(A) == Rational(1)))
    throw Error(ErrorCode::NotOrthogonal, "frame change must lie in SO(r)");
  return verdict(phi, kind, &A) == verdict(phi, kind, nullptr);
}

bool equivariance_check(const ScaledSpinor& phi, std::span<const RationalVector> g_vectors,
                        std::span<const RationalVector> h_vectors, Certificate kind) {
  const ScaledSpinor moved = twisted_group_action(g_vectors, h_vectors, phi);
  return verdict(moved, kind, nullptr) == verdict(phi, kind, nullptr);
}

ClDims cl_dims(int r) {
  if (r < 1) throw Error(ErrorCode::IndexOutOfRange, "rank must be positive");
  const int half = r / 2;
  ClDims out;
  out.r = r;
  out.v_r = 1;
  switch (r % 8) {
    case 1:
    case 7:
      out.d_r = 1L << half;
      out.algebra = "R";
      break;
    case 2:
    case 6:
      out.d_r = 1L << half;
      out.algebra = "C";
      break;
    case 3:
    case 5:
      out.d_r = 1L << (half + 1);
      out.algebra = "H";
      break;
    case 4:
      out.d_r = 1L << half;
      out.algebra = "H";
      out.v_r = 2;
      break;
    case 0:
      out.d_r = 1L << (half - 1);
      out.algebra = "R";
      out.v_r = 2;
      break;
  }
  return out;
}

}  // namespace spinor_forge
