#include "altalg/commuting.hpp"

#include <random>

namespace altalg {

LinearMap::LinearMap(Matrix m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols()) throw UsageError("linear map matrix must be square");
}

LinearMap LinearMap::identity(const Algebra& a) { return LinearMap(Matrix::identity(a.field(), a.dim())); }
LinearMap LinearMap::zero(const Algebra& a) { return LinearMap(Matrix(a.field(), a.dim(), a.dim())); }
LinearMap LinearMap::left_multiplication(const Algebra& a, const Element& z) { return LinearMap(a.left_mul(z)); }

void LinearMap::check(const Algebra& a) const {
  if (dim() != a.dim()) {
    throw UsageError("map has dimension " + std::to_string(dim()) + ", algebra has dimension " + std::to_string(a.dim()));
  }
  if (!(m_.field() == a.field())) throw UsageError("map is over a different field");
}

MapCheck is_commuting(const Algebra& a, const LinearMap& phi) {
  phi.check(a);
  const std::size_t n = a.dim();
  std::vector<Element> images;
  for (std::size_t i = 0; i < n; ++i) images.push_back(phi(a.basis(i)));
  auto polar = [&](std::size_t i, std::size_t j) {
    return commutator(a, images[i], a.basis(j)) + commutator(a, images[j], a.basis(i));
  };
  for (std::size_t i = 0; i < n; ++i) {
    if (auto v = commutator(a, images[i], a.basis(i)); !v.is_zero()) return {false, std::pair{i, i}, v};
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (auto v = polar(i, j); !v.is_zero()) return {false, std::pair{i, j}, v};
    }
  }
  return {};
}

MapCheck is_anti_commuting(const Algebra& a, const LinearMap& phi) {
  phi.check(a);
  const std::size_t n = a.dim();
  std::vector<Element> images;
  for (std::size_t i = 0; i < n; ++i) images.push_back(phi(a.basis(i)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      auto v = commutator(a, images[i], a.basis(j)) + commutator(a, a.basis(i), images[j]);
      if (!v.is_zero()) return {false, std::pair{i, j}, v};
    }
  }
  return {};
}

std::optional<std::string> verify_decomposition(const Algebra& a, const Subspace& center, const LinearMap& phi,
                                                const Element& z, const LinearMap& xi) {
  if (!center.contains(z)) return "z is not central";
  for (std::size_t k = 0; k < a.dim(); ++k) {
    const Element b = a.basis(k);
    const Element xb = xi(b);
    if (!center.contains(xb)) return "xi(" + a.labels()[k] + ") is not central";
    if (!(phi(b) == a.multiply(z, b) + xb)) return "phi(" + a.labels()[k] + ") != z " + a.labels()[k] + " + xi(" + a.labels()[k] + ")";
  }
  return std::nullopt;
}

namespace {

Witness basis_pair_witness(const Algebra& a, const MapCheck& c) {
  const auto [i, j] = *c.witness;
  if (i == j) return {"[phi(x), x] != 0", {{"x", a.basis(i)}, {"value", *c.value}}};
  return {"[phi(x), y] + [phi(y), x] != 0", {{"x", a.basis(i)}, {"y", a.basis(j)}, {"value", *c.value}}};
}

Element lift_or_throw(const PeirceData& pd, const Element& c, int i, const std::string& name) {
  const Algebra& a = pd.algebra();
  for (const auto& x : pd.component(i, i).basis()) {
    if (auto v = commutator(a, c, x); !v.is_zero()) {
      throw PropertyError(name + " does not commute with R" + std::to_string(i) + std::to_string(i),
                          {"[" + name + ", x] != 0", {{name, c}, {"x", x}, {"value", v}}});
    }
  }
  auto z = lift_central(pd, c, i);
  if (!z) throw PropertyError("no central lift of " + name, {"no central z with z e" + std::to_string(i) + " = " + name, {{name, c}}});
  return *z;
}

}  // namespace

Decomposition decompose(const PeirceData& pd, const LinearMap& phi) {
  const Algebra& a = pd.algebra();
  phi.check(a);
  if (!pd.alternative()) {
    const auto alt = is_alternative(a);
    const auto& w = *alt.witness;
    throw PropertyError("algebra is not alternative",
                        {"law " + alt.law + " fails", {{"x", a.basis(w.i)}, {"y", a.basis(w.j)}, {"z", a.basis(w.k)}, {"value", *alt.value}}});
  }
  const auto& hyp = pd.hypothesis();
  for (std::size_t i = 0; i < 2; ++i) {
    if (!hyp.holds[i]) {
      throw PropertyError("hypothesis check failed for e" + std::to_string(i + 1),
                          {"(x r) e" + std::to_string(i + 1) + " = 0 for all r with x != 0", {{"x", *hyp.witness[i]}}});
    }
  }
  if (const auto c = is_commuting(a, phi); !c.holds) throw PropertyError("not commuting", basis_pair_witness(a, c));

  const Element& e1 = pd.e1();
  const Element& e2 = pd.e2();
  const Element phi_e1 = phi(e1);
  const Element phi_e2 = phi(e2);
  const Element z1 = lift_or_throw(pd, pd.project(2, 2, phi_e1), 2, "e2 phi(e1) e2");
  const Element z2 = lift_or_throw(pd, pd.project(1, 1, phi_e2), 1, "e1 phi(e2) e1");
  const Element z = pd.project(1, 1, phi_e1) + pd.project(2, 2, phi_e2) - (a.multiply(z1, e1) + a.multiply(z2, e2));
  LinearMap xi = phi - LinearMap::left_multiplication(a, z);

  Decomposition d{z, xi, false, z1, z2, std::nullopt};
  d.failure = verify_decomposition(a, pd.center(), phi, z, xi);
  d.verified = !d.failure;
  return d;
}

std::optional<Decomposition> decompose_oracle(const Algebra& a, const LinearMap& phi) {
  return decompose_oracle(a, center(a), phi);
}

std::optional<Decomposition> decompose_oracle(const Algebra& a, const Subspace& ctr, const LinearMap& phi) {
  phi.check(a);
  const std::size_t n = a.dim();
  const Field& f = a.field();
  // Center membership as K w = 0, K the stacked commutator system.
  std::vector<Matrix> kblocks;
  for (std::size_t k = 0; k < n; ++k) kblocks.push_back(a.right_mul(a.basis(k)) - a.left_mul(a.basis(k)));
  const Matrix K = Matrix::vstack(f, n, kblocks);

  std::optional<Vec> coeffs;
  if (ctr.dim() == 0) {
    // Only z = 0 is available; feasible iff phi itself is center-valued.
    coeffs = Vec{};
  } else {
    const Matrix C = ctr.basis_matrix();
    std::vector<Matrix> blocks;
    Vec rhs;
    for (std::size_t k = 0; k < n; ++k) {
      const Element b = a.basis(k);
      blocks.push_back(K * (a.right_mul(b) * C));
      const Vec kb = K * phi(b).coords();
      rhs.insert(rhs.end(), kb.begin(), kb.end());
    }
    coeffs = solve(Matrix::vstack(f, ctr.dim(), blocks), rhs);
    if (!coeffs) return std::nullopt;
  }
  const Element z = ctr.dim() == 0 ? a.zero() : Element(ctr.basis_matrix() * *coeffs);
  LinearMap xi = phi - LinearMap::left_multiplication(a, z);
  Decomposition d{z, xi, false, a.zero(), a.zero(), std::nullopt};
  d.failure = verify_decomposition(a, ctr, phi, z, xi);
  if (d.failure) return std::nullopt;
  d.verified = true;
  return d;
}

namespace {

Scalar draw(std::mt19937_64& rng, const Field& f) {
  const auto span = static_cast<std::uint64_t>(2 * kRandomBound + 1);
  return Scalar::from_int(f, static_cast<long long>(rng() % span) - kRandomBound);
}

}  // namespace

CommutingSample random_commuting_sample(const Algebra& a, const Subspace& ctr, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const Field& f = a.field();
  const std::size_t n = a.dim();
  Element z = a.zero();
  for (const auto& c : ctr.basis()) z = z + draw(rng, f) * c;
  Matrix g(f, ctr.dim(), n);
  for (std::size_t r = 0; r < ctr.dim(); ++r) {
    for (std::size_t c = 0; c < n; ++c) g(r, c) = draw(rng, f);
  }
  LinearMap xi = ctr.dim() == 0 ? LinearMap::zero(a) : LinearMap(ctr.basis_matrix() * g);
  LinearMap phi = LinearMap::left_multiplication(a, z) + xi;
  return {std::move(phi), std::move(z), std::move(xi)};
}

LinearMap random_commuting_map(const Algebra& a, std::uint64_t seed) { return random_commuting_map(a, center(a), seed); }

LinearMap random_commuting_map(const Algebra& a, const Subspace& ctr, std::uint64_t seed) {
  return random_commuting_sample(a, ctr, seed).phi;
}

LinearMap random_linear_map(const Algebra& a, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Matrix m(a.field(), a.dim(), a.dim());
  for (std::size_t r = 0; r < a.dim(); ++r) {
    for (std::size_t c = 0; c < a.dim(); ++c) m(r, c) = draw(rng, a.field());
  }
  return LinearMap(std::move(m));
}

ExhaustiveResult exhaustive_commuting_check(const Algebra& a, const LinearMap& phi, std::uint64_t budget) {
  phi.check(a);
  const Field& f = a.field();
  if (!f.is_prime()) throw UsageError("exhaustive commuting check needs a finite field");
  const std::size_t n = a.dim();
  const std::uint64_t p = f.modulus();
  const std::uint64_t total = field_size_power(p, n);
  if (total > budget) {
    throw BudgetExceeded("p^dim = " + std::to_string(total) + " exceeds the enumeration budget " + std::to_string(budget));
  }
  ExhaustiveResult out;
  std::vector<std::uint64_t> digits(n, 0);
  while (true) {
    Vec x;
    x.reserve(n);
    for (auto d : digits) x.push_back(Scalar::from_int(f, static_cast<long long>(d)));
    const Element xe(std::move(x));
    ++out.elements_checked;
    if (!commutator(a, phi(xe), xe).is_zero()) {
      out.commuting = false;
      out.witness = xe;
      return out;
    }
    std::size_t pos = n;
    while (pos > 0) {
      --pos;
      if (++digits[pos] < p) break;
      digits[pos] = 0;
      if (pos == 0) return out;
    }
    if (n == 0) return out;
  }
}

}  // namespace altalg
