#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "altalg/algebra.hpp"
#include "altalg/peirce.hpp"

namespace altalg {

/// Linear map on an algebra's coordinate space (acts on columns).
class LinearMap {
 public:
  explicit LinearMap(Matrix m);
  static LinearMap identity(const Algebra& a);
  static LinearMap zero(const Algebra& a);
  /// x -> z x
  static LinearMap left_multiplication(const Algebra& a, const Element& z);

  const Matrix& matrix() const { return m_; }
  std::size_t dim() const { return m_.rows(); }
  Element operator()(const Element& x) const { return Element(m_ * x.coords()); }
  LinearMap operator-(const LinearMap& o) const { return LinearMap(m_ - o.m_); }
  LinearMap operator+(const LinearMap& o) const { return LinearMap(m_ + o.m_); }
  bool operator==(const LinearMap& o) const = default;

  /// Throws UsageError unless the map matches the algebra's dimension and field.
  void check(const Algebra& a) const;

 private:
  Matrix m_;
};

struct MapCheck {
  bool holds = true;
  /// Basis indices (i, j) of the first failing instance.
  std::optional<std::pair<std::size_t, std::size_t>> witness;
  std::optional<Element> value;
};

/// [phi(b_i), b_j] + [phi(b_j), b_i] = 0 for all basis pairs; diagonal pairs
/// (the literal [phi(x), x] = 0 on basis vectors) are scanned first.
MapCheck is_commuting(const Algebra& a, const LinearMap& phi);

/// [phi(b_i), b_j] + [b_i, phi(b_j)] = 0 for all ordered basis pairs.
MapCheck is_anti_commuting(const Algebra& a, const LinearMap& phi);

/// phi(x) = z x + xi(x) with z central and xi center-valued.
struct Decomposition {
  Element z;
  LinearMap xi;
  bool verified = false;
  /// Central lifts of e2 phi(e1) e2 and e1 phi(e2) e1 (zero for the oracle route).
  Element z1;
  Element z2;
  /// Why verification failed, naming the offending basis vector.
  std::optional<std::string> failure;
};

/// Checks every Decomposition invariant on basis vectors; returns the first
/// failure, or nullopt when z is central, xi(b_k) is central and
/// phi(b_k) = z b_k + xi(b_k) for every k.
std::optional<std::string> verify_decomposition(const Algebra& a, const Subspace& center, const LinearMap& phi,
                                                const Element& z, const LinearMap& xi);

/// Constructive route: lifts z1 from P22(phi(e1)) and z2 from P11(phi(e2)),
/// sets z = P11(phi(e1)) + P22(phi(e2)) - (z1 e1 + z2 e2) and xi = phi - L_z,
/// then verifies. Throws PropertyError (with witness) when the algebra is not
/// alternative, the hypothesis check failed, phi is not commuting, or a
/// central lift does not exist.
Decomposition decompose(const PeirceData& pd, const LinearMap& phi);

/// Independent route: solves for center coefficients of z such that
/// phi(b_k) - z b_k lies in the center for every k. nullopt when infeasible.
std::optional<Decomposition> decompose_oracle(const Algebra& a, const LinearMap& phi);
std::optional<Decomposition> decompose_oracle(const Algebra& a, const Subspace& center, const LinearMap& phi);

/// Entries of generated center coefficients and xi matrices are drawn from
/// [-kRandomBound, kRandomBound].
inline constexpr int kRandomBound = 3;

struct CommutingSample {
  LinearMap phi;
  Element z;
  LinearMap xi;
};

/// phi(x) = z x + C G x where z is a random combination of the center basis
/// C and G is a random dim(C) x n matrix, so every linear map into the center
/// can occur. Seeded mt19937_64 output is reduced directly, so a seed gives
/// the same map on every platform.
CommutingSample random_commuting_sample(const Algebra& a, const Subspace& center, std::uint64_t seed);
LinearMap random_commuting_map(const Algebra& a, std::uint64_t seed);
LinearMap random_commuting_map(const Algebra& a, const Subspace& center, std::uint64_t seed);

/// Arbitrary matrix with entries in [-kRandomBound, kRandomBound].
LinearMap random_linear_map(const Algebra& a, std::uint64_t seed);

struct ExhaustiveResult {
  bool commuting = true;
  std::optional<Element> witness;
  std::uint64_t elements_checked = 0;
};

/// Literal check of [phi(x), x] = 0 over every element of a finite algebra.
/// Throws BudgetExceeded when p^dim > budget and UsageError over Q.
ExhaustiveResult exhaustive_commuting_check(const Algebra& a, const LinearMap& phi, std::uint64_t budget = kDefaultBudget);

}  // namespace altalg
