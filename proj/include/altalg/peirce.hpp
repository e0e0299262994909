#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "altalg/algebra.hpp"
#include "altalg/report.hpp"

namespace altalg {

/// True iff e e = e, e != 0 and e != 1. Throws UsageError on non-unital input.
bool verify_idempotent(const Algebra& a, const Element& e);

/// Outcome of testing "(x r) e_i = 0 for all r implies x = 0" for i = 1, 2.
struct HypothesisResult {
  std::array<bool, 2> holds{false, false};
  /// A nonzero x with (x b_k) e_i = 0 for every basis b_k, when one exists.
  std::array<std::optional<Element>, 2> witness;
  bool both() const { return holds[0] && holds[1]; }
};

/// Computes {x : (x b_k) e_i = 0 for all k} as a kernel for each i, where
/// e_2 = 1 - e_1. Requires a unital algebra.
HypothesisResult hypothesis_check(const Algebra& a, const Element& e1);

/// Commutative center: kernel of z -> ([z, b_k])_k.
Subspace center(const Algebra& a);

/// Nucleus: kernel of the stacked associator conditions
/// (b_i, b_j, r) = (b_i, r, b_j) = (r, b_i, b_j) = 0.
Subspace nucleus(const Algebra& a);

/// Peirce decomposition relative to e1 and e2 = 1 - e1, with cached
/// projectors, components, center and the theorem hypothesis. Immutable.
class PeirceData {
 public:
  const Algebra& algebra() const { return *algebra_; }
  const Element& e1() const { return e_[0]; }
  const Element& e2() const { return e_[1]; }
  /// e_i for i in {1, 2}.
  const Element& e(int i) const { return e_.at(static_cast<std::size_t>(i - 1)); }

  /// P_ij(x) = e_i (x e_j), i, j in {1, 2}.
  const Matrix& projector(int i, int j) const { return projectors_.at(slot(i, j)); }
  const Subspace& component(int i, int j) const { return components_.at(slot(i, j)); }
  Element project(int i, int j, const Element& x) const { return Element(projector(i, j) * x.coords()); }
  /// Dimensions of R11, R12, R21, R22.
  std::array<std::size_t, 4> dims() const;

  const Subspace& center() const { return center_; }
  const HypothesisResult& hypothesis() const { return hypothesis_; }
  bool alternative() const { return alternative_; }

 private:
  friend PeirceData peirce_decompose(const Algebra& a, const Element& e1);
  PeirceData(std::shared_ptr<const Algebra> a, Subspace center) : algebra_(std::move(a)), center_(std::move(center)) {}
  static std::size_t slot(int i, int j);

  std::shared_ptr<const Algebra> algebra_;
  std::array<Element, 2> e_;
  std::vector<Matrix> projectors_;
  std::vector<Subspace> components_;
  Subspace center_;
  HypothesisResult hypothesis_;
  bool alternative_ = false;
};

/// Builds the decomposition. The mixed identity e_i (x e_j) = (e_i x) e_j is
/// checked on every basis x, and the projectors are checked to form a
/// complete orthogonal family; failures throw PropertyError with a witness.
/// A non-idempotent e1 also throws PropertyError.
PeirceData peirce_decompose(const Algebra& a, const Element& e1);

/// Relations (i)-(iv) on component basis pairs:
///   (i)   R_ij R_jl in R_il
///   (ii)  R_ij R_ij in R_ji
///   (iii) R_ij R_kl = 0 for j != k, (i,j) != (k,l)
///   (iv)  x^2 = 0 on off-diagonal components, via basis squares and xy + yx = 0.
std::vector<CheckRecord> check_peirce_relations(const PeirceData& pd);

/// {z in R11 + R22 : [z, R12] = [z, R21] = 0}. Throws UsageError unless the
/// stored hypothesis check passed for both idempotents.
Subspace center_via_peirce(const PeirceData& pd);

/// {z in R_ii : [z, R_ii] = 0}.
Subspace component_center(const PeirceData& pd, int i);

/// Finds central z with z e_i = z_ii, taking the solve() particular solution
/// in center-basis coordinates. Throws UsageError unless z_ii lies in R_ii and
/// commutes with R_ii. Returns nullopt when no central lift exists.
std::optional<Element> lift_central(const PeirceData& pd, const Element& z_ii, int i);

struct PrimeResult {
  bool prime = true;
  /// Nonzero (a, b) with (a x) b = 0 for all x.
  std::optional<std::pair<Element, Element>> witness;
  std::uint64_t candidates_scanned = 0;
};

inline constexpr std::uint64_t kDefaultBudget = 1'000'000;

/// Decides "(a x) b = 0 for all x implies a = 0 or b = 0" over F_p by
/// scanning projective representatives of a (leading coordinate 1, ordered
/// by leading position then lexicographically) and solving for b as a
/// kernel. The first witness in scan order is reported. Throws
/// BudgetExceeded when p^dim > budget and UsageError over Q.
PrimeResult prime_check_exhaustive(const Algebra& a, std::uint64_t budget = kDefaultBudget);

/// p^dim, saturating at UINT64_MAX.
std::uint64_t field_size_power(std::uint64_t p, std::size_t dim);

}  // namespace altalg
