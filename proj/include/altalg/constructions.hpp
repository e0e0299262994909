#pragma once

#include <optional>
#include <vector>

#include "altalg/algebra.hpp"

namespace altalg {

/// A generated algebra together with the nontrivial idempotent the
/// construction provides, when it provides one.
struct Generated {
  Algebra algebra;
  std::optional<Element> idempotent;
};

/// M_n(F) on the matrix-unit basis E_ij (row-major), with E_11 as idempotent
/// for n >= 2. M_1(F) is the ground field and carries no idempotent.
Generated matrix_algebra(const Field& f, std::size_t n);

/// Zorn vector-matrix algebra (split octonions) on the basis
/// e11, e22, u1, u2, u3, v1, v2, v3. An element is [[a, u], [v, b]] and
///
///   [[a,u],[v,b]] [[a',u'],[v',b']]
///     = [[aa' + u.v',  a u' + b' u - v x v'],
///        [a' v + b v' + u x u',  bb' + v.u']].
///
/// e11 is returned as the idempotent; u_i spans the (1,2) Peirce component.
Generated zorn(const Field& f);

/// An algebra with a designated conjugation (an involutive anti-automorphism
/// fixing the unit), as required by the doubling.
struct InvolutiveAlgebra {
  Algebra algebra;
  Matrix conjugation;
};

/// The ground field as a 1-dimensional algebra with trivial conjugation.
InvolutiveAlgebra ground_field(const Field& f);

/// One Cayley-Dickson doubling with parameter gamma. Elements are pairs
/// (a, b) stored as [a; b], with
///
///   (a, b)(c, d) = (ac + gamma * d conj(b),  conj(a) d + c b),
///   conj(a, b) = (conj(a), -b).
///
/// Throws UsageError when gamma is zero.
InvolutiveAlgebra cayley_dickson(const InvolutiveAlgebra& base, const Scalar& gamma);

struct CayleyDicksonParams {
  std::vector<Scalar> gammas;  // one per doubling; size() is the number of steps
};

struct CayleyDicksonTower {
  InvolutiveAlgebra result;
  /// (1 + e_k / s) / 2 for the first basis vector with e_k^2 = s^2 * 1,
  /// s a nonzero field element; absent in the division case.
  std::optional<Element> idempotent;
};

/// Iterated doubling from the ground field. Requires at least one step and
/// nonzero gammas.
CayleyDicksonTower cayley_dickson_tower(const Field& f, const CayleyDicksonParams& params);

}  // namespace altalg
