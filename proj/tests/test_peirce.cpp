#include <doctest.h>

#include <deque>
#include <random>

#include "altalg/constructions.hpp"
#include "altalg/peirce.hpp"
#include "support.hpp"

using namespace altalg;
namespace ts = testing_support;

namespace {

// Basis of the two-sided ideal generated by a, by closing under left and
// right multiplication by basis vectors.
ts::IntMat ideal_basis(const ts::IntAlgebra& t, const ts::IntVec& a) {
  ts::IntMat basis;
  std::deque<ts::IntVec> queue{a};
  while (!queue.empty()) {
    ts::IntVec v = queue.front();
    queue.pop_front();
    ts::IntMat trial = basis;
    trial.push_back(v);
    if (ts::rank_mod(trial, t.p) == basis.size()) continue;
    basis.push_back(v);
    for (std::size_t k = 0; k < t.n; ++k) {
      queue.push_back(t.mul(t.basis(k), v));
      queue.push_back(t.mul(v, t.basis(k)));
    }
  }
  return basis;
}

// Prime iff no two nonzero principal ideals multiply to zero.
bool prime_by_ideals(const Algebra& a) {
  const ts::IntAlgebra t(a);
  std::vector<ts::IntMat> ideals;
  for (const auto& x : t.all_elements()) {
    if (!ts::is_zero(x)) ideals.push_back(ideal_basis(t, x));
  }
  for (const auto& i : ideals) {
    for (const auto& j : ideals) {
      bool zero = true;
      for (const auto& u : i) {
        for (const auto& v : j) zero = zero && ts::is_zero(t.mul(u, v));
      }
      if (zero) return false;
    }
  }
  return true;
}

Algebra upper_triangular(const Field& f) {
  // E11, E12, E22
  const Scalar one = Scalar::one(f);
  return Algebra("T2", f, {"E11", "E12", "E22"}, {{0, 0, 0, one}, {0, 1, 1, one}, {1, 2, 1, one}, {2, 2, 2, one}});
}

Algebra dual_numbers(const Field& f) {
  return Algebra("F[x]/x^2", f, {"1", "x"}, {{0, 0, 0, Scalar::one(f)}, {0, 1, 1, Scalar::one(f)}, {1, 0, 1, Scalar::one(f)}});
}

Element elem(const Field& f, std::initializer_list<int> xs) {
  Vec v;
  for (int x : xs) v.push_back(Scalar::from_int(f, x));
  return Element(v);
}

}  // namespace

TEST_CASE("idempotent verification") {
  const Field q = Field::rational();
  const auto m2 = matrix_algebra(q, 2);
  const Algebra& a = m2.algebra;
  CHECK(verify_idempotent(a, a.basis(0)));
  CHECK_FALSE(verify_idempotent(a, a.require_unit()));
  CHECK_FALSE(verify_idempotent(a, a.basis(1)));
  CHECK_FALSE(verify_idempotent(a, a.zero()));
  CHECK(verify_idempotent(a, elem(q, {1, 1, 0, 0})));  // E11 + E12
  CHECK_THROWS_AS(verify_idempotent(Algebra("zero", q, {"a"}, {}), elem(q, {1})), UsageError);
  CHECK_THROWS_AS(peirce_decompose(a, a.basis(1)), PropertyError);
}

TEST_CASE("Peirce components and projector invariants") {
  struct Case {
    Generated g;
    std::array<std::size_t, 4> dims;
  };
  const Field q = Field::rational(), f5 = Field::prime(5);
  std::vector<Case> cases;
  cases.push_back({matrix_algebra(q, 2), {1, 1, 1, 1}});
  cases.push_back({matrix_algebra(q, 3), {1, 2, 2, 4}});
  cases.push_back({zorn(q), {1, 3, 3, 1}});
  cases.push_back({zorn(f5), {1, 3, 3, 1}});
  cases.push_back({matrix_algebra(f5, 2), {1, 1, 1, 1}});
  std::mt19937_64 rng(6);
  for (const auto& c : cases) {
    const Algebra& a = c.g.algebra;
    CAPTURE(a.name());
    const PeirceData pd = peirce_decompose(a, *c.g.idempotent);
    CHECK(pd.dims() == c.dims);
    CHECK(pd.e1() + pd.e2() == a.require_unit());
    Matrix sum = pd.projector(1, 1) + pd.projector(1, 2) + pd.projector(2, 1) + pd.projector(2, 2);
    CHECK(sum == Matrix::identity(a.field(), a.dim()));
    const std::array<std::pair<int, int>, 4> idx{{{1, 1}, {1, 2}, {2, 1}, {2, 2}}};
    for (const auto& [i, j] : idx) {
      CHECK(pd.projector(i, j) * pd.projector(i, j) == pd.projector(i, j));
      for (const auto& [k, l] : idx) {
        if (i != k || j != l) CHECK((pd.projector(i, j) * pd.projector(k, l)).is_zero());
      }
      // Mixed bracketing on basis vectors.
      for (std::size_t b = 0; b < a.dim(); ++b) {
        const Element x = a.basis(b);
        CHECK(a.multiply(a.multiply(pd.e(i), x), pd.e(j)) == a.multiply(pd.e(i), a.multiply(x, pd.e(j))));
      }
    }
    for (int trial = 0; trial < 5; ++trial) {
      const Element x = ts::random_element(a, rng);
      CHECK(pd.project(1, 1, x) + pd.project(1, 2, x) + pd.project(2, 1, x) + pd.project(2, 2, x) == x);
      // x_ij = e_i x_ij = x_ij e_j
      for (const auto& [i, j] : idx) {
        const Element xij = pd.project(i, j, x);
        CHECK(a.multiply(pd.e(i), xij) == xij);
        CHECK(a.multiply(xij, pd.e(j)) == xij);
      }
    }
    for (const auto& rec : check_peirce_relations(pd)) {
      CAPTURE(rec.check);
      CHECK(rec.pass);
      CHECK(rec.instances > 0);
    }
  }
}

TEST_CASE("M2 components are the matrix units") {
  const Field q = Field::rational();
  const auto m2 = matrix_algebra(q, 2);
  const PeirceData pd = peirce_decompose(m2.algebra, m2.algebra.basis(0));
  CHECK(pd.component(1, 1).contains(m2.algebra.basis(0)));
  CHECK(pd.component(1, 2).contains(m2.algebra.basis(1)));
  CHECK(pd.component(2, 1).contains(m2.algebra.basis(2)));
  CHECK(pd.component(2, 2).contains(m2.algebra.basis(3)));
}

TEST_CASE("Zorn u1 u2 lands in R21") {
  const auto z = zorn(Field::prime(5));
  const Algebra& a = z.algebra;
  const PeirceData pd = peirce_decompose(a, a.basis(0));
  const Element prod = a.multiply(a.basis(*a.label_index("u1")), a.basis(*a.label_index("u2")));
  CHECK_FALSE(prod.is_zero());
  CHECK(pd.component(2, 1).contains(prod));
}

TEST_CASE("relations report failures on a non-alternative algebra") {
  // Sedenions split along a CD idempotent: the mixed identity or a relation
  // must break, and the failure is reported rather than assumed away.
  const Field q = Field::rational();
  const auto t = cayley_dickson_tower(q, {{Scalar::one(q), Scalar::one(q), Scalar::one(q), Scalar::one(q)}});
  REQUIRE(t.idempotent);
  bool detected = false;
  try {
    const PeirceData pd = peirce_decompose(t.result.algebra, *t.idempotent);
    CHECK_FALSE(pd.alternative());
    for (const auto& rec : check_peirce_relations(pd)) {
      if (!rec.pass) {
        detected = true;
        CHECK(rec.witness.has_value());
      }
    }
    detected = detected || !pd.alternative();
  } catch (const PropertyError& e) {
    detected = true;
    CHECK_FALSE(e.witness().elements.empty());
  }
  CHECK(detected);
}

TEST_CASE("centers and nuclei") {
  const Field q = Field::rational();
  const auto m2 = matrix_algebra(q, 2);
  const Subspace c = center(m2.algebra);
  CHECK(c.dim() == 1);
  CHECK(c.contains(m2.algebra.require_unit()));
  CHECK(nucleus(m2.algebra).dim() == 4);

  const auto z = zorn(q);
  CHECK(center(z.algebra).dim() == 1);
  CHECK(center(z.algebra).contains(z.algebra.require_unit()));
  CHECK(nucleus(z.algebra).dim() == 1);
  CHECK(nucleus(z.algebra).contains(z.algebra.require_unit()));

  const auto one = matrix_algebra(q, 1);
  CHECK(center(direct_sum(one.algebra, one.algebra)).dim() == 2);
  const Algebra qm2 = direct_sum(one.algebra, m2.algebra);
  CHECK(center(qm2).dim() == 2);

  // Center inside nucleus for alternative inputs.
  for (const Algebra* a : {&m2.algebra, &z.algebra, &qm2}) CHECK(nucleus(*a).contains(center(*a)));
}

TEST_CASE("center matches brute force over F5") {
  const Field f5 = Field::prime(5);
  for (const Algebra& a : {matrix_algebra(f5, 2).algebra, upper_triangular(f5), dual_numbers(f5)}) {
    const ts::IntAlgebra t(a);
    std::size_t central = 0;
    for (const auto& x : t.all_elements()) {
      bool ok = true;
      for (std::size_t k = 0; k < t.n; ++k) ok = ok && ts::sub(t.mul(x, t.basis(k)), t.mul(t.basis(k), x), t.p) == ts::IntVec(t.n, 0);
      central += ok ? 1 : 0;
    }
    std::size_t expected = 1;
    for (std::size_t i = 0; i < center(a).dim(); ++i) expected *= 5;
    CHECK(central == expected);
  }
}

TEST_CASE("hypothesis check") {
  const Field q = Field::rational(), f5 = Field::prime(5);
  for (const auto& g : {matrix_algebra(q, 2), matrix_algebra(q, 3), zorn(q), zorn(f5)}) {
    CHECK(hypothesis_check(g.algebra, *g.idempotent).both());
  }
  const auto one = matrix_algebra(q, 1);
  const Algebra qq = direct_sum(one.algebra, one.algebra);
  const auto h = hypothesis_check(qq, elem(q, {1, 0}));
  CHECK_FALSE(h.holds[0]);
  CHECK_FALSE(h.holds[1]);
  REQUIRE(h.witness[0]);
  CHECK(*h.witness[0] == elem(q, {0, 1}));
  REQUIRE(h.witness[1]);
  CHECK(*h.witness[1] == elem(q, {1, 0}));
  // Witness really annihilates: (x r) e1 = 0 for all r.
  for (std::size_t k = 0; k < 2; ++k) CHECK(qq.multiply(qq.multiply(*h.witness[0], qq.basis(k)), elem(q, {1, 0})).is_zero());

  const Algebra qm2 = direct_sum(one.algebra, matrix_algebra(q, 2).algebra);
  const auto h2 = hypothesis_check(qm2, embed_left(qm2, one.algebra.basis(0)));
  CHECK_FALSE(h2.holds[0]);
  CHECK_FALSE(h2.holds[1]);
}

TEST_CASE("center via Peirce equals the center") {
  const Field q = Field::rational(), f5 = Field::prime(5);
  for (const auto& g : {matrix_algebra(q, 2), matrix_algebra(q, 3), zorn(q), zorn(f5), matrix_algebra(f5, 2)}) {
    const PeirceData pd = peirce_decompose(g.algebra, *g.idempotent);
    CHECK(center_via_peirce(pd).same_as(center(g.algebra)));
    CHECK(center_via_peirce(pd).contains(g.algebra.require_unit()));
  }
  const auto one = matrix_algebra(q, 1);
  const Algebra qq = direct_sum(one.algebra, one.algebra);
  CHECK_THROWS_AS(center_via_peirce(peirce_decompose(qq, elem(q, {1, 0}))), UsageError);
}

TEST_CASE("central lifts") {
  const Field q = Field::rational();
  const auto m2 = matrix_algebra(q, 2);
  const PeirceData pd = peirce_decompose(m2.algebra, m2.algebra.basis(0));
  const Scalar c = Scalar::parse(q, "7/3");
  const auto z = lift_central(pd, c * m2.algebra.basis(0), 1);
  REQUIRE(z);
  CHECK(*z == c * m2.algebra.require_unit());
  CHECK(lift_central(pd, m2.algebra.zero(), 2) == std::optional<Element>(m2.algebra.zero()));
  CHECK_THROWS_AS(lift_central(pd, m2.algebra.basis(1), 1), UsageError);

  // Every central element lifts back from its diagonal pieces.
  for (const auto& g : {matrix_algebra(q, 3), zorn(q)}) {
    const PeirceData p = peirce_decompose(g.algebra, *g.idempotent);
    for (const auto& zc : p.center().basis()) {
      for (int i = 1; i <= 2; ++i) {
        const auto lift = lift_central(p, p.project(i, i, zc), i);
        REQUIRE(lift);
        CHECK(g.algebra.multiply(*lift, p.e(i)) == p.project(i, i, zc));
      }
    }
  }

  // Hypothesis fails on Q + Q, but (1,0) is central and lifts to itself.
  const auto one = matrix_algebra(q, 1);
  const Algebra qq = direct_sum(one.algebra, one.algebra);
  const PeirceData pq = peirce_decompose(qq, elem(q, {1, 0}));
  CHECK(lift_central(pq, elem(q, {1, 0}), 1) == std::optional<Element>(elem(q, {1, 0})));
}

TEST_CASE("primeness scan agrees with ideal products") {
  const Field f5 = Field::prime(5);
  const auto one = matrix_algebra(f5, 1);
  std::vector<std::pair<Algebra, bool>> cases;
  cases.emplace_back(one.algebra, true);
  cases.emplace_back(direct_sum(one.algebra, one.algebra), false);
  cases.emplace_back(matrix_algebra(f5, 2).algebra, true);
  cases.emplace_back(upper_triangular(f5), false);
  cases.emplace_back(dual_numbers(f5), false);
  cases.emplace_back(direct_sum(one.algebra, dual_numbers(f5)), false);
  cases.emplace_back(cayley_dickson_tower(f5, {{Scalar::from_int(f5, 2)}}).result.algebra, true);   // F25
  cases.emplace_back(cayley_dickson_tower(f5, {{Scalar::from_int(f5, 1)}}).result.algebra, false);  // F5 + F5
  cases.emplace_back(cayley_dickson_tower(f5, {{Scalar::from_int(f5, 2), Scalar::from_int(f5, 2)}}).result.algebra, true);
  for (const auto& [a, expected] : cases) {
    CAPTURE(a.name());
    const auto res = prime_check_exhaustive(a);
    CHECK(res.prime == prime_by_ideals(a));
    CHECK(res.prime == expected);
    if (!res.prime) {
      REQUIRE(res.witness);
      const auto& [x, y] = *res.witness;
      CHECK_FALSE(x.is_zero());
      CHECK_FALSE(y.is_zero());
      for (std::size_t k = 0; k < a.dim(); ++k) CHECK(a.multiply(a.multiply(x, a.basis(k)), y).is_zero());
    }
  }
}

TEST_CASE("primeness witnesses and budget") {
  const Field f5 = Field::prime(5);
  const auto one = matrix_algebra(f5, 1);
  const auto res = prime_check_exhaustive(direct_sum(one.algebra, one.algebra));
  REQUIRE(res.witness);
  CHECK(res.witness->first == elem(f5, {1, 0}));
  CHECK(res.witness->second == elem(f5, {0, 1}));
  const auto z = zorn(f5);
  CHECK_THROWS_AS(prime_check_exhaustive(z.algebra, 1000), BudgetExceeded);
  CHECK_THROWS_AS(prime_check_exhaustive(matrix_algebra(Field::rational(), 2).algebra), UsageError);
  // Projective representatives: (p^n - 1) / (p - 1) candidates for a prime algebra.
  CHECK(prime_check_exhaustive(matrix_algebra(f5, 2).algebra).candidates_scanned == 156);
  CHECK(field_size_power(5, 4) == 625);
}
