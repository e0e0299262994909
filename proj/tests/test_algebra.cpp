#include <doctest.h>

#include <random>

#include "altalg/algebra.hpp"
#include "altalg/constructions.hpp"
#include "support.hpp"

using namespace altalg;
namespace ts = testing_support;

namespace {

// Plain 2x2 integer matrix product on (a11, a12, a21, a22).
std::array<long long, 4> mat2(const std::array<long long, 4>& x, const std::array<long long, 4>& y) {
  return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3], x[2] * y[0] + x[3] * y[2], x[2] * y[1] + x[3] * y[3]};
}

Algebra random_fp_algebra(const Field& f, std::size_t n, std::mt19937_64& rng, int density) {
  std::vector<StructureEntry> entries;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("b" + std::to_string(i));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (static_cast<int>(rng() % 100) < density) entries.push_back({i, j, k, Scalar::from_int(f, static_cast<long long>(rng() % 5))});
      }
    }
  }
  return Algebra("random", f, labels, entries);
}

// (x, x, y) = 0 = (y, x, x) for every pair of elements.
bool alternative_brute_force(const Algebra& a) {
  const ts::IntAlgebra t(a);
  const auto all = t.all_elements();
  for (const auto& x : all) {
    const auto xx = t.mul(x, x);
    for (const auto& y : all) {
      if (!ts::is_zero(ts::sub(t.mul(xx, y), t.mul(x, t.mul(x, y)), t.p))) return false;
      if (!ts::is_zero(ts::sub(t.mul(t.mul(y, x), x), t.mul(y, xx), t.p))) return false;
    }
  }
  return true;
}

Algebra dual_numbers(const Field& f) {
  // 1, x with x^2 = 0
  return Algebra("F[x]/x^2", f, {"1", "x"},
                 {{0, 0, 0, Scalar::one(f)}, {0, 1, 1, Scalar::one(f)}, {1, 0, 1, Scalar::one(f)}});
}

}  // namespace

TEST_CASE("matrix algebra products match plain matrix multiplication") {
  const Field q = Field::rational();
  const auto m2 = matrix_algebra(q, 2);
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<long long> d(-9, 9);
  for (int trial = 0; trial < 200; ++trial) {
    std::array<long long, 4> x{}, y{};
    for (auto& v : x) v = d(rng);
    for (auto& v : y) v = d(rng);
    Vec xv, yv;
    for (auto v : x) xv.push_back(Scalar::from_int(q, v));
    for (auto v : y) yv.push_back(Scalar::from_int(q, v));
    const Element prod = m2.algebra.multiply(Element(xv), Element(yv));
    const auto expect = mat2(x, y);
    for (std::size_t k = 0; k < 4; ++k) CHECK(prod[k] == Scalar::from_int(q, expect[k]));
  }
}

TEST_CASE("alternativity agrees with brute force over F5") {
  const Field f = Field::prime(5);
  std::mt19937_64 rng(42);
  int alternative = 0, total = 0;
  auto compare = [&](const Algebra& a) {
    const auto res = is_alternative(a);
    CHECK(res.alternative == alternative_brute_force(a));
    if (!res.alternative) {
      REQUIRE(res.witness);
      REQUIRE(res.value);
      CHECK_FALSE(res.value->is_zero());
    }
    alternative += res.alternative ? 1 : 0;
    ++total;
  };
  for (int i = 0; i < 150; ++i) compare(random_fp_algebra(f, 2, rng, i % 3 == 0 ? 8 : 25));
  for (int i = 0; i < 10; ++i) compare(random_fp_algebra(f, 3, rng, 6));
  compare(matrix_algebra(f, 2).algebra);
  compare(dual_numbers(f));
  compare(direct_sum(matrix_algebra(f, 1).algebra, matrix_algebra(f, 1).algebra));
  compare(cayley_dickson_tower(f, {{Scalar::from_int(f, -1), Scalar::from_int(f, -1)}}).result.algebra);
  compare(Algebra("zero", f, {"a", "b"}, {}));
  // The sample must contain both outcomes to mean anything.
  CHECK(alternative > 3);
  CHECK(total - alternative > 3);
}

TEST_CASE("alternativity witness names a failing law") {
  const Field q = Field::rational();
  // b0 b0 = b1, b1 b0 = b0: (b0, b0, b0) = b1 b0 - b0 b1 = b0 != 0.
  const Algebra a("bad", q, {"b0", "b1"}, {{0, 0, 1, Scalar::one(q)}, {1, 0, 0, Scalar::one(q)}});
  const auto res = is_alternative(a);
  REQUIRE_FALSE(res.alternative);
  const auto w = *res.witness;
  const Element x = a.basis(w.i), y = a.basis(w.j), z = a.basis(w.k);
  Element recomputed;
  if (res.law == "(x,x,y)") recomputed = associator(a, x, x, y);
  if (res.law == "(y,x,x)") recomputed = associator(a, y, x, x);
  if (res.law == "(x,y,z)+(y,x,z)") recomputed = associator(a, x, y, z) + associator(a, y, x, z);
  if (res.law == "(z,x,y)+(z,y,x)") recomputed = associator(a, z, x, y) + associator(a, z, y, x);
  CHECK(recomputed == *res.value);
  CHECK_FALSE(recomputed.is_zero());
}

TEST_CASE("unit detection") {
  const Field q = Field::rational();
  const auto m3 = matrix_algebra(q, 3);
  const auto u = find_unit(m3.algebra);
  REQUIRE(u);
  for (std::size_t i = 0; i < 9; ++i) CHECK((*u)[i] == Scalar::from_int(q, i % 4 == 0 ? 1 : 0));
  CHECK_FALSE(find_unit(Algebra("zero", q, {"a"}, {})).has_value());
  CHECK_FALSE(Algebra("zero", q, {"a"}, {}).unit().has_value());
  CHECK_THROWS_AS(Algebra("zero", q, {"a"}, {}).require_unit(), UsageError);
  // A declared unit that is wrong is rejected.
  CHECK_THROWS_AS(Algebra("m", q, {"a"}, {{0, 0, 0, Scalar::one(q)}}, Element(Vec{Scalar::from_int(q, 2)})), UsageError);
}

TEST_CASE("structure entries are canonicalized") {
  const Field q = Field::rational();
  const Algebra a("dup", q, {"a"}, {{0, 0, 0, Scalar::one(q)}, {0, 0, 0, Scalar::one(q)}, {0, 0, 0, -Scalar::from_int(q, 2)}});
  CHECK(a.entries().empty());
  CHECK_THROWS_AS(Algebra("bad", q, {"a"}, {{0, 0, 1, Scalar::one(q)}}), UsageError);
  CHECK_THROWS_AS(Algebra("mixed", q, {"a"}, {{0, 0, 0, Scalar::one(Field::prime(5))}}), UsageError);
}

TEST_CASE("commutator and associator are bilinear") {
  const auto z = zorn(Field::rational());
  const Algebra& a = z.algebra;
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    const Element x = ts::random_element(a, rng), y = ts::random_element(a, rng), w = ts::random_element(a, rng);
    const Element v = ts::random_element(a, rng);
    CHECK(commutator(a, x + w, y) == commutator(a, x, y) + commutator(a, w, y));
    CHECK(commutator(a, x, y) == -commutator(a, y, x));
    CHECK(associator(a, x + w, y, v) == associator(a, x, y, v) + associator(a, w, y, v));
    // Alternative: the associator is alternating.
    CHECK(associator(a, x, y, v) == -associator(a, y, x, v));
    CHECK(associator(a, x, y, v) == -associator(a, x, v, y));
    CHECK(a.left_mul(x) * y.coords() == a.multiply(x, y).coords());
    CHECK(a.right_mul(y) * x.coords() == a.multiply(x, y).coords());
  }
}

TEST_CASE("direct sums") {
  const Field q = Field::rational();
  const auto m2 = matrix_algebra(q, 2);
  const auto one = matrix_algebra(q, 1);
  const Algebra s = direct_sum(one.algebra, m2.algebra);
  CHECK(s.dim() == 5);
  REQUIRE(s.unit());
  CHECK(s.unit()->to_string() == "1,1,0,0,1");
  const Element l = embed_left(s, one.algebra.basis(0));
  const Element r = embed_right(s, one.algebra, m2.algebra.basis(1));
  CHECK(s.multiply(l, r).is_zero());
  CHECK(s.multiply(r, l).is_zero());
  CHECK(s.label_index("E12_R") == std::optional<std::size_t>(2));
  CHECK(is_alternative(s).alternative);
  CHECK_THROWS_AS(direct_sum(one.algebra, matrix_algebra(Field::prime(5), 2).algebra), UsageError);
}

TEST_CASE("subspaces") {
  const Field q = Field::rational();
  const auto e = [&](std::initializer_list<int> xs) {
    Vec v;
    for (int x : xs) v.push_back(Scalar::from_int(q, x));
    return Element(v);
  };
  const Subspace s(q, 3, {e({1, 1, 0}), e({0, 1, 1})});
  CHECK(s.dim() == 2);
  CHECK(s.contains(e({1, 2, 1})));
  CHECK(s.contains(e({1, 0, -1})));
  CHECK_FALSE(s.contains(e({1, 0, 0})));
  CHECK_THROWS_AS(Subspace(q, 3, {e({1, 1, 0}), e({2, 2, 0})}), UsageError);
  const Subspace t = Subspace::span_of(q, 3, {e({1, 2, 1}), e({2, 4, 2}), e({1, 0, -1})});
  CHECK(t.dim() == 2);
  CHECK(t.same_as(s));
  CHECK(s.same_as(t));
  CHECK_FALSE(s.same_as(Subspace(q, 3, {e({1, 1, 0})})));
}
