#include <doctest.h>

#include <random>

#include "altalg/matrix.hpp"
#include "support.hpp"

using namespace altalg;
namespace ts = testing_support;

namespace {

Matrix random_matrix(const Field& f, std::size_t r, std::size_t c, std::mt19937_64& rng, int bound) {
  std::uniform_int_distribution<int> d(-bound, bound);
  Matrix m(f, r, c);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) m(i, j) = Scalar::from_int(f, d(rng));
  }
  return m;
}

ts::IntMat to_int(const Matrix& m) {
  ts::IntMat out(m.rows(), ts::IntVec(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = static_cast<long long>(m(i, j).residue()->value);
  }
  return out;
}

}  // namespace

TEST_CASE("kernel of [[1, 1]] over F5 is spanned by (1, 4)") {
  const Field f = Field::prime(5);
  Matrix m(f, 1, 2);
  m(0, 0) = Scalar::one(f);
  m(0, 1) = Scalar::one(f);
  const auto k = kernel_basis(m);
  REQUIRE(k.size() == 1);
  CHECK(k[0][0].to_string() == "4");
  CHECK(k[0][1].to_string() == "1");
  // Exhaustive: the kernel is exactly {t (1, 4)}.
  int count = 0;
  for (int a = 0; a < 5; ++a) {
    for (int b = 0; b < 5; ++b) {
      if ((a + b) % 5 == 0) {
        ++count;
        CHECK((b * 1) % 5 == (a * 4) % 5);
      }
    }
  }
  CHECK(count == 5);
}

TEST_CASE("kernel size matches exhaustive enumeration over F5") {
  const Field f = Field::prime(5);
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t rows = 1 + trial % 4, cols = 1 + (trial / 4) % 4;
    Matrix m = random_matrix(f, rows, cols, rng, 2);
    const auto ker = kernel_basis(m);
    // Count solutions by brute force.
    std::size_t solutions = 0;
    std::vector<long long> x(cols, 0);
    const auto im = to_int(m);
    while (true) {
      bool zero = true;
      for (std::size_t i = 0; i < rows; ++i) {
        long long s = 0;
        for (std::size_t j = 0; j < cols; ++j) s += im[i][j] * x[j];
        zero = zero && s % 5 == 0;
      }
      solutions += zero ? 1 : 0;
      std::size_t pos = 0;
      while (pos < cols && ++x[pos] == 5) x[pos++] = 0;
      if (pos == cols) break;
    }
    std::size_t expected = 1;
    for (std::size_t i = 0; i < ker.size(); ++i) expected *= 5;
    CHECK(solutions == expected);
    for (const auto& v : ker) CHECK(is_zero(m * v));
    CHECK(rank(m) == ts::rank_mod(im, 5));
    CHECK(rank(m) + ker.size() == cols);
  }
}

TEST_CASE("rank nullity and solve over Q") {
  const Field q = Field::rational();
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t rows = 1 + trial % 5, cols = 1 + (trial / 5) % 5;
    Matrix m = random_matrix(q, rows, cols, rng, trial % 3 == 0 ? 1 : 4);
    const auto ker = kernel_basis(m);
    CHECK(rank(m) + ker.size() == cols);
    for (const auto& v : ker) CHECK(is_zero(m * v));
    // A consistent right-hand side is solved exactly.
    Vec x0 = zero_vec(q, cols);
    for (auto& s : x0) s = Scalar::from_int(q, static_cast<int>(rng() % 7) - 3);
    const Vec b = m * x0;
    const auto x = solve(m, b);
    REQUIRE(x.has_value());
    CHECK(m * *x == b);
  }
}

TEST_CASE("inconsistent systems have no solution") {
  const Field q = Field::rational();
  Matrix m(q, 2, 1);
  m(0, 0) = Scalar::one(q);
  m(1, 0) = Scalar::one(q);
  CHECK_FALSE(solve(m, Vec{Scalar::one(q), Scalar::zero(q)}).has_value());
  CHECK(solve(m, Vec{Scalar::one(q), Scalar::one(q)}).has_value());
}

TEST_CASE("solve zeroes free variables") {
  const Field q = Field::rational();
  Matrix m(q, 1, 3);
  m(0, 1) = Scalar::from_int(q, 2);
  m(0, 2) = Scalar::one(q);
  const auto x = solve(m, Vec{Scalar::from_int(q, 4)});
  REQUIRE(x);
  CHECK((*x)[0].is_zero());
  CHECK((*x)[1] == Scalar::from_int(q, 2));
  CHECK((*x)[2].is_zero());
}

TEST_CASE("rref is reduced") {
  const Field q = Field::rational();
  std::mt19937_64 rng(2);
  const Matrix m = random_matrix(q, 4, 6, rng, 3);
  const auto r = rref(m);
  for (std::size_t i = 0; i < r.pivots.size(); ++i) {
    CHECK(r.reduced(i, r.pivots[i]).is_one());
    for (std::size_t k = 0; k < m.rows(); ++k) {
      if (k != i) CHECK(r.reduced(k, r.pivots[i]).is_zero());
    }
    if (i > 0) CHECK(r.pivots[i] > r.pivots[i - 1]);
  }
}

TEST_CASE("matrix algebra identities") {
  const Field q = Field::rational();
  std::mt19937_64 rng(9);
  const Matrix a = random_matrix(q, 3, 4, rng, 3), b = random_matrix(q, 4, 2, rng, 3), c = random_matrix(q, 2, 3, rng, 3);
  CHECK((a * b) * c == a * (b * c));
  CHECK((a * b).transpose() == b.transpose() * a.transpose());
  CHECK(Matrix::identity(q, 3) * a == a);
  CHECK((a - a).is_zero());
  CHECK_THROWS_AS(a * a, UsageError);
}

TEST_CASE("independent subset keeps the first independent vectors") {
  const Field q = Field::rational();
  const Vec u{Scalar::one(q), Scalar::zero(q)};
  const Vec v{Scalar::from_int(q, 2), Scalar::zero(q)};
  const Vec w{Scalar::zero(q), Scalar::one(q)};
  const std::vector<Vec> vs{u, v, w};
  const auto sub = independent_subset(q, 2, vs);
  REQUIRE(sub.size() == 2);
  CHECK(sub[0] == u);
  CHECK(sub[1] == w);
}
