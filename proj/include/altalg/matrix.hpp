#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "altalg/field.hpp"

namespace altalg {

using Vec = std::vector<Scalar>;

Vec zero_vec(const Field& f, std::size_t n);
Vec unit_vec(const Field& f, std::size_t n, std::size_t i);
bool is_zero(std::span<const Scalar> v);
Vec add(std::span<const Scalar> a, std::span<const Scalar> b);
Vec sub(std::span<const Scalar> a, std::span<const Scalar> b);
Vec scale(const Scalar& c, std::span<const Scalar> v);

/// Dense row-major matrix over a single exact field.
class Matrix {
 public:
  Matrix(const Field& f, std::size_t rows, std::size_t cols);
  static Matrix identity(const Field& f, std::size_t n);
  /// Matrix whose columns are the given vectors (all of length `rows`).
  static Matrix from_columns(const Field& f, std::size_t rows, std::span<const Vec> columns);
  /// Stacks the blocks on top of each other; all must share a column count.
  static Matrix vstack(const Field& f, std::size_t cols, std::span<const Matrix> blocks);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Scalar> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  Vec column(std::size_t c) const;
  void set_column(std::size_t c, std::span<const Scalar> v);

  Matrix operator*(const Matrix& o) const;
  Vec operator*(std::span<const Scalar> v) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix transpose() const;
  bool is_zero() const;

  bool operator==(const Matrix& o) const = default;

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> data_;
};

struct RrefResult {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

/// Gauss-Jordan elimination with leftmost-nonzero pivoting, so results are
/// reproducible for identical input.
RrefResult rref(Matrix m);
std::size_t rank(const Matrix& m);

/// Basis of {v : m v = 0}, one vector per free column, with that free
/// variable set to 1 and the other free variables 0.
std::vector<Vec> kernel_basis(const Matrix& m);

/// One exact solution of m v = rhs with every free variable zeroed, or
/// nullopt when the system is inconsistent.
std::optional<Vec> solve(const Matrix& m, std::span<const Scalar> rhs);

/// Linearly independent subset of `vectors` spanning the same space, chosen
/// greedily from the front.
std::vector<Vec> independent_subset(const Field& f, std::size_t n, std::span<const Vec> vectors);

}  // namespace altalg
