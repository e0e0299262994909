#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "altalg/field.hpp"
#include "altalg/matrix.hpp"

namespace altalg {

/// Coordinate vector of an algebra element in the algebra's fixed basis.
class Element {
 public:
  Element() = default;
  explicit Element(Vec coords) : c_(std::move(coords)) {}

  const Vec& coords() const { return c_; }
  std::size_t dim() const { return c_.size(); }
  const Scalar& operator[](std::size_t i) const { return c_[i]; }
  bool is_zero() const { return altalg::is_zero(c_); }

  Element operator+(const Element& o) const { return Element(add(c_, o.c_)); }
  Element operator-(const Element& o) const { return Element(sub(c_, o.c_)); }
  Element operator-() const;
  friend Element operator*(const Scalar& s, const Element& e) { return Element(scale(s, e.c_)); }

  bool operator==(const Element& o) const = default;

  /// Comma-separated scalars, the same syntax the CLI accepts for `-e`.
  std::string to_string() const;

 private:
  Vec c_;
};

/// One structure constant: (basis i)(basis j) has coefficient `coeff` on basis k.
struct StructureEntry {
  std::size_t i;
  std::size_t j;
  std::size_t k;
  Scalar coeff;
};

struct BasisTriple {
  std::size_t i;
  std::size_t j;
  std::size_t k;
  bool operator==(const BasisTriple&) const = default;
};

/// Finite-dimensional algebra presented by structure constants. Immutable.
/// The unit is verified (when declared) or searched for (when not) at
/// construction and cached.
class Algebra {
 public:
  Algebra(std::string name, Field field, std::vector<std::string> labels, std::vector<StructureEntry> entries,
          std::optional<Element> unit = std::nullopt, std::string comment = {});

  const std::string& name() const { return name_; }
  const std::string& comment() const { return comment_; }
  const Field& field() const { return field_; }
  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& labels() const { return labels_; }
  /// Canonical entries: duplicates summed, zeros dropped, sorted by (i, j, k).
  const std::vector<StructureEntry>& entries() const { return entries_; }
  const std::optional<Element>& unit() const { return unit_; }
  /// The cached unit; throws UsageError for non-unital algebras.
  const Element& require_unit() const;

  std::optional<std::size_t> label_index(const std::string& label) const;

  Element basis(std::size_t i) const;
  Element zero() const;
  /// Throws UsageError unless `e` has this algebra's dimension and field.
  void check(const Element& e) const;

  Element multiply(const Element& a, const Element& b) const;
  /// Product of basis vectors i and j as a coordinate vector.
  Element basis_product(std::size_t i, std::size_t j) const;

  /// Matrix of x -> a x (column j holds a * b_j).
  Matrix left_mul(const Element& a) const;
  /// Matrix of x -> x a (column j holds b_j * a).
  Matrix right_mul(const Element& a) const;

 private:
  std::string name_;
  std::string comment_;
  Field field_;
  std::size_t dim_;
  std::vector<std::string> labels_;
  std::vector<StructureEntry> entries_;
  // CSR over (i * dim + j) into entries_.
  std::vector<std::size_t> offsets_;
  std::optional<Element> unit_;
};

Element multiply(const Algebra& a, const Element& x, const Element& y);
/// (xy)z - x(yz)
Element associator(const Algebra& a, const Element& x, const Element& y, const Element& z);
/// xy - yx
Element commutator(const Algebra& a, const Element& x, const Element& y);

struct AlternativityResult {
  bool alternative = true;
  std::optional<BasisTriple> witness;
  /// Which linearized law failed, e.g. "(x,y,z)+(y,x,z)".
  std::string law;
  /// The nonzero value of that law on the witness triple.
  std::optional<Element> value;
};

/// Decides alternativity from the linearized basis conditions
/// (b_i,b_i,b_j) = (b_j,b_i,b_i) = 0, (b_i,b_j,b_k) + (b_j,b_i,b_k) = 0 and
/// (b_k,b_i,b_j) + (b_k,b_j,b_i) = 0, which suffice in characteristic != 2.
AlternativityResult is_alternative(const Algebra& a);

/// First basis triple (in i, j, k order) with nonzero associator.
std::optional<BasisTriple> associativity_witness(const Algebra& a);

/// Solves u b_j = b_j = b_j u for all j; returns the unit if it exists.
std::optional<Element> find_unit(const Algebra& a);

/// Block-diagonal product algebra A x B; unit (u_A, u_B) when both exist.
Algebra direct_sum(const Algebra& a, const Algebra& b);

/// Embeds an element of a summand into the direct sum.
Element embed_left(const Algebra& sum, const Element& x);
Element embed_right(const Algebra& sum, const Algebra& left, const Element& y);

/// Linear subspace of an algebra's coordinate space with an independent basis.
class Subspace {
 public:
  /// Throws UsageError if the listed vectors are dependent.
  Subspace(Field field, std::size_t ambient_dim, std::vector<Element> basis);
  /// Keeps an independent spanning subset of `vectors`.
  static Subspace span_of(Field field, std::size_t ambient_dim, const std::vector<Element>& vectors);

  const Field& field() const { return field_; }
  std::size_t ambient_dim() const { return n_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Element>& basis() const { return basis_; }
  /// n x dim matrix whose columns are the basis vectors.
  Matrix basis_matrix() const;

  bool contains(const Element& x) const;
  bool contains(const Subspace& s) const;
  bool same_as(const Subspace& s) const { return dim() == s.dim() && contains(s); }

 private:
  Field field_;
  std::size_t n_;
  std::vector<Element> basis_;
  // Row-reduced copy of the basis used for membership tests.
  std::vector<Vec> echelon_;
  std::vector<std::size_t> pivots_;
};

}  // namespace altalg
