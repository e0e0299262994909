#include "altalg/algebra.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace altalg {

Element Element::operator-() const {
  Vec r;
  r.reserve(c_.size());
  for (const auto& x : c_) r.push_back(-x);
  return Element(std::move(r));
}

std::string Element::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i > 0) s += ',';
    s += c_[i].to_string();
  }
  return s;
}

Algebra::Algebra(std::string name, Field field, std::vector<std::string> labels, std::vector<StructureEntry> entries,
                 std::optional<Element> unit, std::string comment)
    : name_(std::move(name)), comment_(std::move(comment)), field_(field), dim_(labels.size()), labels_(std::move(labels)) {
  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, Scalar> acc;
  for (auto& e : entries) {
    if (e.i >= dim_ || e.j >= dim_ || e.k >= dim_) throw UsageError("structure constant index out of range");
    if (!e.coeff.belongs_to(field_)) throw UsageError("structure constant over the wrong field");
    auto [it, inserted] = acc.try_emplace({e.i, e.j, e.k}, e.coeff);
    if (!inserted) it->second += e.coeff;
  }
  offsets_.assign(dim_ * dim_ + 1, 0);
  for (auto& [key, c] : acc) {
    if (c.is_zero()) continue;
    auto [i, j, k] = key;
    entries_.push_back({i, j, k, c});
    ++offsets_[i * dim_ + j + 1];
  }
  for (std::size_t t = 1; t < offsets_.size(); ++t) offsets_[t] += offsets_[t - 1];

  if (unit) {
    check(*unit);
    for (std::size_t j = 0; j < dim_; ++j) {
      const Element b = basis(j);
      if (!(multiply(*unit, b) == b) || !(multiply(b, *unit) == b)) {
        throw UsageError("declared unit fails the unit law on basis vector " + labels_[j]);
      }
    }
    unit_ = std::move(unit);
  } else {
    unit_ = find_unit(*this);
  }
}

const Element& Algebra::require_unit() const {
  if (!unit_) throw UsageError("algebra '" + name_ + "' is not unital");
  return *unit_;
}

std::optional<std::size_t> Algebra::label_index(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

Element Algebra::basis(std::size_t i) const { return Element(unit_vec(field_, dim_, i)); }
Element Algebra::zero() const { return Element(zero_vec(field_, dim_)); }

void Algebra::check(const Element& e) const {
  if (e.dim() != dim_) {
    throw UsageError("element has " + std::to_string(e.dim()) + " coordinates, algebra '" + name_ + "' has dimension " +
                     std::to_string(dim_));
  }
  if (dim_ > 0 && !e[0].belongs_to(field_)) throw UsageError("element is over a different field");
}

Element Algebra::multiply(const Element& a, const Element& b) const {
  check(a);
  check(b);
  Vec r = zero_vec(field_, dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (b[j].is_zero()) continue;
      const std::size_t cell = i * dim_ + j;
      if (offsets_[cell] == offsets_[cell + 1]) continue;
      const Scalar s = a[i] * b[j];
      for (std::size_t t = offsets_[cell]; t < offsets_[cell + 1]; ++t) r[entries_[t].k] += s * entries_[t].coeff;
    }
  }
  return Element(std::move(r));
}

Element Algebra::basis_product(std::size_t i, std::size_t j) const {
  Vec r = zero_vec(field_, dim_);
  const std::size_t cell = i * dim_ + j;
  for (std::size_t t = offsets_[cell]; t < offsets_[cell + 1]; ++t) r[entries_[t].k] = entries_[t].coeff;
  return Element(std::move(r));
}

Matrix Algebra::left_mul(const Element& a) const {
  Matrix m(field_, dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j) m.set_column(j, multiply(a, basis(j)).coords());
  return m;
}

Matrix Algebra::right_mul(const Element& a) const {
  Matrix m(field_, dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j) m.set_column(j, multiply(basis(j), a).coords());
  return m;
}

Element multiply(const Algebra& a, const Element& x, const Element& y) { return a.multiply(x, y); }

Element associator(const Algebra& a, const Element& x, const Element& y, const Element& z) {
  return a.multiply(a.multiply(x, y), z) - a.multiply(x, a.multiply(y, z));
}

Element commutator(const Algebra& a, const Element& x, const Element& y) {
  return a.multiply(x, y) - a.multiply(y, x);
}

namespace {

// Dense cache of basis products for the O(n^3) scans.
class BasisTable {
 public:
  explicit BasisTable(const Algebra& a) : a_(a), n_(a.dim()) {
    prod_.reserve(n_ * n_);
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) prod_.push_back(a.basis_product(i, j));
    }
  }
  const Element& prod(std::size_t i, std::size_t j) const { return prod_[i * n_ + j]; }
  // (b_i b_j) b_k - b_i (b_j b_k)
  Element assoc(std::size_t i, std::size_t j, std::size_t k) const {
    return right_times_basis(prod(i, j), k) - left_basis_times(i, prod(j, k));
  }

 private:
  Element right_times_basis(const Element& v, std::size_t k) const {
    Vec r = zero_vec(a_.field(), n_);
    for (std::size_t t = 0; t < n_; ++t) {
      if (v[t].is_zero()) continue;
      const auto& p = prod(t, k);
      for (std::size_t s = 0; s < n_; ++s) {
        if (!p[s].is_zero()) r[s] += v[t] * p[s];
      }
    }
    return Element(std::move(r));
  }
  Element left_basis_times(std::size_t i, const Element& v) const {
    Vec r = zero_vec(a_.field(), n_);
    for (std::size_t t = 0; t < n_; ++t) {
      if (v[t].is_zero()) continue;
      const auto& p = prod(i, t);
      for (std::size_t s = 0; s < n_; ++s) {
        if (!p[s].is_zero()) r[s] += v[t] * p[s];
      }
    }
    return Element(std::move(r));
  }

  const Algebra& a_;
  std::size_t n_;
  std::vector<Element> prod_;
};

}  // namespace

AlternativityResult is_alternative(const Algebra& a) {
  const BasisTable t(a);
  const std::size_t n = a.dim();
  auto fail = [](BasisTriple w, std::string law, Element v) {
    return AlternativityResult{false, w, std::move(law), std::move(v)};
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (auto v = t.assoc(i, i, j); !v.is_zero()) return fail({i, i, j}, "(x,x,y)", v);
      if (auto v = t.assoc(j, i, i); !v.is_zero()) return fail({j, i, i}, "(y,x,x)", v);
      for (std::size_t k = 0; k < n; ++k) {
        if (auto v = t.assoc(i, j, k) + t.assoc(j, i, k); !v.is_zero()) return fail({i, j, k}, "(x,y,z)+(y,x,z)", v);
        if (auto v = t.assoc(k, i, j) + t.assoc(k, j, i); !v.is_zero()) return fail({k, i, j}, "(z,x,y)+(z,y,x)", v);
      }
    }
  }
  return {};
}

std::optional<BasisTriple> associativity_witness(const Algebra& a) {
  const BasisTable t(a);
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (!t.assoc(i, j, k).is_zero()) return BasisTriple{i, j, k};
      }
    }
  }
  return std::nullopt;
}

std::optional<Element> find_unit(const Algebra& a) {
  const std::size_t n = a.dim();
  if (n == 0) return std::nullopt;
  // Unknown u; u b_j = R_{b_j} u and b_j u = L_{b_j} u must equal b_j.
  std::vector<Matrix> blocks;
  Vec rhs;
  for (std::size_t j = 0; j < n; ++j) {
    const Element b = a.basis(j);
    blocks.push_back(a.right_mul(b));
    blocks.push_back(a.left_mul(b));
    rhs.insert(rhs.end(), b.coords().begin(), b.coords().end());
    rhs.insert(rhs.end(), b.coords().begin(), b.coords().end());
  }
  const Matrix system = Matrix::vstack(a.field(), n, blocks);
  auto u = solve(system, rhs);
  if (!u) return std::nullopt;
  // A two-sided unit is unique whenever it exists.
  return Element(std::move(*u));
}

Algebra direct_sum(const Algebra& a, const Algebra& b) {
  if (!(a.field() == b.field())) throw UsageError("direct sum of algebras over different fields");
  const std::size_t m = a.dim();
  std::vector<std::string> labels;
  for (const auto& l : a.labels()) labels.push_back(l + "_L");
  for (const auto& l : b.labels()) labels.push_back(l + "_R");
  std::vector<StructureEntry> entries = a.entries();
  for (const auto& e : b.entries()) entries.push_back({e.i + m, e.j + m, e.k + m, e.coeff});
  std::optional<Element> unit;
  if (a.unit() && b.unit()) {
    Vec u = a.unit()->coords();
    u.insert(u.end(), b.unit()->coords().begin(), b.unit()->coords().end());
    unit = Element(std::move(u));
  }
  return Algebra(a.name() + "+" + b.name(), a.field(), std::move(labels), std::move(entries), std::move(unit),
                 "direct sum of " + a.name() + " and " + b.name());
}

Element embed_left(const Algebra& sum, const Element& x) {
  Vec v = x.coords();
  v.resize(sum.dim(), Scalar::zero(sum.field()));
  return Element(std::move(v));
}

Element embed_right(const Algebra& sum, const Algebra& left, const Element& y) {
  Vec v = zero_vec(sum.field(), left.dim());
  v.insert(v.end(), y.coords().begin(), y.coords().end());
  if (v.size() != sum.dim()) throw UsageError("embed_right: dimension mismatch");
  return Element(std::move(v));
}

Subspace::Subspace(Field field, std::size_t ambient_dim, std::vector<Element> basis)
    : field_(field), n_(ambient_dim), basis_(std::move(basis)) {
  for (const auto& b : basis_) {
    if (b.dim() != n_) throw UsageError("subspace basis vector has the wrong dimension");
  }
  if (basis_.empty()) return;
  Matrix rows(field_, basis_.size(), n_);
  for (std::size_t r = 0; r < basis_.size(); ++r) {
    for (std::size_t c = 0; c < n_; ++c) rows(r, c) = basis_[r][c];
  }
  auto [red, pivots] = rref(std::move(rows));
  if (pivots.size() != basis_.size()) throw UsageError("subspace basis is linearly dependent");
  pivots_ = std::move(pivots);
  for (std::size_t r = 0; r < pivots_.size(); ++r) echelon_.emplace_back(red.row(r).begin(), red.row(r).end());
}

Subspace Subspace::span_of(Field field, std::size_t ambient_dim, const std::vector<Element>& vectors) {
  std::vector<Vec> vs;
  vs.reserve(vectors.size());
  for (const auto& v : vectors) vs.push_back(v.coords());
  std::vector<Element> basis;
  for (auto& v : independent_subset(field, ambient_dim, vs)) basis.emplace_back(std::move(v));
  return Subspace(field, ambient_dim, std::move(basis));
}

Matrix Subspace::basis_matrix() const {
  Matrix m(field_, n_, basis_.size());
  for (std::size_t c = 0; c < basis_.size(); ++c) m.set_column(c, basis_[c].coords());
  return m;
}

bool Subspace::contains(const Element& x) const {
  if (x.dim() != n_) throw UsageError("membership test: dimension mismatch");
  Vec v = x.coords();
  for (std::size_t r = 0; r < pivots_.size(); ++r) {
    const Scalar f = v[pivots_[r]];
    if (f.is_zero()) continue;
    for (std::size_t c = 0; c < n_; ++c) {
      if (!echelon_[r][c].is_zero()) v[c] -= f * echelon_[r][c];
    }
  }
  return altalg::is_zero(v);
}

bool Subspace::contains(const Subspace& s) const {
  return std::all_of(s.basis().begin(), s.basis().end(), [this](const Element& b) { return contains(b); });
}

}  // namespace altalg
