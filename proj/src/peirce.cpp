#include "altalg/peirce.hpp"

namespace altalg {

namespace {

Subspace kernel_subspace(const Algebra& a, const Matrix& system) {
  std::vector<Element> basis;
  for (auto& v : kernel_basis(system)) basis.emplace_back(std::move(v));
  return Subspace(a.field(), a.dim(), std::move(basis));
}

std::string label(int i, int j) { return "R" + std::to_string(i) + std::to_string(j); }

}  // namespace

bool verify_idempotent(const Algebra& a, const Element& e) {
  const Element& one = a.require_unit();
  a.check(e);
  return !e.is_zero() && !(e == one) && a.multiply(e, e) == e;
}

HypothesisResult hypothesis_check(const Algebra& a, const Element& e1) {
  const Element e2 = a.require_unit() - e1;
  HypothesisResult out;
  const std::array<const Element*, 2> es{&e1, &e2};
  for (std::size_t i = 0; i < 2; ++i) {
    const Matrix right_e = a.right_mul(*es[i]);
    std::vector<Matrix> blocks;
    for (std::size_t k = 0; k < a.dim(); ++k) blocks.push_back(right_e * a.right_mul(a.basis(k)));
    const auto ker = kernel_basis(Matrix::vstack(a.field(), a.dim(), blocks));
    out.holds[i] = ker.empty();
    if (!ker.empty()) out.witness[i] = Element(ker.front());
  }
  return out;
}

Subspace center(const Algebra& a) {
  std::vector<Matrix> blocks;
  for (std::size_t k = 0; k < a.dim(); ++k) {
    const Element b = a.basis(k);
    blocks.push_back(a.right_mul(b) - a.left_mul(b));
  }
  return kernel_subspace(a, Matrix::vstack(a.field(), a.dim(), blocks));
}

Subspace nucleus(const Algebra& a) {
  const std::size_t n = a.dim();
  Matrix system(a.field(), 3 * n * n * n, n);
  for (std::size_t t = 0; t < n; ++t) {
    const Element r = a.basis(t);
    std::size_t row = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const Element x = a.basis(i);
      for (std::size_t j = 0; j < n; ++j) {
        const Element y = a.basis(j);
        for (const Element& v : {associator(a, x, y, r), associator(a, x, r, y), associator(a, r, x, y)}) {
          for (std::size_t k = 0; k < n; ++k) system(row + k, t) = v[k];
          row += n;
        }
      }
    }
  }
  return kernel_subspace(a, system);
}

std::size_t PeirceData::slot(int i, int j) {
  if (i < 1 || i > 2 || j < 1 || j > 2) throw UsageError("Peirce indices must be 1 or 2");
  return static_cast<std::size_t>((i - 1) * 2 + (j - 1));
}

std::array<std::size_t, 4> PeirceData::dims() const {
  return {components_[0].dim(), components_[1].dim(), components_[2].dim(), components_[3].dim()};
}

PeirceData peirce_decompose(const Algebra& a, const Element& e1) {
  if (!verify_idempotent(a, e1)) {
    throw PropertyError("e1 is not a nontrivial idempotent", {"e1 e1 = e1 with e1 != 0, 1 fails", {{"e1", e1}, {"e1 e1", a.multiply(e1, e1)}}});
  }
  auto shared = std::make_shared<const Algebra>(a);
  PeirceData pd(shared, center(a));
  pd.e_ = {e1, a.require_unit() - e1};

  const std::size_t n = a.dim();
  for (int i = 1; i <= 2; ++i) {
    for (int j = 1; j <= 2; ++j) {
      const Element& ei = pd.e(i);
      const Element& ej = pd.e(j);
      for (std::size_t k = 0; k < n; ++k) {
        const Element x = a.basis(k);
        const Element inner = a.multiply(ei, a.multiply(x, ej));
        const Element outer = a.multiply(a.multiply(ei, x), ej);
        if (!(inner == outer)) {
          throw PropertyError("mixed identity e_i (x e_j) = (e_i x) e_j fails (input is not alternative)",
                              {"e" + std::to_string(i) + "(x e" + std::to_string(j) + ") != (e" + std::to_string(i) +
                                   " x)e" + std::to_string(j),
                               {{"x", x}, {"e_i(x e_j)", inner}, {"(e_i x)e_j", outer}}});
        }
      }
      pd.projectors_.push_back(a.left_mul(ei) * a.right_mul(ej));
    }
  }

  Matrix total(a.field(), n, n);
  for (const auto& p : pd.projectors_) total = total + p;
  if (!(total == Matrix::identity(a.field(), n))) {
    throw PropertyError("Peirce projectors do not sum to the identity", {"P11 + P12 + P21 + P22 != I", {}});
  }
  for (std::size_t s = 0; s < 4; ++s) {
    for (std::size_t t = 0; t < 4; ++t) {
      const Matrix prod = pd.projectors_[s] * pd.projectors_[t];
      const bool ok = s == t ? prod == pd.projectors_[s] : prod.is_zero();
      if (!ok) throw PropertyError("Peirce projectors are not an orthogonal family of idempotents", {"P P' check failed", {}});
    }
  }

  for (const auto& p : pd.projectors_) {
    std::vector<Element> cols;
    for (std::size_t c = 0; c < n; ++c) cols.emplace_back(p.column(c));
    pd.components_.push_back(Subspace::span_of(a.field(), n, cols));
  }
  pd.hypothesis_ = hypothesis_check(a, e1);
  pd.alternative_ = is_alternative(a).alternative;
  return pd;
}

std::vector<CheckRecord> check_peirce_relations(const PeirceData& pd) {
  const Algebra& a = pd.algebra();

  // Every product of basis vectors of R_ij and R_kl lies in R_target, or is
  // zero when no target is given.
  auto scan = [&](CheckRecord& rec, int i, int j, int k, int l, std::optional<std::pair<int, int>> target) {
    for (const auto& x : pd.component(i, j).basis()) {
      for (const auto& y : pd.component(k, l).basis()) {
        ++rec.instances;
        const Element xy = a.multiply(x, y);
        const bool ok = target ? pd.component(target->first, target->second).contains(xy) : xy.is_zero();
        if (!ok && rec.pass) {
          rec.pass = false;
          rec.witness = Witness{label(i, j) + " * " + label(k, l) +
                                    (target ? " not in " + label(target->first, target->second) : " != 0"),
                                {{"x", x}, {"y", y}, {"xy", xy}}};
        }
      }
    }
  };

  CheckRecord r1{"(i)", true, std::nullopt, "R_ij R_jl in R_il"};
  CheckRecord r2{"(ii)", true, std::nullopt, "R_ij R_ij in R_ji"};
  CheckRecord r3{"(iii)", true, std::nullopt, "R_ij R_kl = 0 for j != k, (i,j) != (k,l)"};
  CheckRecord r4{"(iv)", true, std::nullopt, "x^2 = 0 on R12 and R21"};
  for (int i = 1; i <= 2; ++i) {
    for (int j = 1; j <= 2; ++j) {
      for (int l = 1; l <= 2; ++l) scan(r1, i, j, j, l, std::pair{i, l});
      scan(r2, i, j, i, j, std::pair{j, i});
      for (int k = 1; k <= 2; ++k) {
        for (int l = 1; l <= 2; ++l) {
          if (j != k && (i != k || j != l)) scan(r3, i, j, k, l, std::nullopt);
        }
      }
    }
  }
  // (iv) through basis squares and the linearization xy + yx = 0.
  for (const auto& [i, j] : {std::pair{1, 2}, std::pair{2, 1}}) {
    const auto& basis = pd.component(i, j).basis();
    for (std::size_t s = 0; s < basis.size(); ++s) {
      for (std::size_t t = s; t < basis.size(); ++t) {
        ++r4.instances;
        const Element v = s == t ? a.multiply(basis[s], basis[s])
                                 : a.multiply(basis[s], basis[t]) + a.multiply(basis[t], basis[s]);
        if (!v.is_zero() && r4.pass) {
          r4.pass = false;
          r4.witness = Witness{s == t ? "x^2 != 0 in " + label(i, j) : "xy + yx != 0 in " + label(i, j),
                               {{"x", basis[s]}, {"y", basis[t]}, {"value", v}}};
        }
      }
    }
  }
  return {r1, r2, r3, r4};
}

Subspace center_via_peirce(const PeirceData& pd) {
  if (!pd.hypothesis().both()) throw UsageError("center_via_peirce requires a passing hypothesis check");
  const Algebra& a = pd.algebra();
  std::vector<Vec> diag;
  for (const auto& b : pd.component(1, 1).basis()) diag.push_back(b.coords());
  for (const auto& b : pd.component(2, 2).basis()) diag.push_back(b.coords());
  if (diag.empty()) return Subspace(a.field(), a.dim(), {});
  const Matrix param = Matrix::from_columns(a.field(), a.dim(), diag);
  std::vector<Matrix> blocks;
  for (const auto& [i, j] : {std::pair{1, 2}, std::pair{2, 1}}) {
    for (const auto& x : pd.component(i, j).basis()) blocks.push_back((a.right_mul(x) - a.left_mul(x)) * param);
  }
  if (blocks.empty()) blocks.emplace_back(a.field(), 0, diag.size());
  std::vector<Element> out;
  for (const auto& coeffs : kernel_basis(Matrix::vstack(a.field(), diag.size(), blocks))) out.emplace_back(param * coeffs);
  return Subspace(a.field(), a.dim(), std::move(out));
}

Subspace component_center(const PeirceData& pd, int i) {
  const Algebra& a = pd.algebra();
  const Subspace& comp = pd.component(i, i);
  if (comp.dim() == 0) return comp;
  const Matrix param = comp.basis_matrix();
  std::vector<Matrix> blocks;
  for (const auto& x : comp.basis()) blocks.push_back((a.right_mul(x) - a.left_mul(x)) * param);
  std::vector<Element> out;
  for (const auto& coeffs : kernel_basis(Matrix::vstack(a.field(), comp.dim(), blocks))) out.emplace_back(param * coeffs);
  return Subspace(a.field(), a.dim(), std::move(out));
}

std::optional<Element> lift_central(const PeirceData& pd, const Element& z_ii, int i) {
  const Algebra& a = pd.algebra();
  a.check(z_ii);
  const Subspace& comp = pd.component(i, i);
  if (!comp.contains(z_ii)) throw UsageError("lift_central: element is not in R" + std::to_string(i) + std::to_string(i));
  for (const auto& x : comp.basis()) {
    if (!commutator(a, z_ii, x).is_zero()) {
      throw UsageError("lift_central: element does not commute with R" + std::to_string(i) + std::to_string(i));
    }
  }
  const Subspace& z = pd.center();
  if (z.dim() == 0) {
    if (z_ii.is_zero()) return a.zero();
    return std::nullopt;
  }
  const Matrix c = z.basis_matrix();
  auto coeffs = solve(a.right_mul(pd.e(i)) * c, z_ii.coords());
  if (!coeffs) return std::nullopt;
  return Element(c * *coeffs);
}

}  // namespace altalg
