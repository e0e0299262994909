#include "altalg/lemmas.hpp"

#include <functional>

namespace altalg {

std::string to_string(LemmaStatus s) {
  switch (s) {
    case LemmaStatus::pass:
      return "pass";
    case LemmaStatus::fail:
      return "fail";
    case LemmaStatus::not_applicable:
      return "n/a";
  }
  return "?";
}

namespace {

constexpr const char* kBasisNote =
    "checked on component basis vectors; additivity of phi and bilinearity of the product extend it to all elements";

std::string rij(int i, int j) { return "R" + std::to_string(i) + std::to_string(j); }

// Accumulates instances and keeps the first failure.
class Tally {
 public:
  explicit Tally(LemmaReport& r) : r_(r) {}

  void expect(bool ok, const std::function<Witness()>& witness) {
    ++r_.instances;
    if (!ok && r_.status == LemmaStatus::pass) {
      r_.status = LemmaStatus::fail;
      r_.witness = witness();
    }
  }
  void expect_zero(const Element& v, const std::string& what, std::vector<std::pair<std::string, Element>> elems) {
    expect(v.is_zero(), [&] {
      elems.emplace_back("value", v);
      return Witness{what + " != 0", elems};
    });
  }

 private:
  LemmaReport& r_;
};

// c must commute with R_ii and have a central lift z with z e_i = c.
void expect_lift(Tally& t, const PeirceData& pd, const Element& c, int i, const std::string& name) {
  const Algebra& a = pd.algebra();
  for (const auto& x : pd.component(i, i).basis()) {
    t.expect_zero(commutator(a, c, x), "[" + name + ", x] with x in " + rij(i, i), {{name, c}, {"x", x}});
  }
  bool central_in_component = true;
  for (const auto& x : pd.component(i, i).basis()) central_in_component = central_in_component && commutator(a, c, x).is_zero();
  if (!central_in_component || !pd.component(i, i).contains(c)) return;
  const bool ok = lift_central(pd, c, i).has_value();
  t.expect(ok, [&] { return Witness{"no central z with z e" + std::to_string(i) + " = " + name, {{name, c}}}; });
}

Matrix commutator_system(const Algebra& a) {
  std::vector<Matrix> blocks;
  for (std::size_t k = 0; k < a.dim(); ++k) blocks.push_back(a.right_mul(a.basis(k)) - a.left_mul(a.basis(k)));
  return Matrix::vstack(a.field(), a.dim(), blocks);
}

// Horizontal concatenation of two blocks with equal row counts.
Matrix hcat(const Matrix& l, const Matrix& r) {
  Matrix m(l.field(), l.rows(), l.cols() + r.cols());
  for (std::size_t i = 0; i < l.rows(); ++i) {
    for (std::size_t j = 0; j < l.cols(); ++j) m(i, j) = l(i, j);
    for (std::size_t j = 0; j < r.cols(); ++j) m(i, l.cols() + j) = r(i, j);
  }
  return m;
}

// Is there (g, g') with l g + r g' = rhs? Handles an empty unknown set.
bool feasible(const Matrix& l, const Matrix& r, const Vec& rhs) {
  if (l.cols() + r.cols() == 0) return is_zero(rhs);
  return solve(hcat(l, r), rhs).has_value();
}

void lemma1(LemmaReport& rep, const PeirceData& pd) {
  Tally t(rep);
  const Subspace via = center_via_peirce(pd);
  const Subspace& direct = pd.center();
  for (const auto& z : via.basis()) {
    t.expect(direct.contains(z), [&] { return Witness{"element of the Peirce characterization is not central", {{"z", z}}}; });
  }
  for (const auto& z : direct.basis()) {
    t.expect(via.contains(z), [&] { return Witness{"central element missing from the Peirce characterization", {{"z", z}}}; });
  }
  rep.notes = "Z(R) = {z11 + z22 : [z, R12] = [z, R21] = 0}; subspace equality by rank, dim " + std::to_string(direct.dim());
}

void lemma2(LemmaReport& rep, const PeirceData& pd) {
  Tally t(rep);
  for (int i = 1; i <= 2; ++i) {
    const Subspace zi = component_center(pd, i);
    for (const auto& z : zi.basis()) expect_lift(t, pd, z, i, "z" + std::to_string(i) + std::to_string(i));
  }
  rep.notes = "every basis vector of Z(R_ii) lifts to z in Z(R) with z e_i = z_ii; lifts are linear, so the basis suffices";
}

void lemma3(LemmaReport& rep, const PeirceData& pd, const LinearMap& phi) {
  Tally t(rep);
  const Algebra& a = pd.algebra();
  const Element one = a.require_unit();
  const std::vector<std::pair<std::string, Element>> probes{{"1", one}, {"e1", pd.e1()}, {"e2", pd.e2()}};
  for (const auto& [name, x] : probes) {
    const Element img = phi(x);
    t.expect_zero(pd.project(1, 2, img), "P12(phi(" + name + "))", {{"phi(" + name + ")", img}});
    t.expect_zero(pd.project(2, 1, img), "P21(phi(" + name + "))", {{"phi(" + name + ")", img}});
  }
  const Element phi1 = phi(one);
  for (int i = 1; i <= 2; ++i) {
    expect_lift(t, pd, pd.project(i, i, phi1), i, "e" + std::to_string(i) + " phi(1) e" + std::to_string(i));
  }
  rep.notes = "phi(1), phi(e_i) in R11 + R22 and e_i phi(1) e_i = z_i e_i";
}

void lemma4(LemmaReport& rep, const PeirceData& pd, const LinearMap& phi) {
  Tally t(rep);
  for (int i = 1; i <= 2; ++i) {
    const int j = 3 - i;
    for (const auto& x : pd.component(i, i).basis()) {
      const Element img = phi(x);
      t.expect_zero(pd.project(1, 2, img), "P12(phi(x)) for x in " + rij(i, i), {{"x", x}});
      t.expect_zero(pd.project(2, 1, img), "P21(phi(x)) for x in " + rij(i, i), {{"x", x}});
      expect_lift(t, pd, pd.project(j, j, img), j, "e" + std::to_string(j) + " phi(x) e" + std::to_string(j));
    }
  }
  rep.notes = std::string("phi(x_ii) in R11 + R22 and e_j phi(x_ii) e_j = z_i e_j; ") + kBasisNote;
}

void lemma5(LemmaReport& rep, const PeirceData& pd, const LinearMap& phi) {
  Tally t(rep);
  const Algebra& a = pd.algebra();
  for (const auto& [i, j] : {std::pair{1, 2}, std::pair{2, 1}}) {
    const Element phi_ei = phi(pd.e(i));
    const Element phi_ej = phi(pd.e(j));
    const Element di = pd.project(i, i, phi_ei) + pd.project(j, j, phi_ei);
    const Element dj = pd.project(j, j, phi_ej) + pd.project(i, i, phi_ej);
    auto diag = [&](const Element& x) {
      const Element img = phi(x);
      return pd.project(i, i, img) + pd.project(j, j, img);
    };
    const auto& basis = pd.component(i, j).basis();
    for (const auto& x : basis) {
      const Element img = phi(x);
      // (i)
      t.expect_zero(pd.project(j, i, img), "(i) e_j phi(x_ij) e_i", {{"x", x}});
      // (ii)
      const Element off = pd.project(i, j, img);
      t.expect_zero(off - commutator(a, di, x), "(ii) e_i phi(x) e_j - [e_i phi(e_i) e_i + e_j phi(e_i) e_j, x]", {{"x", x}});
      t.expect_zero(off + commutator(a, dj, x), "(ii) e_i phi(x) e_j + [e_j phi(e_j) e_j + e_i phi(e_j) e_i, x]", {{"x", x}});
      // (iv)
      expect_lift(t, pd, pd.project(i, i, img), i, "e" + std::to_string(i) + " phi(x) e" + std::to_string(i));
      expect_lift(t, pd, pd.project(j, j, img), j, "e" + std::to_string(j) + " phi(x) e" + std::to_string(j));
    }
    // (iii), polarized: [D(x), y] + [D(y), x] = 0.
    for (std::size_t s = 0; s < basis.size(); ++s) {
      for (std::size_t u = s; u < basis.size(); ++u) {
        const Element v = s == u ? commutator(a, diag(basis[s]), basis[s])
                                 : commutator(a, diag(basis[s]), basis[u]) + commutator(a, diag(basis[u]), basis[s]);
        t.expect_zero(v, "(iii) [e_i phi(x) e_i + e_j phi(x) e_j, x] (polarized) in " + rij(i, j), {{"x", basis[s]}, {"y", basis[u]}});
      }
    }
  }
  rep.notes = std::string("items (i)-(iv) for x in R12 and R21; (iii) polarized over basis pairs; ") + kBasisNote;
}

void lemma6(LemmaReport& rep, const PeirceData& pd, const LinearMap& phi) {
  Tally t(rep);
  const Element img = phi(pd.algebra().require_unit());
  t.expect(pd.center().contains(img), [&] { return Witness{"phi(1) is not central", {{"phi(1)", img}}}; });
  rep.notes = "phi(1) in Z(R)";
}

void lemma7(LemmaReport& rep, const PeirceData& pd, const LinearMap& phi) {
  Tally t(rep);
  const Algebra& a = pd.algebra();
  const Element d = pd.project(1, 1, phi(pd.e1())) + pd.project(2, 2, phi(pd.e2()));
  const Matrix K = commutator_system(a);
  const Vec rhs = K * d.coords();
  const Matrix C = pd.center().dim() == 0 ? Matrix(a.field(), a.dim(), 0) : pd.center().basis_matrix();
  const bool ok = feasible(K * (a.right_mul(pd.e1()) * C), K * (a.right_mul(pd.e2()) * C), rhs);
  t.expect(ok, [&] {
    return Witness{"no central z, z' make e1 phi(e1) e1 + e2 phi(e2) e2 - (z e1 + z' e2) central", {{"e1 phi(e1) e1 + e2 phi(e2) e2", d}}};
  });
  rep.notes = "z, z' found by linear feasibility over center coefficients (any feasible pair is accepted)";
}

void lemma8(LemmaReport& rep, const PeirceData& pd, const LinearMap& phi) {
  Tally t(rep);
  const Algebra& a = pd.algebra();
  for (const auto& [i, j] : {std::pair{1, 2}, std::pair{2, 1}}) {
    for (const auto& x : pd.component(i, j).basis()) {
      const Element img = phi(x);
      const Element dx = pd.project(1, 1, img) + pd.project(2, 2, img);
      for (const auto& y : pd.component(j, i).basis()) {
        t.expect_zero(commutator(a, dx, y), "[e1 phi(x) e1 + e2 phi(x) e2, y] with x in " + rij(i, j) + ", y in " + rij(j, i),
                      {{"x", x}, {"y", y}});
      }
    }
  }
  rep.notes = std::string("bilinear in (x_ij, x_ji); ") + kBasisNote;
}

void lemma9(LemmaReport& rep, const PeirceData& pd, const LinearMap& phi) {
  Tally t(rep);
  const Algebra& a = pd.algebra();
  for (const auto& [i, j] : {std::pair{1, 2}, std::pair{2, 1}}) {
    for (const auto& x : pd.component(i, j).basis()) {
      const Element img = phi(x);
      const Element dx = pd.project(i, i, img) + pd.project(j, j, img);
      for (std::size_t k = 0; k < a.dim(); ++k) {
        t.expect_zero(commutator(a, dx, a.basis(k)), "[e_i phi(x) e_i + e_j phi(x) e_j, r] with x in " + rij(i, j),
                      {{"x", x}, {"r", a.basis(k)}});
      }
    }
  }
  // e_i phi(x_ii) e_i = z_i e_i + (e_i phi(e_i) e_i - z'_i e_i) x_ii, solved per basis x_ii.
  const Matrix C = pd.center().dim() == 0 ? Matrix(a.field(), a.dim(), 0) : pd.center().basis_matrix();
  for (int i = 1; i <= 2; ++i) {
    const Element& ei = pd.e(i);
    const Element diag_ei = pd.project(i, i, phi(ei));
    const Matrix lift = a.right_mul(ei) * C;
    for (const auto& x : pd.component(i, i).basis()) {
      const Element rhs = pd.project(i, i, phi(x)) - a.multiply(diag_ei, x);
      Matrix neg = a.right_mul(x) * lift;
      for (std::size_t r = 0; r < neg.rows(); ++r) {
        for (std::size_t c = 0; c < neg.cols(); ++c) neg(r, c) = -neg(r, c);
      }
      const bool ok = feasible(lift, neg, rhs.coords());
      t.expect(ok, [&] {
        return Witness{"no central z_i, z'_i satisfy e_i phi(x) e_i = z_i e_i + (e_i phi(e_i) e_i - z'_i e_i) x in " + rij(i, i),
                       {{"x", x}, {"e_i phi(x) e_i", pd.project(i, i, phi(x))}}};
      });
    }
  }
  rep.notes = std::string("centrality of the diagonal part of phi(x_ij) and the e_i phi(x_ii) e_i formula; ") + kBasisNote;
}

}  // namespace

std::optional<std::string> lemma_gate(const PeirceData& pd, const LinearMap& phi) {
  phi.check(pd.algebra());
  if (!pd.alternative()) return "algebra is not alternative";
  if (!pd.hypothesis().both()) return "hypothesis_check failed";
  if (!is_commuting(pd.algebra(), phi).holds) return "is_commuting failed";
  return std::nullopt;
}

LemmaReport run_lemma_ungated(int id, const PeirceData& pd, const LinearMap& phi) {
  LemmaReport rep;
  rep.id = "L" + std::to_string(id);
  switch (id) {
    case 1:
      lemma1(rep, pd);
      break;
    case 2:
      lemma2(rep, pd);
      break;
    case 3:
      lemma3(rep, pd, phi);
      break;
    case 4:
      lemma4(rep, pd, phi);
      break;
    case 5:
      lemma5(rep, pd, phi);
      break;
    case 6:
      lemma6(rep, pd, phi);
      break;
    case 7:
      lemma7(rep, pd, phi);
      break;
    case 8:
      lemma8(rep, pd, phi);
      break;
    case 9:
      lemma9(rep, pd, phi);
      break;
    default:
      throw UsageError("lemma id must be in 1..9");
  }
  return rep;
}

LemmaReport run_lemma(int id, const PeirceData& pd, const LinearMap& phi) {
  if (id < 1 || id > kLemmaCount) throw UsageError("lemma id must be in 1..9");
  if (auto reason = lemma_gate(pd, phi)) return {"L" + std::to_string(id), LemmaStatus::not_applicable, std::nullopt, *reason, 0};
  return run_lemma_ungated(id, pd, phi);
}

std::vector<LemmaReport> run_all(const PeirceData& pd, const LinearMap& phi) {
  std::vector<LemmaReport> out;
  const auto reason = lemma_gate(pd, phi);
  for (int id = 1; id <= kLemmaCount; ++id) {
    if (reason) {
      out.push_back({"L" + std::to_string(id), LemmaStatus::not_applicable, std::nullopt, *reason, 0});
    } else {
      out.push_back(run_lemma_ungated(id, pd, phi));
    }
  }
  return out;
}

}  // namespace altalg
