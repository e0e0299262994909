#include "altalg/constructions.hpp"

#include <array>

namespace altalg {

Generated matrix_algebra(const Field& f, std::size_t n) {
  if (n < 1) throw UsageError("matrix algebra needs n >= 1");
  auto idx = [n](std::size_t i, std::size_t j) { return i * n + j; };
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      labels.push_back(n < 10 ? "E" + std::to_string(i + 1) + std::to_string(j + 1)
                              : "E" + std::to_string(i + 1) + "_" + std::to_string(j + 1));
    }
  }
  // E_ij E_jl = E_il
  std::vector<StructureEntry> entries;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t l = 0; l < n; ++l) entries.push_back({idx(i, j), idx(j, l), idx(i, l), Scalar::one(f)});
    }
  }
  Vec unit = zero_vec(f, n * n);
  for (std::size_t i = 0; i < n; ++i) unit[idx(i, i)] = Scalar::one(f);
  Algebra a("M" + std::to_string(n) + "(" + f.name() + ")", f, std::move(labels), std::move(entries), Element(std::move(unit)),
            "matrix algebra, n=" + std::to_string(n) + ", basis E_ij row-major");
  if (n == 1) return {std::move(a), std::nullopt};
  Element e11 = a.basis(idx(0, 0));
  return {std::move(a), std::move(e11)};
}

namespace {

struct ZornElem {
  Scalar a;
  std::array<Scalar, 3> u;
  std::array<Scalar, 3> v;
  Scalar b;
};

Scalar dot(const std::array<Scalar, 3>& x, const std::array<Scalar, 3>& y) { return x[0] * y[0] + x[1] * y[1] + x[2] * y[2]; }

std::array<Scalar, 3> cross(const std::array<Scalar, 3>& x, const std::array<Scalar, 3>& y) {
  return {x[1] * y[2] - x[2] * y[1], x[2] * y[0] - x[0] * y[2], x[0] * y[1] - x[1] * y[0]};
}

ZornElem zorn_mul(const ZornElem& l, const ZornElem& r) {
  ZornElem out = l;
  const auto vxv = cross(l.v, r.v);
  const auto uxu = cross(l.u, r.u);
  out.a = l.a * r.a + dot(l.u, r.v);
  out.b = l.b * r.b + dot(l.v, r.u);
  for (int t = 0; t < 3; ++t) {
    out.u[t] = l.a * r.u[t] + r.b * l.u[t] - vxv[t];
    out.v[t] = r.a * l.v[t] + l.b * r.v[t] + uxu[t];
  }
  return out;
}

ZornElem zorn_from(const Vec& c) { return {c[0], {c[2], c[3], c[4]}, {c[5], c[6], c[7]}, c[1]}; }

Vec zorn_to(const ZornElem& z) { return {z.a, z.b, z.u[0], z.u[1], z.u[2], z.v[0], z.v[1], z.v[2]}; }

}  // namespace

Generated zorn(const Field& f) {
  std::vector<std::string> labels{"e11", "e22", "u1", "u2", "u3", "v1", "v2", "v3"};
  std::vector<StructureEntry> entries;
  for (std::size_t i = 0; i < 8; ++i) {
    for (std::size_t j = 0; j < 8; ++j) {
      const Vec p = zorn_to(zorn_mul(zorn_from(unit_vec(f, 8, i)), zorn_from(unit_vec(f, 8, j))));
      for (std::size_t k = 0; k < 8; ++k) {
        if (!p[k].is_zero()) entries.push_back({i, j, k, p[k]});
      }
    }
  }
  Vec unit = zero_vec(f, 8);
  unit[0] = Scalar::one(f);
  unit[1] = Scalar::one(f);
  Algebra a("Zorn(" + f.name() + ")", f, std::move(labels), std::move(entries), Element(std::move(unit)),
            "Zorn vector matrices [[a,u],[v,b]]: product [[aa'+u.v', au'+b'u-v x v'],[a'v+bv'+u x u', bb'+v.u']]");
  Element e11 = a.basis(0);
  return {std::move(a), std::move(e11)};
}

InvolutiveAlgebra ground_field(const Field& f) {
  Algebra a(f.name(), f, {"1"}, {{0, 0, 0, Scalar::one(f)}}, Element(unit_vec(f, 1, 0)), "ground field");
  return {std::move(a), Matrix::identity(f, 1)};
}

InvolutiveAlgebra cayley_dickson(const InvolutiveAlgebra& base, const Scalar& gamma) {
  const Algebra& A = base.algebra;
  const Field& f = A.field();
  if (!gamma.belongs_to(f)) throw UsageError("doubling parameter is over a different field");
  if (gamma.is_zero()) throw UsageError("doubling parameter gamma must be nonzero");
  const std::size_t m = A.dim();
  const std::size_t n = 2 * m;

  auto conj = [&](const Element& x) { return Element(base.conjugation * x.coords()); };
  auto split = [m](const Vec& v) {
    return std::pair{Element(Vec(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(m))),
                     Element(Vec(v.begin() + static_cast<std::ptrdiff_t>(m), v.end()))};
  };

  std::vector<StructureEntry> entries;
  for (std::size_t i = 0; i < n; ++i) {
    const auto [a, b] = split(unit_vec(f, n, i));
    for (std::size_t j = 0; j < n; ++j) {
      const auto [c, d] = split(unit_vec(f, n, j));
      const Element first = A.multiply(a, c) + gamma * A.multiply(d, conj(b));
      const Element second = A.multiply(conj(a), d) + A.multiply(c, b);
      for (std::size_t k = 0; k < m; ++k) {
        if (!first[k].is_zero()) entries.push_back({i, j, k, first[k]});
        if (!second[k].is_zero()) entries.push_back({i, j, k + m, second[k]});
      }
    }
  }

  std::vector<std::string> labels{"1"};
  for (std::size_t k = 1; k < n; ++k) labels.push_back("e" + std::to_string(k));

  std::optional<Element> unit;
  if (A.unit()) {
    Vec u = A.unit()->coords();
    u.resize(n, Scalar::zero(f));
    unit = Element(std::move(u));
  }

  Matrix conjugation(f, n, n);
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < m; ++c) {
      conjugation(r, c) = base.conjugation(r, c);
      if (r == c) conjugation(r + m, c + m) = -Scalar::one(f);
    }
  }

  std::string comment = A.comment() == "ground field" ? "Cayley-Dickson over " + f.name() + "; gammas " : A.comment() + ",";
  comment += gamma.to_string();
  Algebra doubled("CD" + std::to_string(n) + "(" + f.name() + ")", f, std::move(labels), std::move(entries), std::move(unit),
                  std::move(comment));
  return {std::move(doubled), std::move(conjugation)};
}

CayleyDicksonTower cayley_dickson_tower(const Field& f, const CayleyDicksonParams& params) {
  if (params.gammas.empty()) throw UsageError("Cayley-Dickson construction needs at least one step");
  InvolutiveAlgebra cur = ground_field(f);
  for (const auto& g : params.gammas) cur = cayley_dickson(cur, g);

  const Algebra& A = cur.algebra;
  const std::size_t n = A.dim();
  const Element one = A.require_unit();
  const Scalar half = Scalar::one(f) / Scalar::from_int(f, 2);
  std::optional<Element> idem;
  for (std::size_t k = 1; k < n && !idem; ++k) {
    const Element sq = A.basis_product(k, k);
    bool scalar_square = true;
    for (std::size_t t = 1; t < n; ++t) scalar_square = scalar_square && sq[t].is_zero();
    if (!scalar_square || sq[0].is_zero()) continue;
    // (alpha + beta e_k)^2 = alpha + beta e_k with beta != 0 forces alpha = 1/2
    // and beta^2 c = 1/4, so beta = 1/(2 s) with s^2 = c.
    const auto s = sq[0].sqrt();
    if (!s) continue;
    Element e = half * one + (half / *s) * A.basis(k);
    if (A.multiply(e, e) == e) idem = std::move(e);
  }
  // Re-wrap so the comment names the convention in every generated file.
  Algebra tagged(A.name(), f, A.labels(), A.entries(), A.unit(),
                 A.comment() + "; convention (a,b)(c,d) = (ac + g d conj(b), conj(a) d + c b), conj(a,b) = (conj(a), -b)");
  return {{std::move(tagged), std::move(cur.conjugation)}, std::move(idem)};
}

}  // namespace altalg
