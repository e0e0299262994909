#pragma once

// Independent helpers for test oracles. The modular arithmetic here is plain
// integer code and deliberately shares nothing with the library.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "altalg/algebra.hpp"

namespace testing_support {

using IntVec = std::vector<long long>;
using IntMat = std::vector<IntVec>;

inline long long md(long long x, long long p) { return ((x % p) + p) % p; }

inline long long inv_mod(long long a, long long p) {
  long long r = 1, b = md(a, p), e = p - 2;
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

// Gaussian elimination mod p; rows may be any length.
inline std::size_t rank_mod(IntMat m, long long p) {
  if (m.empty()) return 0;
  const std::size_t cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t piv = r;
    while (piv < m.size() && md(m[piv][c], p) == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[r]);
    const long long iv = inv_mod(m[r][c], p);
    for (auto& x : m[r]) x = md(x * iv, p);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || md(m[i][c], p) == 0) continue;
      const long long f = md(m[i][c], p);
      for (std::size_t j = 0; j < cols; ++j) m[i][j] = md(m[i][j] - f * m[r][j], p);
    }
    ++r;
  }
  return r;
}

// Structure constants of an F_p algebra as a dense table t[i][j][k].
struct IntAlgebra {
  std::size_t n;
  long long p;
  std::vector<long long> t;

  explicit IntAlgebra(const altalg::Algebra& a) : n(a.dim()), p(static_cast<long long>(a.field().modulus())), t(n * n * n, 0) {
    for (const auto& e : a.entries()) t[(e.i * n + e.j) * n + e.k] = static_cast<long long>(e.coeff.residue()->value);
  }

  IntVec mul(const IntVec& x, const IntVec& y) const {
    IntVec out(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      if (x[i] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (y[j] == 0) continue;
        const long long c = x[i] * y[j] % p;
        for (std::size_t k = 0; k < n; ++k) out[k] = (out[k] + c * t[(i * n + j) * n + k]) % p;
      }
    }
    return out;
  }

  IntVec basis(std::size_t i) const {
    IntVec v(n, 0);
    v[i] = 1;
    return v;
  }

  // Every element of F_p^n, first coordinate fastest.
  std::vector<IntVec> all_elements() const {
    std::vector<IntVec> out;
    IntVec v(n, 0);
    while (true) {
      out.push_back(v);
      std::size_t pos = 0;
      while (pos < n && ++v[pos] == p) v[pos++] = 0;
      if (pos == n) break;
    }
    return out;
  }
};

inline IntVec sub(const IntVec& a, const IntVec& b, long long p) {
  IntVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = md(a[i] - b[i], p);
  return out;
}

inline bool is_zero(const IntVec& v) {
  for (auto x : v) {
    if (x != 0) return false;
  }
  return true;
}

inline altalg::Element to_element(const altalg::Field& f, const IntVec& v) {
  altalg::Vec out;
  for (auto x : v) out.push_back(altalg::Scalar::from_int(f, x));
  return altalg::Element(std::move(out));
}

inline IntVec to_ints(const altalg::Element& e) {
  IntVec out;
  for (const auto& s : e.coords()) out.push_back(static_cast<long long>(s.residue()->value));
  return out;
}

inline altalg::Element random_element(const altalg::Algebra& a, std::mt19937_64& rng, int bound = 5) {
  std::uniform_int_distribution<int> d(-bound, bound);
  altalg::Vec v;
  for (std::size_t i = 0; i < a.dim(); ++i) v.push_back(altalg::Scalar::from_int(a.field(), d(rng)));
  return altalg::Element(std::move(v));
}

inline std::string data_path(const std::string& name) { return std::string(ALTALG_TEST_DATA_DIR) + "/" + name; }

}  // namespace testing_support
