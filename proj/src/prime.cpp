#include <algorithm>
#include <limits>

#include "altalg/peirce.hpp"

namespace altalg {

std::uint64_t field_size_power(std::uint64_t p, std::size_t dim) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < dim; ++i) {
    if (r > std::numeric_limits<std::uint64_t>::max() / p) return std::numeric_limits<std::uint64_t>::max();
    r *= p;
  }
  return r;
}

namespace {

// Dense residue arithmetic for the inner loop.
class ResidueScan {
 public:
  explicit ResidueScan(const Algebra& a) : n_(a.dim()), p_(a.field().modulus()), c_(n_ * n_ * n_, 0) {
    for (const auto& e : a.entries()) c_[(e.i * n_ + e.j) * n_ + e.k] = e.coeff.residue()->value;
  }

  // True iff some nonzero b has (a b_k) b = 0 for every k.
  bool has_annihilator(const std::vector<std::uint64_t>& a) {
    std::vector<std::uint64_t> w(n_);
    echelon_.clear();
    pivots_.clear();
    for (std::size_t k = 0; k < n_; ++k) {
      // w = a * b_k
      for (std::size_t m = 0; m < n_; ++m) {
        std::uint64_t s = 0;
        for (std::size_t i = 0; i < n_; ++i) s = (s + mul(a[i], c_[(i * n_ + k) * n_ + m])) % p_;
        w[m] = s;
      }
      // Rows of b -> w b, one per output coordinate m.
      for (std::size_t m = 0; m < n_; ++m) {
        std::vector<std::uint64_t> row(n_);
        for (std::size_t j = 0; j < n_; ++j) {
          std::uint64_t s = 0;
          for (std::size_t l = 0; l < n_; ++l) s = (s + mul(w[l], c_[(l * n_ + j) * n_ + m])) % p_;
          row[j] = s;
        }
        if (insert(std::move(row)) && echelon_.size() == n_) return false;
      }
    }
    return echelon_.size() < n_;
  }

 private:
  std::uint64_t mul(std::uint64_t x, std::uint64_t y) const {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(x) * y % p_);
  }

  std::uint64_t inv(std::uint64_t x) const {
    std::uint64_t r = 1, b = x, e = p_ - 2;
    while (e > 0) {
      if (e & 1U) r = mul(r, b);
      b = mul(b, b);
      e >>= 1U;
    }
    return r;
  }

  bool insert(std::vector<std::uint64_t> row) {
    for (std::size_t r = 0; r < echelon_.size(); ++r) {
      const std::uint64_t f = row[pivots_[r]];
      if (f == 0) continue;
      for (std::size_t j = 0; j < n_; ++j) row[j] = (row[j] + mul(p_ - f, echelon_[r][j])) % p_;
    }
    std::size_t piv = 0;
    while (piv < n_ && row[piv] == 0) ++piv;
    if (piv == n_) return false;
    const std::uint64_t s = inv(row[piv]);
    for (auto& x : row) x = mul(x, s);
    echelon_.push_back(std::move(row));
    pivots_.push_back(piv);
    return true;
  }

  std::size_t n_;
  std::uint64_t p_;
  std::vector<std::uint64_t> c_;
  std::vector<std::vector<std::uint64_t>> echelon_;
  std::vector<std::size_t> pivots_;
};

}  // namespace

PrimeResult prime_check_exhaustive(const Algebra& a, std::uint64_t budget) {
  const Field& f = a.field();
  if (!f.is_prime()) throw UsageError("exhaustive primeness check needs a finite field");
  const std::size_t n = a.dim();
  const std::uint64_t p = f.modulus();
  const std::uint64_t size = field_size_power(p, n);
  if (size > budget) {
    throw BudgetExceeded("p^dim = " + (size == std::numeric_limits<std::uint64_t>::max() ? std::string("overflow") : std::to_string(size)) +
                         " exceeds the enumeration budget " + std::to_string(budget));
  }

  PrimeResult out;
  ResidueScan scan(a);
  std::vector<std::uint64_t> cand(n, 0);
  for (std::size_t lead = 0; lead < n; ++lead) {
    std::fill(cand.begin(), cand.end(), 0);
    cand[lead] = 1;
    while (true) {
      ++out.candidates_scanned;
      if (scan.has_annihilator(cand)) {
        Vec av;
        for (auto x : cand) av.push_back(Scalar::from_int(f, static_cast<long long>(x)));
        const Element ae(av);
        std::vector<Matrix> blocks;
        for (std::size_t k = 0; k < n; ++k) blocks.push_back(a.left_mul(a.multiply(ae, a.basis(k))));
        const auto ker = kernel_basis(Matrix::vstack(f, n, blocks));
        out.prime = false;
        out.witness = std::pair{ae, Element(ker.front())};
        return out;
      }
      // Odometer over the coordinates after the leading one, last fastest.
      bool advanced = false;
      for (std::size_t pos = n; pos-- > lead + 1;) {
        if (++cand[pos] < p) {
          advanced = true;
          break;
        }
        cand[pos] = 0;
      }
      if (!advanced) break;
    }
  }
  return out;
}

}  // namespace altalg
