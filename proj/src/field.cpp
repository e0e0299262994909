#include "altalg/field.hpp"

#include <ostream>

namespace altalg {

namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  b %= p;
  while (e > 0) {
    if (e & 1U) r = mulmod(r, b, p);
    b = mulmod(b, b, p);
    e >>= 1U;
  }
  return r;
}

std::uint64_t reduce(const mpz_class& z, std::uint64_t p) {
  mpz_class m = z % mpz_class(std::to_string(p));
  if (m < 0) m += mpz_class(std::to_string(p));
  return std::stoull(m.get_str());
}

// Tonelli-Shanks; p odd prime, a a nonzero quadratic residue.
std::uint64_t sqrt_mod(std::uint64_t a, std::uint64_t p) {
  if (p % 4 == 3) return powmod(a, (p + 1) / 4, p);
  std::uint64_t q = p - 1;
  unsigned s = 0;
  while ((q & 1U) == 0) {
    q >>= 1U;
    ++s;
  }
  std::uint64_t z = 2;
  while (powmod(z, (p - 1) / 2, p) != p - 1) ++z;
  std::uint64_t c = powmod(z, q, p);
  std::uint64_t x = powmod(a, (q + 1) / 2, p);
  std::uint64_t t = powmod(a, q, p);
  unsigned m = s;
  while (t != 1) {
    unsigned i = 0;
    std::uint64_t t2 = t;
    while (t2 != 1) {
      t2 = mulmod(t2, t2, p);
      ++i;
    }
    std::uint64_t b = c;
    for (unsigned j = 0; j + i + 1 < m; ++j) b = mulmod(b, b, p);
    x = mulmod(x, b, p);
    c = mulmod(b, b, p);
    t = mulmod(t, c, p);
    m = i;
  }
  return x;
}

const Scalar::Residue& as_residue(const Scalar& s, std::uint64_t p) {
  const auto* r = s.residue();
  if (r == nullptr || r->p != p) throw UsageError("scalar field mismatch");
  return *r;
}

const mpq_class& as_rational(const Scalar& s) {
  const auto* q = s.rational_value();
  if (q == nullptr) throw UsageError("scalar field mismatch");
  return *q;
}

}  // namespace

bool is_prime_number(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % d == 0) return n == d;
  }
  // Deterministic Miller-Rabin for 64-bit inputs.
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Field Field::prime(std::uint64_t p) {
  if (p == 2 || p == 3) throw UsageError("characteristic 2 and 3 are not supported (p = " + std::to_string(p) + ")");
  if (!is_prime_number(p)) throw UsageError("field modulus " + std::to_string(p) + " is not prime");
  return Field(Kind::prime, p);
}

std::string Field::name() const { return is_prime() ? "F" + std::to_string(p_) : "Q"; }

Scalar::Scalar(mpq_class q) : v_(std::move(q)) { std::get<mpq_class>(v_).canonicalize(); }

Scalar Scalar::zero(const Field& f) { return from_int(f, 0); }
Scalar Scalar::one(const Field& f) { return from_int(f, 1); }

Scalar Scalar::from_int(const Field& f, long long n) {
  if (!f.is_prime()) return Scalar(mpq_class(mpz_class(std::to_string(n))));
  const std::uint64_t p = f.modulus();
  long long m = n % static_cast<long long>(p);
  if (m < 0) m += static_cast<long long>(p);
  return Scalar(Residue{static_cast<std::uint64_t>(m), p});
}

Scalar Scalar::parse(const Field& f, std::string_view text) {
  std::string s(text);
  // Accept a unicode minus as well as ASCII.
  if (s.rfind("\xE2\x88\x92", 0) == 0) s = "-" + s.substr(3);
  auto valid_int = [](const std::string& t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i) {
      if (t[i] < '0' || t[i] > '9') return false;
    }
    return true;
  };
  const auto slash = s.find('/');
  std::string num = slash == std::string::npos ? s : s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!num.empty() && num[0] == '+') num.erase(0, 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-') throw UsageError("malformed scalar '" + std::string(text) + "'");
  mpz_class n(num), d(den);
  if (d == 0) throw UsageError("zero denominator in scalar '" + std::string(text) + "'");
  if (!f.is_prime()) return Scalar(mpq_class(n, d));
  const std::uint64_t p = f.modulus();
  Scalar rn(Residue{reduce(n, p), p});
  Scalar rd(Residue{reduce(d, p), p});
  if (rd.is_zero()) throw UsageError("denominator of '" + std::string(text) + "' vanishes mod " + std::to_string(p));
  return rn / rd;
}

Field Scalar::field() const {
  if (const auto* r = residue()) return Field::prime(r->p);
  return Field::rational();
}

bool Scalar::belongs_to(const Field& f) const {
  if (const auto* r = residue()) return f.is_prime() && f.modulus() == r->p;
  return !f.is_prime();
}

bool Scalar::is_zero() const {
  if (const auto* r = residue()) return r->value == 0;
  return sgn(std::get<mpq_class>(v_)) == 0;
}

bool Scalar::is_one() const {
  if (const auto* r = residue()) return r->value == 1;
  return std::get<mpq_class>(v_) == 1;
}

Scalar Scalar::operator+(const Scalar& o) const {
  if (const auto* r = residue()) {
    const auto& b = as_residue(o, r->p);
    std::uint64_t v = r->value + b.value;
    if (v >= r->p) v -= r->p;
    return Scalar(Residue{v, r->p});
  }
  return Scalar(mpq_class(std::get<mpq_class>(v_) + as_rational(o)));
}

Scalar Scalar::operator-(const Scalar& o) const {
  if (const auto* r = residue()) {
    const auto& b = as_residue(o, r->p);
    std::uint64_t v = r->value >= b.value ? r->value - b.value : r->value + r->p - b.value;
    return Scalar(Residue{v, r->p});
  }
  return Scalar(mpq_class(std::get<mpq_class>(v_) - as_rational(o)));
}

Scalar Scalar::operator*(const Scalar& o) const {
  if (const auto* r = residue()) {
    const auto& b = as_residue(o, r->p);
    return Scalar(Residue{mulmod(r->value, b.value, r->p), r->p});
  }
  return Scalar(mpq_class(std::get<mpq_class>(v_) * as_rational(o)));
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::operator-() const {
  if (const auto* r = residue()) return Scalar(Residue{r->value == 0 ? 0 : r->p - r->value, r->p});
  return Scalar(mpq_class(-std::get<mpq_class>(v_)));
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  if (const auto* r = residue()) return Scalar(Residue{powmod(r->value, r->p - 2, r->p), r->p});
  return Scalar(mpq_class(1 / std::get<mpq_class>(v_)));
}

std::optional<Scalar> Scalar::sqrt() const {
  if (is_zero()) return *this;
  if (const auto* r = residue()) {
    if (powmod(r->value, (r->p - 1) / 2, r->p) != 1) return std::nullopt;
    return Scalar(Residue{sqrt_mod(r->value, r->p), r->p});
  }
  const auto& q = std::get<mpq_class>(v_);
  if (sgn(q) < 0) return std::nullopt;
  if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t())) return std::nullopt;
  mpz_class n, d;
  mpz_sqrt(n.get_mpz_t(), q.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), q.get_den_mpz_t());
  return Scalar(mpq_class(n, d));
}

bool Scalar::operator==(const Scalar& o) const {
  if (const auto* r = residue()) {
    const auto* b = o.residue();
    return b != nullptr && *r == *b;
  }
  const auto* b = o.rational_value();
  return b != nullptr && std::get<mpq_class>(v_) == *b;
}

std::string Scalar::to_string() const {
  if (const auto* r = residue()) return std::to_string(r->value);
  return std::get<mpq_class>(v_).get_str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace altalg
