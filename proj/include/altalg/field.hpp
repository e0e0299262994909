#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

namespace altalg {

/// Raised when inputs violate a documented precondition (mismatched fields,
/// dimensions, malformed scalars). The CLI maps it to exit code 2.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The ground field: either the rationals or a prime field F_p with p > 3.
/// Characteristic 2 and 3 are rejected up front; every theorem-level check
/// in this library assumes the ring is 2- and 3-torsion free.
class Field {
 public:
  enum class Kind { rational, prime };

  static Field rational() { return Field(Kind::rational, 0); }
  static Field prime(std::uint64_t p);

  Kind kind() const { return kind_; }
  bool is_prime() const { return kind_ == Kind::prime; }
  std::uint64_t modulus() const { return p_; }
  std::uint64_t characteristic() const { return p_; }

  /// "Q" or "F5".
  std::string name() const;

  bool operator==(const Field&) const = default;

 private:
  Field(Kind k, std::uint64_t p) : kind_(k), p_(p) {}
  Kind kind_;
  std::uint64_t p_;
};

bool is_prime_number(std::uint64_t n);

/// Exact field element. Rationals are kept in lowest terms with positive
/// denominator (mpq canonical form); residues live in [0, p).
class Scalar {
 public:
  struct Residue {
    std::uint64_t value;
    std::uint64_t p;
    bool operator==(const Residue&) const = default;
  };

  Scalar() : v_(mpq_class(0)) {}
  explicit Scalar(mpq_class q);
  Scalar(Residue r) : v_(r) {}

  static Scalar zero(const Field& f);
  static Scalar one(const Field& f);
  static Scalar from_int(const Field& f, long long n);
  /// Parses "n", "-n", "p/q". Over F_p, fractions are reduced via the
  /// modular inverse of the denominator.
  static Scalar parse(const Field& f, std::string_view text);

  Field field() const;
  bool belongs_to(const Field& f) const;
  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  Scalar inverse() const;
  /// Some square root in the field, if one exists.
  std::optional<Scalar> sqrt() const;

  bool operator==(const Scalar& o) const;

  /// Canonical decimal form: "3", "-1/2", or a residue "4".
  std::string to_string() const;

  const mpq_class* rational_value() const { return std::get_if<mpq_class>(&v_); }
  const Residue* residue() const { return std::get_if<Residue>(&v_); }

 private:
  std::variant<mpq_class, Residue> v_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace altalg
