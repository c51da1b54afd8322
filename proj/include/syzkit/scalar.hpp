#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace syz {

/// Element of Z/pZ with the modulus carried alongside the residue.
struct Residue {
  std::uint32_t value = 0;
  std::uint32_t modulus = 2;

  friend bool operator==(const Residue&, const Residue&) = default;
};

/// Exact coefficient: either a rational number in lowest terms or a residue
/// modulo a prime.  Mixing the two kinds in one operation throws
/// std::invalid_argument.
class Scalar {
 public:
  Scalar() : rep_(mpq_class(0)) {}
  explicit Scalar(mpq_class q) : rep_(std::move(q)) { std::get<mpq_class>(rep_).canonicalize(); }
  explicit Scalar(Residue r);

  static Scalar rational(long long num, long long den = 1);
  static Scalar modular(long long value, std::uint32_t modulus);

  bool is_rational() const { return std::holds_alternative<mpq_class>(rep_); }
  bool is_zero() const;
  bool is_one() const;
  /// Modulus of a residue, 0 for rationals.
  std::uint32_t characteristic() const;

  const mpq_class& as_rational() const { return std::get<mpq_class>(rep_); }
  Residue as_residue() const { return std::get<Residue>(rep_); }

  Scalar inverse() const;  // throws std::domain_error on zero

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }
  Scalar operator-() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);

  /// Decimal text; rationals as "n" or "n/d", residues as their value in [0, p).
  std::string to_string() const;

 private:
  void check_same_kind(const Scalar& o) const;

  std::variant<mpq_class, Residue> rep_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

bool is_prime(std::uint64_t n);

}  // namespace syz
