#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>

namespace syz {

/// Upper bound on ambient variables, including auxiliary ones adjoined by
/// radical-membership tests.
inline constexpr std::size_t kMaxVariables = 16;

/// Exponent vector with cached total degree.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t num_vars);
  Monomial(std::initializer_list<int> exponents);
  static Monomial from_exponents(std::span<const int> exponents);
  static Monomial variable(std::size_t num_vars, std::size_t index, int power = 1);

  std::size_t num_vars() const { return num_vars_; }
  int degree() const { return degree_; }
  int operator[](std::size_t i) const { return exp_[i]; }
  void set(std::size_t i, int e);
  bool is_one() const { return degree_ == 0; }

  /// Same length, all exponents of *this at most those of other.
  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;
  /// Bit i set iff variable i occurs.
  std::uint32_t support() const;

  Monomial operator*(const Monomial& o) const;
  /// Exact quotient; requires o.divides(*this).
  Monomial operator/(const Monomial& o) const;
  static Monomial lcm(const Monomial& a, const Monomial& b);
  static Monomial gcd(const Monomial& a, const Monomial& b);

  /// Same monomial with an extra trailing variable of exponent 0.
  Monomial extended(std::size_t extra) const;

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.num_vars_ == b.num_vars_ && a.exp_ == b.exp_;
  }

 private:
  std::array<std::uint16_t, kMaxVariables> exp_{};
  std::uint8_t num_vars_ = 0;
  int degree_ = 0;
};

/// Graded reverse lexicographic comparison: total degree first, then the last
/// variable with differing exponent decides, the smaller exponent being the
/// larger monomial.  Throws std::invalid_argument on a length mismatch.
std::strong_ordering grevlex_compare(const Monomial& a, const Monomial& b);

struct MonomialOrder {
  enum class Kind { grevlex };
  Kind kind = Kind::grevlex;

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const { return grevlex_compare(a, b); }
  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

}  // namespace syz
