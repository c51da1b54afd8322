#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "syzkit/monomial.hpp"

namespace syz {

/// Length of a module: a nonnegative integer or infinity.
class LengthValue {
 public:
  static LengthValue finite(std::uint64_t n) { return LengthValue(n); }
  static LengthValue infinite() { return LengthValue(std::nullopt); }

  bool is_finite() const { return value_.has_value(); }
  std::uint64_t value() const { return value_.value(); }
  std::string to_string() const { return value_ ? std::to_string(*value_) : "infinite"; }

  friend bool operator==(const LengthValue&, const LengthValue&) = default;

 private:
  explicit LengthValue(std::optional<std::uint64_t> v) : value_(v) {}
  std::optional<std::uint64_t> value_;
};

/// Integer polynomial in t, coefficient i at index i.
using IntPoly = std::vector<long long>;

IntPoly int_poly_add(const IntPoly& a, const IntPoly& b);
IntPoly int_poly_sub(const IntPoly& a, const IntPoly& b);
IntPoly int_poly_shift(const IntPoly& a, int by);  // times t^by, by >= 0

/// Dimension and length read off a Hilbert series numerator N(t)/(1-t)^n.
struct HilbertSummary {
  int dim;             // -1 for the zero module
  LengthValue length;
};
HilbertSummary summarize_hilbert(IntPoly numerator, std::size_t num_vars);

/// Monomial ideal kept as its minimal generators (sorted, deterministic).
class MonomialIdeal {
 public:
  MonomialIdeal(std::size_t num_vars, std::vector<Monomial> generators);

  std::size_t num_vars() const { return num_vars_; }
  const std::vector<Monomial>& generators() const { return gens_; }
  bool is_unit() const { return gens_.size() == 1 && gens_[0].is_one(); }
  bool contains(const Monomial& m) const;

  /// Largest set of variables containing the support of no generator; -1 for the unit ideal.
  int dimension() const;
  /// Number of standard monomials, enumerated degree by degree.
  LengthValue colength() const;
  /// Numerator of the Hilbert series of S/L over (1-t)^n.
  IntPoly hilbert_numerator() const;
  /// Minimal primes as variable bitmasks (minimal vertex covers of generator supports).
  std::vector<std::uint32_t> minimal_primes() const;

  MonomialIdeal colon(const Monomial& m) const;
  MonomialIdeal plus(const Monomial& m) const;

 private:
  std::size_t num_vars_;
  std::vector<Monomial> gens_;
};

/// Calls f on every monomial of total degree d in n variables.
template <class F>
void for_each_monomial_of_degree(std::size_t n, int d, F&& f) {
  Monomial m(n);
  if (n == 0) {
    if (d == 0) f(m);
    return;
  }
  auto rec = [&](auto& self, std::size_t i, int left) -> void {
    if (i + 1 == n) {
      m.set(i, left);
      f(m);
      return;
    }
    for (int e = left; e >= 0; --e) {
      m.set(i, e);
      self(self, i + 1, left - e);
    }
    m.set(i, 0);
  };
  rec(rec, 0, d);
}

}  // namespace syz
