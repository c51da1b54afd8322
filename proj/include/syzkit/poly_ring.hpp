#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "syzkit/monomial.hpp"
#include "syzkit/scalar.hpp"

namespace syz {

/// Coefficient field: the rationals or Z/pZ for a prime p.
class Field {
 public:
  static constexpr std::uint32_t kDefaultPrime = 32003;

  static Field rational() { return Field(0); }
  static Field prime(std::uint32_t p);  // throws std::invalid_argument unless p is prime

  bool is_rational() const { return p_ == 0; }
  std::uint32_t characteristic() const { return p_; }

  Scalar from_int(long long v) const;
  Scalar from_rational(const mpq_class& q) const;  // throws std::domain_error if the denominator vanishes mod p
  Scalar zero() const { return from_int(0); }
  Scalar one() const { return from_int(1); }
  bool owns(const Scalar& s) const { return s.characteristic() == p_; }

  std::string describe() const;
  friend bool operator==(const Field&, const Field&) = default;

 private:
  explicit Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_;
};

/// Polynomial ring k[x_1..x_n] with the graded reverse lexicographic order.
class PolyRing {
 public:
  PolyRing(std::vector<std::string> variable_names, Field field, MonomialOrder order = {});

  std::size_t num_vars() const { return names_.size(); }
  const std::vector<std::string>& variable_names() const { return names_; }
  const Field& field() const { return field_; }
  const MonomialOrder& order() const { return order_; }
  std::optional<std::size_t> index_of(const std::string& name) const;

  Monomial one_monomial() const { return Monomial(num_vars()); }

  friend bool operator==(const PolyRing& a, const PolyRing& b) {
    return a.names_ == b.names_ && a.field_ == b.field_ && a.order_ == b.order_;
  }

 private:
  std::vector<std::string> names_;
  Field field_;
  MonomialOrder order_;
};

using RingPtr = std::shared_ptr<const PolyRing>;

RingPtr make_ring(std::vector<std::string> variable_names, Field field = Field::prime(Field::kDefaultPrime));

/// The same ring with one extra trailing variable whose name avoids collisions.
RingPtr adjoin_variable(const RingPtr& ring, const std::string& preferred_name);

inline bool same_ring(const RingPtr& a, const RingPtr& b) { return a == b || (a && b && *a == *b); }

}  // namespace syz
