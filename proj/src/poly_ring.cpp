#include "syzkit/poly_ring.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>

namespace syz {

Field Field::prime(std::uint32_t p) {
  if (!is_prime(p)) throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
  return Field(p);
}

Scalar Field::from_int(long long v) const {
  if (p_ == 0) return Scalar::rational(v);
  return Scalar::modular(v, p_);
}

Scalar Field::from_rational(const mpq_class& q) const {
  if (p_ == 0) return Scalar(q);
  mpz_class p(static_cast<unsigned long>(p_));
  mpz_class num = q.get_num() % p;
  mpz_class den = q.get_den() % p;
  if (den == 0) throw std::domain_error("denominator vanishes modulo " + std::to_string(p_));
  Scalar n = Scalar::modular(num.get_si(), p_);
  Scalar d = Scalar::modular(den.get_si(), p_);
  return n / d;
}

std::string Field::describe() const { return p_ == 0 ? "rational" : "prime " + std::to_string(p_); }

PolyRing::PolyRing(std::vector<std::string> variable_names, Field field, MonomialOrder order)
    : names_(std::move(variable_names)), field_(field), order_(order) {
  if (names_.size() > kMaxVariables) throw std::invalid_argument("too many variables (limit 16)");
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty() || !(std::isalpha(static_cast<unsigned char>(n[0])) || n[0] == '_'))
      throw std::invalid_argument("invalid variable name '" + n + "'");
    for (char c : n)
      if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_'))
        throw std::invalid_argument("invalid variable name '" + n + "'");
    if (!seen.insert(n).second) throw std::invalid_argument("duplicate variable name '" + n + "'");
  }
}

std::optional<std::size_t> PolyRing::index_of(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

RingPtr make_ring(std::vector<std::string> variable_names, Field field) {
  return std::make_shared<const PolyRing>(std::move(variable_names), field);
}

RingPtr adjoin_variable(const RingPtr& ring, const std::string& preferred_name) {
  std::string name = preferred_name;
  while (ring->index_of(name)) name += "_";
  auto names = ring->variable_names();
  names.push_back(name);
  return std::make_shared<const PolyRing>(std::move(names), ring->field(), ring->order());
}

}  // namespace syz
