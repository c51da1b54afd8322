#include "syzkit/monomial.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace syz {

namespace {

void check_length(std::size_t n) {
  if (n > kMaxVariables) throw std::invalid_argument("too many variables (limit 16)");
}

std::uint16_t checked_exponent(long e) {
  if (e < 0 || e > std::numeric_limits<std::uint16_t>::max())
    throw std::overflow_error("monomial exponent out of range");
  return static_cast<std::uint16_t>(e);
}

}  // namespace

Monomial::Monomial(std::size_t num_vars) {
  check_length(num_vars);
  num_vars_ = static_cast<std::uint8_t>(num_vars);
}

Monomial::Monomial(std::initializer_list<int> exponents) : Monomial(exponents.size()) {
  std::size_t i = 0;
  for (int e : exponents) set(i++, e);
}

Monomial Monomial::from_exponents(std::span<const int> exponents) {
  Monomial m(exponents.size());
  for (std::size_t i = 0; i < exponents.size(); ++i) m.set(i, exponents[i]);
  return m;
}

Monomial Monomial::variable(std::size_t num_vars, std::size_t index, int power) {
  Monomial m(num_vars);
  m.set(index, power);
  return m;
}

void Monomial::set(std::size_t i, int e) {
  if (i >= num_vars_) throw std::out_of_range("monomial variable index");
  const std::uint16_t v = checked_exponent(e);
  degree_ += v - exp_[i];
  exp_[i] = v;
}

bool Monomial::divides(const Monomial& other) const {
  if (num_vars_ != other.num_vars_ || degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < num_vars_; ++i)
    if (exp_[i] > other.exp_[i]) return false;
  return true;
}

bool Monomial::coprime(const Monomial& other) const { return (support() & other.support()) == 0; }

std::uint32_t Monomial::support() const {
  std::uint32_t mask = 0;
  for (std::size_t i = 0; i < num_vars_; ++i)
    if (exp_[i] != 0) mask |= 1u << i;
  return mask;
}

Monomial Monomial::operator*(const Monomial& o) const {
  if (num_vars_ != o.num_vars_) throw std::invalid_argument("monomial length mismatch");
  Monomial out(num_vars_);
  for (std::size_t i = 0; i < num_vars_; ++i) out.exp_[i] = checked_exponent(long{exp_[i]} + o.exp_[i]);
  out.degree_ = degree_ + o.degree_;
  return out;
}

Monomial Monomial::operator/(const Monomial& o) const {
  if (!o.divides(*this)) throw std::invalid_argument("monomial does not divide");
  Monomial out(num_vars_);
  for (std::size_t i = 0; i < num_vars_; ++i) out.exp_[i] = static_cast<std::uint16_t>(exp_[i] - o.exp_[i]);
  out.degree_ = degree_ - o.degree_;
  return out;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  if (a.num_vars_ != b.num_vars_) throw std::invalid_argument("monomial length mismatch");
  Monomial out(a.num_vars_);
  for (std::size_t i = 0; i < a.num_vars_; ++i) {
    out.exp_[i] = std::max(a.exp_[i], b.exp_[i]);
    out.degree_ += out.exp_[i];
  }
  return out;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
  if (a.num_vars_ != b.num_vars_) throw std::invalid_argument("monomial length mismatch");
  Monomial out(a.num_vars_);
  for (std::size_t i = 0; i < a.num_vars_; ++i) {
    out.exp_[i] = std::min(a.exp_[i], b.exp_[i]);
    out.degree_ += out.exp_[i];
  }
  return out;
}

Monomial Monomial::extended(std::size_t extra) const {
  check_length(num_vars_ + extra);
  Monomial out = *this;
  out.num_vars_ = static_cast<std::uint8_t>(num_vars_ + extra);
  return out;
}

std::strong_ordering grevlex_compare(const Monomial& a, const Monomial& b) {
  if (a.num_vars() != b.num_vars()) throw std::invalid_argument("monomial length mismatch");
  if (a.degree() != b.degree()) return a.degree() <=> b.degree();
  for (std::size_t i = a.num_vars(); i-- > 0;) {
    if (a[i] != b[i]) return b[i] <=> a[i];
  }
  return std::strong_ordering::equal;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = m.num_vars();
  for (std::size_t i = 0; i < m.num_vars(); ++i) h = h * 1000003u + static_cast<std::size_t>(m[i]);
  return h;
}

}  // namespace syz
