#include "syzkit/scalar.hpp"

#include <ostream>
#include <stdexcept>

namespace syz {

namespace {

std::uint32_t reduce_mod(long long v, std::uint32_t p) {
  long long r = v % static_cast<long long>(p);
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r);
}

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  long long t = 0, new_t = 1;
  long long r = p, new_r = a;
  while (new_r != 0) {
    long long q = r / new_r;
    t = t - q * new_t;
    std::swap(t, new_t);
    r = r - q * new_r;
    std::swap(r, new_r);
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Scalar::Scalar(Residue r) : rep_(r) {
  if (r.modulus < 2) throw std::invalid_argument("residue modulus must be at least 2");
  std::get<Residue>(rep_).value %= r.modulus;
}

Scalar Scalar::rational(long long num, long long den) {
  if (den == 0) throw std::domain_error("zero denominator");
  return Scalar(mpq_class(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den))));
}

Scalar Scalar::modular(long long value, std::uint32_t modulus) {
  return Scalar(Residue{reduce_mod(value, modulus), modulus});
}

bool Scalar::is_zero() const {
  if (auto* r = std::get_if<Residue>(&rep_)) return r->value == 0;
  return sgn(std::get<mpq_class>(rep_)) == 0;
}

bool Scalar::is_one() const {
  if (auto* r = std::get_if<Residue>(&rep_)) return r->value == 1;
  return std::get<mpq_class>(rep_) == 1;
}

std::uint32_t Scalar::characteristic() const {
  if (auto* r = std::get_if<Residue>(&rep_)) return r->modulus;
  return 0;
}

void Scalar::check_same_kind(const Scalar& o) const {
  if (rep_.index() != o.rep_.index() || characteristic() != o.characteristic())
    throw std::invalid_argument("scalar field mismatch");
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  if (auto* r = std::get_if<Residue>(&rep_)) return Scalar(Residue{inverse_mod(r->value, r->modulus), r->modulus});
  mpq_class inv = 1 / std::get<mpq_class>(rep_);
  return Scalar(std::move(inv));
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_same_kind(o);
  if (auto* r = std::get_if<Residue>(&rep_)) {
    std::uint64_t s = std::uint64_t{r->value} + std::get<Residue>(o.rep_).value;
    r->value = static_cast<std::uint32_t>(s % r->modulus);
  } else {
    std::get<mpq_class>(rep_) += std::get<mpq_class>(o.rep_);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  check_same_kind(o);
  if (auto* r = std::get_if<Residue>(&rep_)) {
    std::uint64_t s = std::uint64_t{r->value} + r->modulus - std::get<Residue>(o.rep_).value;
    r->value = static_cast<std::uint32_t>(s % r->modulus);
  } else {
    std::get<mpq_class>(rep_) -= std::get<mpq_class>(o.rep_);
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  check_same_kind(o);
  if (auto* r = std::get_if<Residue>(&rep_)) {
    std::uint64_t s = std::uint64_t{r->value} * std::get<Residue>(o.rep_).value;
    r->value = static_cast<std::uint32_t>(s % r->modulus);
  } else {
    std::get<mpq_class>(rep_) *= std::get<mpq_class>(o.rep_);
  }
  return *this;
}

Scalar Scalar::operator-() const {
  Scalar out = *this;
  if (auto* r = std::get_if<Residue>(&out.rep_)) {
    r->value = r->value == 0 ? 0 : r->modulus - r->value;
  } else {
    std::get<mpq_class>(out.rep_) = -std::get<mpq_class>(out.rep_);
  }
  return out;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.rep_.index() != b.rep_.index()) return false;
  if (auto* r = std::get_if<Residue>(&a.rep_)) return *r == std::get<Residue>(b.rep_);
  return std::get<mpq_class>(a.rep_) == std::get<mpq_class>(b.rep_);
}

std::string Scalar::to_string() const {
  if (auto* r = std::get_if<Residue>(&rep_)) return std::to_string(r->value);
  return std::get<mpq_class>(rep_).get_str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace syz
