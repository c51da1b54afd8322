#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "syzkit/poly_ring.hpp"

namespace syz {

struct Term {
  Monomial mono;
  Scalar coef;
};

/// Sparse polynomial.  Terms are kept sorted strictly descending in the ring's
/// monomial order and never carry a zero coefficient.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial constant(const RingPtr& ring, const Scalar& c);
  static Polynomial constant(const RingPtr& ring, long long c) { return constant(ring, ring->field().from_int(c)); }
  static Polynomial monomial(const RingPtr& ring, const Monomial& m, const Scalar& c);
  static Polynomial monomial(const RingPtr& ring, const Monomial& m) { return monomial(ring, m, ring->field().one()); }
  static Polynomial variable(const RingPtr& ring, std::size_t index);
  /// Sorts, merges like terms and drops zeros.
  static Polynomial from_terms(const RingPtr& ring, std::vector<Term> terms);
  /// Takes terms already strictly descending with nonzero coefficients.
  static Polynomial from_sorted_terms(const RingPtr& ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  bool is_monomial() const { return terms_.size() == 1; }

  const Term& lead_term() const { return terms_.front(); }
  const Monomial& lead_monomial() const { return terms_.front().mono; }
  const Scalar& lead_coef() const { return terms_.front().coef; }
  /// Maximum total degree; -1 for zero.
  int total_degree() const;
  /// All terms share one total degree; zero is homogeneous.
  bool is_homogeneous() const;
  /// Constant coefficient (zero if absent).
  Scalar constant_coef() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  Polynomial scaled(const Scalar& c) const;
  Polynomial times_term(const Monomial& m, const Scalar& c) const;
  Polynomial monic() const;
  /// Image under the inclusion into a ring with extra trailing variables.
  Polynomial extended_to(const RingPtr& bigger) const;

  /// Deterministic text in the parse grammar.
  std::string to_string() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  RingPtr ring_;
  std::vector<Term> terms_;
};

enum class PolyOpKind { add, sub, mul };

/// Exact sum, difference or product.  Throws RingMismatch.
Polynomial poly_op(const Polynomial& f, const Polynomial& g, PolyOpKind kind);

/// Parses "x^2 + 3*x*y - 1/2*z".  Throws ParseError with a 1-based column.
Polynomial parse_poly(std::string_view text, const RingPtr& ring);

std::ostream& operator<<(std::ostream& os, const Polynomial& f);

}  // namespace syz
