#pragma once

#include <memory>
#include <mutex>
#include <vector>

#include "syzkit/module_gb.hpp"
#include "syzkit/monomial_ideal.hpp"
#include "syzkit/polynomial.hpp"

namespace syz {

/// Reduced Gröbner basis of an ideal: monic, sorted ascending by lead monomial.
struct GroebnerBasis {
  RingPtr ring;
  std::vector<Polynomial> elements;

  bool is_unit() const { return elements.size() == 1 && elements[0].is_constant(); }
  friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b) { return a.elements == b.elements; }
};

class Ideal {
 public:
  Ideal(RingPtr ring, std::vector<Polynomial> generators);
  static Ideal zero(const RingPtr& ring) { return Ideal(ring, {}); }
  /// The ideal of all variables.
  static Ideal maximal(const RingPtr& ring);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }
  bool is_homogeneous() const;

  /// Computed once and shared by copies.
  const GroebnerBasis& groebner() const;
  bool is_unit() const { return groebner().is_unit(); }

 private:
  struct Cache {
    std::once_flag once;
    GroebnerBasis gb;
  };

  RingPtr ring_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<Cache> cache_;
};

/// Same ideal: equal reduced Gröbner bases.
bool same_ideal(const Ideal& a, const Ideal& b);
Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_product(const Ideal& a, const Ideal& b);

GroebnerBasis buchberger(const Ideal& ideal);
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb);
bool ideal_membership(const Polynomial& f, const Ideal& ideal);

/// Generators of { v in S^m : A v lies in I S^r } for the r x m matrix A given
/// by its columns, where relations is a Gröbner basis of I (possibly empty).
/// Row shifts grade S^r; column shifts grade S^m and are read off the entries
/// when omitted.  The result generates the kernel but is not minimal.
std::vector<std::vector<Polynomial>> syzygies_modulo(const RingPtr& ring,
                                                     const std::vector<std::vector<Polynomial>>& columns,
                                                     const std::vector<int>& row_shifts,
                                                     const std::vector<Polynomial>& relations,
                                                     const std::vector<int>& column_shifts = {});

Ideal ideal_intersection(const Ideal& a, const Ideal& b);
/// (I : J) = { f : f J ⊆ I }.
Ideal ideal_quotient(const Ideal& i, const Ideal& j);
/// (I : J^∞), iterating colons until the reduced basis stabilizes.
Ideal saturate(const Ideal& i, const Ideal& j);
/// f ∈ √I, via 1 ∈ I + (1 - t f) in S[t].
bool radical_membership(const Polynomial& f, const Ideal& ideal);

Ideal lead_ideal(const Ideal& ideal);
MonomialIdeal lead_monomial_ideal(const Ideal& ideal);
/// dim S/I.  Throws UnitIdeal.
int krull_dim(const Ideal& ideal);
/// dim_k S/I, or infinite.  Throws UnitIdeal.
LengthValue vector_space_length(const Ideal& ideal);
/// Minimal primes of a monomial ideal as sorted variable-index lists.
/// Throws std::invalid_argument on a non-monomial generator.
std::vector<std::vector<std::size_t>> minimal_primes_monomial(const Ideal& ideal);

ModuleVector to_vector(const Polynomial& f);
Polynomial from_vector(const ModuleVector& v, const RingPtr& ring);

}  // namespace syz
