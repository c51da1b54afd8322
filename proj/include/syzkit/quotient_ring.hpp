#pragma once

#include <memory>

#include "syzkit/groebner.hpp"

namespace syz {

/// R = S/I for a proper homogeneous ideal I.  Copies share the Gröbner data.
class QuotientRing {
 public:
  /// Throws NotHomogeneous or UnitIdeal.
  explicit QuotientRing(Ideal defining_ideal);
  static QuotientRing polynomial(const RingPtr& ring) { return QuotientRing(Ideal::zero(ring)); }

  const RingPtr& ambient() const { return ideal_.ring(); }
  const Ideal& ideal() const { return ideal_; }
  const GroebnerBasis& gb() const { return ideal_.groebner(); }
  const MonomialIdeal& lead() const { return state_->lead; }
  int dim() const { return state_->dim; }
  std::size_t num_vars() const { return ambient()->num_vars(); }

  /// Normal form modulo I.
  Polynomial reduce(const Polynomial& f) const;
  bool is_zero(const Polynomial& f) const { return reduce(f).is_zero(); }

 private:
  struct State {
    GroebnerEngine reducer;
    MonomialIdeal lead;
    int dim;
  };
  Ideal ideal_;
  std::shared_ptr<const State> state_;
};

bool same_quotient(const QuotientRing& a, const QuotientRing& b);

}  // namespace syz
