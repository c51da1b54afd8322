#include "syzkit/quotient_ring.hpp"

#include "syzkit/errors.hpp"

namespace syz {

QuotientRing::QuotientRing(Ideal defining_ideal) : ideal_(std::move(defining_ideal)) {
  for (const auto& g : ideal_.generators())
    if (!g.is_homogeneous()) throw NotHomogeneous("defining ideal generator '" + g.to_string() + "' is not homogeneous");
  if (ideal_.is_unit()) throw UnitIdeal("defining ideal is the unit ideal");
  GroebnerEngine reducer(ambient(), ModuleOrder({0}));
  for (const auto& g : gb().elements) reducer.adopt(to_vector(g));
  MonomialIdeal lead = lead_monomial_ideal(ideal_);
  int dim = lead.dimension();
  state_ = std::make_shared<const State>(State{std::move(reducer), std::move(lead), dim});
}

Polynomial QuotientRing::reduce(const Polynomial& f) const {
  if (f.is_zero() || gb().elements.empty()) return f;
  return from_vector(state_->reducer.reduce(to_vector(f), true), ambient());
}

bool same_quotient(const QuotientRing& a, const QuotientRing& b) {
  return same_ring(a.ambient(), b.ambient()) && a.gb() == b.gb();
}

}  // namespace syz
