#include "syzkit/groebner.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "syzkit/errors.hpp"

namespace syz {

namespace {

const ModuleOrder& ideal_order() {
  static const ModuleOrder order({0});
  return order;
}

void check_ring(const RingPtr& a, const RingPtr& b) {
  if (!same_ring(a, b)) throw RingMismatch();
}

}  // namespace

ModuleVector to_vector(const Polynomial& f) {
  ModuleVector v;
  v.reserve(f.size());
  for (const auto& t : f.terms()) v.push_back(ModuleTerm{t.mono, 0, t.coef});
  return v;
}

Polynomial from_vector(const ModuleVector& v, const RingPtr& ring) {
  std::vector<Term> terms;
  terms.reserve(v.size());
  for (const auto& t : v) terms.push_back(Term{t.mono, t.coef});
  return Polynomial::from_sorted_terms(ring, std::move(terms));
}

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators)
    : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
  for (auto& g : generators) {
    check_ring(ring_, g.ring());
    if (!g.is_zero()) gens_.push_back(std::move(g));
  }
}

Ideal Ideal::maximal(const RingPtr& ring) {
  std::vector<Polynomial> vars;
  for (std::size_t i = 0; i < ring->num_vars(); ++i) vars.push_back(Polynomial::variable(ring, i));
  return Ideal(ring, std::move(vars));
}

bool Ideal::is_homogeneous() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const Polynomial& g) { return g.is_homogeneous(); });
}

const GroebnerBasis& Ideal::groebner() const {
  std::call_once(cache_->once, [this] { cache_->gb = buchberger(*this); });
  return cache_->gb;
}

bool same_ideal(const Ideal& a, const Ideal& b) {
  return same_ring(a.ring(), b.ring()) && a.groebner() == b.groebner();
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  check_ring(a.ring(), b.ring());
  auto gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Ideal(a.ring(), std::move(gens));
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
  check_ring(a.ring(), b.ring());
  std::vector<Polynomial> gens;
  for (const auto& f : a.generators())
    for (const auto& g : b.generators()) gens.push_back(f * g);
  return Ideal(a.ring(), std::move(gens));
}

GroebnerBasis buchberger(const Ideal& ideal) {
  GroebnerEngine engine(ideal.ring(), ideal_order());
  for (const auto& g : ideal.generators()) engine.add(to_vector(g));
  engine.complete();
  GroebnerBasis gb{ideal.ring(), {}};
  for (const auto& v : engine.reduced_basis()) gb.elements.push_back(from_vector(v, ideal.ring()));
  return gb;
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) {
  check_ring(f.ring(), gb.ring);
  if (gb.elements.empty() || f.is_zero()) return f;
  GroebnerEngine engine(gb.ring, ideal_order());
  for (const auto& g : gb.elements) engine.adopt(to_vector(g));
  return from_vector(engine.reduce(to_vector(f), true), f.ring());
}

bool ideal_membership(const Polynomial& f, const Ideal& ideal) {
  return normal_form(f, ideal.groebner()).is_zero();
}

std::vector<std::vector<Polynomial>> syzygies_modulo(const RingPtr& ring,
                                                     const std::vector<std::vector<Polynomial>>& columns,
                                                     const std::vector<int>& row_shifts,
                                                     const std::vector<Polynomial>& relations,
                                                     const std::vector<int>& column_shifts) {
  const std::size_t rows = row_shifts.size();
  const std::size_t cols = columns.size();
  if (!column_shifts.empty() && column_shifts.size() != cols)
    throw std::invalid_argument("syzygies: one shift per column expected");
  std::vector<int> shifts = row_shifts;
  std::vector<int> blocks(rows, 0);
  for (std::size_t j = 0; j < cols; ++j) {
    const auto& col = columns[j];
    if (col.size() != rows) throw std::invalid_argument("syzygies: column length does not match row count");
    if (!column_shifts.empty()) {
      for (const auto& e : col) check_ring(ring, e.ring());
      shifts.push_back(column_shifts[j]);
      blocks.push_back(1);
      continue;
    }
    int deg = 0;
    bool seen = false;
    for (std::size_t r = 0; r < rows; ++r) {
      check_ring(ring, col[r].ring());
      if (col[r].is_zero()) continue;
      int d = col[r].total_degree() + row_shifts[r];
      deg = seen ? std::max(deg, d) : d;
      seen = true;
    }
    shifts.push_back(deg);
    blocks.push_back(1);
  }
  ModuleOrder order(std::move(shifts), std::move(blocks));
  GroebnerEngine engine(ring, order, /*skip_upper_blocks=*/true);
  for (std::size_t j = 0; j < cols; ++j) {
    std::vector<ModuleTerm> terms;
    append_column(terms, columns[j], 0);
    terms.push_back(ModuleTerm{ring->one_monomial(), static_cast<std::uint32_t>(rows + j), ring->field().one()});
    engine.add(normalize_vector(std::move(terms), order));
  }
  for (std::size_t r = 0; r < rows; ++r) {
    for (const auto& g : relations) {
      ModuleVector v;
      for (const auto& t : g.terms()) v.push_back(ModuleTerm{t.mono, static_cast<std::uint32_t>(r), t.coef});
      if (!v.empty()) engine.add(std::move(v));
    }
  }
  engine.complete();
  std::vector<std::vector<Polynomial>> out;
  for (const auto& v : engine.basis())
    if (v.front().comp >= rows) out.push_back(extract_column(v, rows, cols, ring));
  return out;
}

Ideal ideal_intersection(const Ideal& a, const Ideal& b) {
  check_ring(a.ring(), b.ring());
  if (a.is_zero() || b.is_zero()) return Ideal::zero(a.ring());
  const auto& ga = a.groebner().elements;
  const auto& gb = b.groebner().elements;
  std::vector<std::vector<Polynomial>> columns;
  for (const auto& f : ga) columns.push_back({f});
  for (const auto& g : gb) columns.push_back({g});
  std::vector<Polynomial> gens;
  for (const auto& syz : syzygies_modulo(a.ring(), columns, {0}, {})) {
    Polynomial h(a.ring());
    for (std::size_t i = 0; i < ga.size(); ++i) h += syz[i] * ga[i];
    if (!h.is_zero()) gens.push_back(std::move(h));
  }
  Ideal out(a.ring(), std::move(gens));
  return Ideal(a.ring(), out.groebner().elements);
}

namespace {

Ideal colon_by_element(const Ideal& i, const Polynomial& g) {
  const auto& gb = i.groebner();
  if (normal_form(g, gb).is_zero()) return Ideal(i.ring(), {Polynomial::constant(i.ring(), 1)});
  std::vector<Polynomial> gens;
  for (auto& syz : syzygies_modulo(i.ring(), {{g}}, {0}, gb.elements))
    if (!syz[0].is_zero()) gens.push_back(std::move(syz[0]));
  Ideal out(i.ring(), std::move(gens));
  return Ideal(i.ring(), out.groebner().elements);
}

}  // namespace

Ideal ideal_quotient(const Ideal& i, const Ideal& j) {
  check_ring(i.ring(), j.ring());
  if (j.is_zero()) throw std::invalid_argument("ideal quotient by the zero ideal");
  std::optional<Ideal> acc;
  for (const auto& g : j.groebner().elements) {
    Ideal c = colon_by_element(i, g);
    acc = acc ? ideal_intersection(*acc, c) : c;
  }
  return *acc;
}

Ideal saturate(const Ideal& i, const Ideal& j) {
  Ideal current(i.ring(), i.groebner().elements);
  for (;;) {
    Ideal next = ideal_quotient(current, j);
    if (next.groebner() == current.groebner()) return current;
    current = next;
  }
}

bool radical_membership(const Polynomial& f, const Ideal& ideal) {
  check_ring(f.ring(), ideal.ring());
  if (f.is_zero()) return true;
  RingPtr big = adjoin_variable(ideal.ring(), "t");
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(g.extended_to(big));
  Polynomial t = Polynomial::variable(big, big->num_vars() - 1);
  gens.push_back(Polynomial::constant(big, 1) - t * f.extended_to(big));
  return Ideal(big, std::move(gens)).is_unit();
}

Ideal lead_ideal(const Ideal& ideal) {
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.groebner().elements) gens.push_back(Polynomial::monomial(ideal.ring(), g.lead_monomial()));
  return Ideal(ideal.ring(), std::move(gens));
}

MonomialIdeal lead_monomial_ideal(const Ideal& ideal) {
  std::vector<Monomial> gens;
  for (const auto& g : ideal.groebner().elements) gens.push_back(g.lead_monomial());
  return MonomialIdeal(ideal.ring()->num_vars(), std::move(gens));
}

int krull_dim(const Ideal& ideal) {
  if (ideal.is_unit()) throw UnitIdeal("dimension of the unit ideal");
  return lead_monomial_ideal(ideal).dimension();
}

LengthValue vector_space_length(const Ideal& ideal) {
  if (ideal.is_unit()) throw UnitIdeal("length of the unit ideal quotient");
  return lead_monomial_ideal(ideal).colength();
}

std::vector<std::vector<std::size_t>> minimal_primes_monomial(const Ideal& ideal) {
  std::vector<Monomial> gens;
  for (const auto& g : ideal.generators()) {
    if (!g.is_monomial()) throw std::invalid_argument("minimal primes: '" + g.to_string() + "' is not a monomial");
    gens.push_back(g.lead_monomial());
  }
  MonomialIdeal mono(ideal.ring()->num_vars(), std::move(gens));
  std::vector<std::vector<std::size_t>> out;
  for (std::uint32_t mask : mono.minimal_primes()) {
    std::vector<std::size_t> vars;
    for (std::size_t i = 0; i < ideal.ring()->num_vars(); ++i)
      if (mask & (1u << i)) vars.push_back(i);
    out.push_back(std::move(vars));
  }
  return out;
}

}  // namespace syz
