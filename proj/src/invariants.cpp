#include "syzkit/invariants.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>

namespace syz {

namespace {

bool is_monomial_ideal(const QuotientRing& ring) {
  const auto& g = ring.gb().elements;
  return std::all_of(g.begin(), g.end(), [](const Polynomial& p) { return p.is_monomial(); });
}

// For monomial I the radical is generated by the supports of the generators,
// and a polynomial lies in it iff each of its terms does.
bool in_monomial_radical(const Polynomial& f, const QuotientRing& ring) {
  const auto& gens = ring.gb().elements;
  for (const auto& t : f.terms()) {
    std::uint32_t s = t.mono.support();
    bool in = std::any_of(gens.begin(), gens.end(),
                          [&](const Polynomial& g) { return (g.lead_monomial().support() & ~s) == 0; });
    if (!in) return false;
  }
  return true;
}

bool in_nilradical(const Polynomial& f, const QuotientRing& ring) {
  if (ring.is_zero(f)) return true;
  if (is_monomial_ideal(ring)) return in_monomial_radical(f, ring);
  return radical_membership(f, ring.ideal());
}

std::vector<Polynomial> distinct_entries(const ModuleMap& f, const QuotientRing& ring) {
  std::vector<Polynomial> out;
  for (const auto& c : f.columns) {
    for (const auto& e : c) {
      if (e.is_zero()) continue;
      Polynomial r = ring.reduce(e);
      if (r.is_zero()) continue;
      r = r.monic();
      if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(std::move(r));
    }
  }
  std::sort(out.begin(), out.end(), [](const Polynomial& a, const Polynomial& b) { return a.to_string() < b.to_string(); });
  return out;
}

Ideal unit_ideal(const RingPtr& ring) { return Ideal(ring, {Polynomial::constant(ring, 1)}); }

Ideal with_defining(const QuotientRing& ring, std::vector<Polynomial> gens) {
  for (const auto& g : ring.gb().elements) gens.push_back(g);
  return Ideal(ring.ambient(), std::move(gens));
}

bool image_support_full(const ModuleMap& f, const QuotientRing& ring) {
  auto entries = distinct_entries(f, ring);
  if (entries.empty()) return false;
  std::vector<Ideal> colons;
  for (const auto& e : entries) {
    Ideal c = ideal_quotient(ring.ideal(), Ideal(ring.ambient(), {e}));
    if (contained_in_nilradical(c, ring)) return true;
    colons.push_back(std::move(c));
  }
  Ideal ann = colons.front();
  for (std::size_t k = 1; k < colons.size(); ++k) ann = ideal_intersection(ann, colons[k]);
  return contained_in_nilradical(ann, ring);
}

}  // namespace

FittingData fitting_ideal_0(const PresentedModule& m) {
  const QuotientRing& ring = m.ring;
  const ModuleMap& p = m.presentation;
  const std::size_t r = p.rows();
  if (r == 0) return {unit_ideal(ring.ambient())};
  std::vector<Column> cols;
  for (const auto& c : p.columns) {
    Column red = reduce_column(c, ring);
    if (!is_zero_column(red)) cols.push_back(std::move(red));
  }
  const std::size_t n = cols.size();
  if (n < r) return {with_defining(ring, {})};
  if (n > kFittingColumnLimit) throw std::length_error("Fitting ideal: too many relations for the minor expansion");

  // det over rows 0..k-1 and column set `mask`, expanded along row k-1.
  std::map<std::uint32_t, Polynomial> prev;
  for (std::size_t c = 0; c < n; ++c)
    if (!cols[c][0].is_zero()) prev.emplace(1u << c, cols[c][0]);
  for (std::size_t k = 2; k <= r; ++k) {
    std::map<std::uint32_t, Polynomial> next;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      if (static_cast<std::size_t>(std::popcount(mask)) != k) continue;
      Polynomial det(ring.ambient());
      std::size_t pos = 0;
      for (std::size_t c = 0; c < n; ++c) {
        if (!(mask & (1u << c))) continue;
        const Polynomial& entry = cols[c][k - 1];
        auto it = prev.find(mask & ~(1u << c));
        if (!entry.is_zero() && it != prev.end()) {
          Polynomial term = entry * it->second;
          if ((k - 1 + pos) % 2 == 0) det += term;
          else det -= term;
        }
        ++pos;
      }
      det = ring.reduce(det);
      if (!det.is_zero()) next.emplace(mask, std::move(det));
    }
    prev = std::move(next);
  }
  std::vector<Polynomial> minors;
  for (auto& [mask, det] : prev) minors.push_back(std::move(det));
  return {with_defining(ring, std::move(minors))};
}

Ideal module_annihilator(const PresentedModule& m) {
  const QuotientRing& ring = m.ring;
  const ModuleMap& p = m.presentation;
  validate_map(p, ring);
  if (p.rows() == 0) return unit_ideal(ring.ambient());
  std::optional<Ideal> ann;
  for (std::size_t k = 0; k < p.rows(); ++k) {
    Column e(p.rows(), Polynomial(ring.ambient()));
    e[k] = Polynomial::constant(ring.ambient(), 1);
    std::vector<Column> cols{e};
    cols.insert(cols.end(), p.columns.begin(), p.columns.end());
    std::vector<int> shifts{p.target.shifts[k]};
    shifts.insert(shifts.end(), p.source.shifts.begin(), p.source.shifts.end());
    std::vector<Polynomial> gens;
    for (const auto& v : syzygies_modulo(ring.ambient(), cols, p.target.shifts, ring.gb().elements, shifts))
      if (!v[0].is_zero()) gens.push_back(v[0]);
    Ideal colon = with_defining(ring, std::move(gens));
    ann = ann ? ideal_intersection(*ann, colon) : colon;
  }
  return *ann;
}

Ideal image_annihilator(const ModuleMap& f, const QuotientRing& ring) {
  auto entries = distinct_entries(f, ring);
  if (entries.empty()) return unit_ideal(ring.ambient());
  std::optional<Ideal> ann;
  for (const auto& e : entries) {
    Ideal c = ideal_quotient(ring.ideal(), Ideal(ring.ambient(), {e}));
    ann = ann ? ideal_intersection(*ann, c) : c;
  }
  return *ann;
}

bool contained_in_nilradical(const Ideal& j, const QuotientRing& ring) {
  const auto& gens = j.groebner().elements;
  return std::all_of(gens.begin(), gens.end(), [&](const Polynomial& g) { return in_nilradical(g, ring); });
}

int module_dim(const PresentedModule& m) { return summarize_hilbert(module_hilbert_numerator(m), m.ring.num_vars()).dim; }

LengthValue module_length(const PresentedModule& m) {
  return summarize_hilbert(module_hilbert_numerator(m), m.ring.num_vars()).length;
}

bool support_is_full(const PresentedModule& m) {
  if (module_dim(m) < 0) throw std::invalid_argument("support of the zero module");
  std::size_t relations = 0;
  for (const auto& c : m.presentation.columns)
    if (!is_zero_column(reduce_column(c, m.ring))) ++relations;
  if (relations <= kFittingColumnLimit) return contained_in_nilradical(fitting_ideal_0(m).ideal, m.ring);
  return contained_in_nilradical(module_annihilator(m), m.ring);
}

SyzygyInvariants syzygy_invariants(const FreeResolution& res, std::size_t i) {
  if (i == 0) throw std::out_of_range("syzygy index starts at 1");
  SyzygyInvariants out;
  out.index = i;
  if (i <= res.maps.size()) {
    const ModuleMap& f = res.maps[i - 1];
    out.betti = res.betti[i];
    auto h = summarize_hilbert(image_hilbert_numerator(f, res.ring), res.ring.num_vars());
    out.dim = h.dim;
    out.length = h.length;
    out.is_zero = h.dim < 0;
    out.support_full = !out.is_zero && image_support_full(f, res.ring);
    return out;
  }
  if (!res.terminated) throw std::out_of_range("syzygy " + std::to_string(i) + " lies beyond the computed resolution");
  out.is_zero = true;
  return out;
}

H0Data h0_local_cohomology(const QuotientRing& ring) {
  const RingPtr& s = ring.ambient();
  Ideal j = saturate(ring.ideal(), Ideal::maximal(s));
  if (j.groebner() == ring.gb()) return H0Data{j, zero_module(ring), true, true, LengthValue::finite(0)};

  std::vector<Column> cols;
  for (const auto& g : j.groebner().elements) cols.push_back(Column{g});
  auto keep = minimalize_generators(cols, {0}, ring);
  ModuleMap row{FreeModule{}, FreeModule{{0}}, {}};
  for (std::size_t k : keep) {
    row.source.shifts.push_back(cols[k][0].total_degree());
    row.columns.push_back(cols[k]);
  }
  ModuleMap kernel = syzygy_generators(row, ring);
  auto kkeep = minimalize_generators(kernel.columns, kernel.target.shifts, ring);
  ModuleMap pres{FreeModule{}, row.source, {}};
  for (std::size_t k : kkeep) {
    pres.source.shifts.push_back(kernel.source.shifts[k]);
    pres.columns.push_back(kernel.columns[k]);
  }

  bool killed = true;
  for (const auto& g : j.groebner().elements)
    for (std::size_t v = 0; v < s->num_vars() && killed; ++v)
      if (!ring.is_zero(Polynomial::variable(s, v) * g)) killed = false;

  IntPoly diff = int_poly_sub(ring.lead().hilbert_numerator(), lead_monomial_ideal(j).hilbert_numerator());
  LengthValue length = summarize_hilbert(diff, s->num_vars()).length;
  return H0Data{j, PresentedModule{ring, std::move(pres)}, false, killed, length};
}

bool depth_is_positive(const QuotientRing& ring) { return h0_local_cohomology(ring).is_zero; }

long long alternating_betti_sum(const BettiTable& t, std::size_t r) {
  if (r >= t.total.size()) throw std::out_of_range("alternating Betti sum past the table");
  long long sum = 0;
  for (std::size_t i = 0; i <= r; ++i) sum += ((r - i) % 2 == 0 ? 1 : -1) * static_cast<long long>(t.total[i]);
  return sum;
}

bool is_regular_model(const QuotientRing& ring) { return ring.gb().elements.empty(); }

InvariantReport compute_report(const FreeResolution& res, int steps) {
  return compute_report(res, steps, h0_local_cohomology(res.ring));
}

InvariantReport compute_report(const FreeResolution& res, int steps, const H0Data& h0) {
  InvariantReport out;
  out.ring_dim = res.ring.dim();
  out.betti = res.betti;
  out.terminated = res.terminated;
  for (int i = 1; i <= steps; ++i) out.syzygies.push_back(syzygy_invariants(res, static_cast<std::size_t>(i)));
  out.h0 = H0Summary{h0.is_zero, h0.killed_by_m, h0.length};
  out.depth_positive = h0.is_zero;
  return out;
}

InvariantReport compute_report(const PresentedModule& m, int steps) { return compute_report(resolve(m, steps), steps); }

}  // namespace syz
