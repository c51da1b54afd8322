#include "syzkit/monomial_ideal.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>

namespace syz {

IntPoly int_poly_add(const IntPoly& a, const IntPoly& b) {
  IntPoly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

IntPoly int_poly_sub(const IntPoly& a, const IntPoly& b) {
  IntPoly neg(b.size());
  std::transform(b.begin(), b.end(), neg.begin(), [](long long c) { return -c; });
  return int_poly_add(a, neg);
}

IntPoly int_poly_shift(const IntPoly& a, int by) {
  if (a.empty()) return a;
  IntPoly out(static_cast<std::size_t>(by), 0);
  out.insert(out.end(), a.begin(), a.end());
  return out;
}

namespace {

long long eval_at_one(const IntPoly& p) {
  long long s = 0;
  for (long long c : p) s += c;
  return s;
}

// p = (1 - t) q; requires p(1) = 0.
IntPoly divide_one_minus_t(const IntPoly& p) {
  IntPoly q(p.size() > 0 ? p.size() - 1 : 0, 0);
  long long acc = 0;
  for (std::size_t i = 0; i < q.size(); ++i) {
    acc += p[i];
    q[i] = acc;
  }
  while (!q.empty() && q.back() == 0) q.pop_back();
  return q;
}

IntPoly one_minus_t_power(int d) {
  IntPoly p(static_cast<std::size_t>(d) + 1, 0);
  p[0] = 1;
  p[static_cast<std::size_t>(d)] -= 1;
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

IntPoly multiply(const IntPoly& a, const IntPoly& b) {
  if (a.empty() || b.empty()) return {};
  IntPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    return grevlex_compare(a, b) == std::strong_ordering::less;
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> out;
  for (const auto& g : gens) {
    // Sorted ascending by a degree-compatible order, so divisors come first.
    if (std::none_of(out.begin(), out.end(), [&](const Monomial& h) { return h.divides(g); })) out.push_back(g);
  }
  return out;
}

IntPoly numerator_rec(const MonomialIdeal& ideal) {
  const auto& gens = ideal.generators();
  if (gens.empty()) return {1};
  bool coprime = true;
  for (std::size_t i = 0; i < gens.size() && coprime; ++i)
    for (std::size_t j = i + 1; j < gens.size() && coprime; ++j)
      if (!gens[i].coprime(gens[j])) coprime = false;
  if (coprime) {
    IntPoly out{1};
    for (const auto& g : gens) out = multiply(out, one_minus_t_power(g.degree()));
    return out;
  }
  // Pivot on the variable occurring in the most mixed generators.
  std::vector<int> count(ideal.num_vars(), 0);
  for (const auto& g : gens) {
    if (std::popcount(g.support()) < 2) continue;
    for (std::size_t v = 0; v < ideal.num_vars(); ++v)
      if (g[v] > 0) ++count[v];
  }
  std::size_t var = static_cast<std::size_t>(std::max_element(count.begin(), count.end()) - count.begin());
  int exponent = 0;
  for (const auto& g : gens)
    if (std::popcount(g.support()) >= 2 && g[var] > 0 && (exponent == 0 || g[var] < exponent)) exponent = g[var];
  Monomial pivot = Monomial::variable(ideal.num_vars(), var, exponent);
  IntPoly plus = numerator_rec(ideal.plus(pivot));
  IntPoly colon = numerator_rec(ideal.colon(pivot));
  return int_poly_add(plus, int_poly_shift(colon, exponent));
}

}  // namespace

HilbertSummary summarize_hilbert(IntPoly numerator, std::size_t num_vars) {
  while (!numerator.empty() && numerator.back() == 0) numerator.pop_back();
  if (numerator.empty()) return {-1, LengthValue::finite(0)};
  std::size_t divisions = 0;
  while (divisions < num_vars && eval_at_one(numerator) == 0) {
    numerator = divide_one_minus_t(numerator);
    ++divisions;
  }
  int dim = static_cast<int>(num_vars - divisions);
  if (dim > 0) return {dim, LengthValue::infinite()};
  long long len = eval_at_one(numerator);
  if (len < 0) throw std::logic_error("negative length from Hilbert series");
  return {0, LengthValue::finite(static_cast<std::uint64_t>(len))};
}

MonomialIdeal::MonomialIdeal(std::size_t num_vars, std::vector<Monomial> generators) : num_vars_(num_vars) {
  for (const auto& g : generators)
    if (g.num_vars() != num_vars) throw std::invalid_argument("monomial ideal: generator length mismatch");
  gens_ = minimalize(std::move(generators));
}

bool MonomialIdeal::contains(const Monomial& m) const {
  return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
}

int MonomialIdeal::dimension() const {
  if (is_unit()) return -1;
  int best = 0;
  const std::uint32_t full = num_vars_ == 32 ? ~0u : ((1u << num_vars_) - 1);
  for (std::uint32_t mask = 0; mask <= full; ++mask) {
    int size = std::popcount(mask);
    if (size <= best) continue;
    bool independent = std::none_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return (g.support() & ~mask) == 0; });
    if (independent) best = size;
    if (mask == full) break;
  }
  return best;
}

LengthValue MonomialIdeal::colength() const {
  if (is_unit()) return LengthValue::finite(0);
  if (dimension() > 0) return LengthValue::infinite();
  int max_gen_degree = 0;
  for (const auto& g : gens_) max_gen_degree = std::max(max_gen_degree, g.degree());
  std::uint64_t total = 0;
  for (int d = 0;; ++d) {
    std::uint64_t in_degree = 0;
    for_each_monomial_of_degree(num_vars_, d, [&](const Monomial& m) {
      if (!contains(m)) ++in_degree;
    });
    total += in_degree;
    if (in_degree == 0 && d >= max_gen_degree) break;
  }
  return LengthValue::finite(total);
}

IntPoly MonomialIdeal::hilbert_numerator() const { return numerator_rec(*this); }

std::vector<std::uint32_t> MonomialIdeal::minimal_primes() const {
  if (is_unit()) return {};
  std::vector<std::uint32_t> masks;
  const std::uint32_t limit = 1u << num_vars_;
  std::vector<std::uint32_t> by_size;
  for (std::uint32_t m = 0; m < limit; ++m) by_size.push_back(m);
  std::stable_sort(by_size.begin(), by_size.end(),
                   [](std::uint32_t a, std::uint32_t b) { return std::popcount(a) < std::popcount(b); });
  for (std::uint32_t mask : by_size) {
    bool covers = std::all_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return (g.support() & mask) != 0; });
    if (!covers) continue;
    bool minimal = std::none_of(masks.begin(), masks.end(), [&](std::uint32_t f) { return (f & mask) == f; });
    if (minimal) masks.push_back(mask);
  }
  // Order by ascending variable-index lists.
  auto as_list = [&](std::uint32_t m) {
    std::vector<std::size_t> v;
    for (std::size_t i = 0; i < num_vars_; ++i)
      if (m & (1u << i)) v.push_back(i);
    return v;
  };
  std::sort(masks.begin(), masks.end(), [&](std::uint32_t a, std::uint32_t b) { return as_list(a) < as_list(b); });
  return masks;
}

MonomialIdeal MonomialIdeal::colon(const Monomial& m) const {
  std::vector<Monomial> out;
  out.reserve(gens_.size());
  for (const auto& g : gens_) out.push_back(g / Monomial::gcd(g, m));
  return MonomialIdeal(num_vars_, std::move(out));
}

MonomialIdeal MonomialIdeal::plus(const Monomial& m) const {
  auto out = gens_;
  out.push_back(m);
  return MonomialIdeal(num_vars_, std::move(out));
}

}  // namespace syz
