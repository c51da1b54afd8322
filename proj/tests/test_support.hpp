#pragma once

#include <random>
#include <string>
#include <vector>

#include "syzkit/modules.hpp"

namespace syz::testing {

inline Polynomial P(const RingPtr& ring, const std::string& text) { return parse_poly(text, ring); }

inline Monomial random_monomial(std::mt19937_64& rng, std::size_t n, int max_exp) {
  Monomial m(n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, static_cast<int>(rng() % (max_exp + 1)));
  return m;
}

inline Polynomial random_poly(std::mt19937_64& rng, const RingPtr& ring, int max_terms, int max_exp) {
  std::vector<Term> terms;
  int count = static_cast<int>(rng() % (max_terms + 1));
  for (int t = 0; t < count; ++t) {
    long long c = static_cast<long long>(rng() % 19) - 9;
    terms.push_back(Term{random_monomial(rng, ring->num_vars(), max_exp), ring->field().from_int(c)});
  }
  return Polynomial::from_terms(ring, std::move(terms));
}

/// Random homogeneous polynomial of degree d.
inline Polynomial random_form(std::mt19937_64& rng, const RingPtr& ring, int d, int max_terms) {
  std::vector<Term> terms;
  const std::size_t n = ring->num_vars();
  int count = 1 + static_cast<int>(rng() % max_terms);
  for (int t = 0; t < count; ++t) {
    Monomial m(n);
    for (int k = 0; k < d; ++k) {
      std::size_t v = rng() % n;
      m.set(v, m[v] + 1);
    }
    long long c = 1 + static_cast<long long>(rng() % 7);
    terms.push_back(Term{m, ring->field().from_int(rng() % 2 ? c : -c)});
  }
  return Polynomial::from_terms(ring, std::move(terms));
}

/// Random homogeneous r x m map over q: row shifts 0, column degrees 1..2.
inline ModuleMap random_map(std::mt19937_64& rng, const QuotientRing& q, std::size_t rows, std::size_t cols) {
  const auto& r = q.ambient();
  std::vector<Column> out;
  for (std::size_t j = 0; j < cols; ++j) {
    int d = 1 + static_cast<int>(rng() % 2);
    Column c;
    for (std::size_t k = 0; k < rows; ++k) c.push_back(rng() % 3 == 0 ? Polynomial(r) : random_form(rng, r, d, 2));
    if (is_zero_column(c)) c[0] = random_form(rng, r, d, 1);
    out.push_back(std::move(c));
  }
  return map_from_columns(FreeModule(std::vector<int>(rows, 0)), std::move(out));
}

/// Up to two random quadrics.
inline QuotientRing random_quotient(std::mt19937_64& rng, const RingPtr& r) {
  std::vector<Polynomial> gens;
  for (int k = 0; k < static_cast<int>(rng() % 3); ++k) gens.push_back(random_form(rng, r, 2, 2));
  return QuotientRing(Ideal(r, gens));
}

}  // namespace syz::testing
