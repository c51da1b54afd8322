// One line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "syzkit/fuzz.hpp"
#include "syzkit/suite.hpp"
#include "test_support.hpp"

using namespace syz;

namespace {

struct Verdict {
  bool ok;
  std::string detail;
};

RingPtr ring_of(std::vector<std::string> names) { return make_ring(std::move(names)); }

QuotientRing quotient(const RingPtr& r, std::initializer_list<const char*> gens) {
  std::vector<Polynomial> g;
  for (const char* s : gens) g.push_back(parse_poly(s, r));
  return QuotientRing(Ideal(r, std::move(g)));
}

PresentedModule residue_field(const QuotientRing& q) { return cyclic_module(q, Ideal::maximal(q.ambient()).generators()); }

std::string seq(const std::vector<int>& v) {
  std::string out;
  for (int x : v) out += (out.empty() ? "" : " ") + std::to_string(x);
  return out;
}

long long binomial(int n, int k) {
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

Verdict finite_second_syzygy() {
  auto r = ring_of({"x", "y"});
  QuotientRing q = quotient(r, {"x^2", "x*y"});
  InvariantReport rep = compute_report(cyclic_module(q, {parse_poly("y", r)}), 3);
  const auto& s = rep.syzygies;
  bool ok = rep.betti == std::vector<int>{1, 1, 1, 2} && s.size() == 3 && s[0].length == LengthValue::infinite() &&
            s[1].length == LengthValue::finite(1) && s[2].length == LengthValue::infinite() && s[0].support_full &&
            !s[1].support_full && s[2].support_full;
  std::string lengths, support;
  for (const auto& x : s) {
    lengths += " " + x.length.to_string();
    support += std::string(" ") + (x.support_full ? "full" : "partial");
  }
  return {ok, "betti " + seq(rep.betti) + ", lengths" + lengths + ", support" + support};
}

Verdict periodic_node() {
  auto r = ring_of({"x", "y"});
  QuotientRing q = quotient(r, {"x*y"});
  InvariantReport rep = compute_report(cyclic_module(q, {parse_poly("x", r)}), 6);
  bool ok = rep.betti == std::vector<int>(7, 1);
  for (const auto& s : rep.syzygies) ok = ok && s.dim == 1 && !s.support_full;
  return {ok, "betti " + seq(rep.betti) + ", every dim 1, no full support"};
}

Verdict koszul() {
  std::string detail;
  bool ok = true;
  for (int n : {2, 3}) {
    std::vector<std::string> names{"x", "y", "z"};
    names.resize(static_cast<std::size_t>(n));
    QuotientRing q = QuotientRing::polynomial(ring_of(names));
    InvariantReport rep = compute_report(residue_field(q), n + 2);
    ok = ok && rep.terminated && rep.betti.size() == static_cast<std::size_t>(n + 1);
    for (int i = 0; i <= n && ok; ++i) ok = rep.betti[static_cast<std::size_t>(i)] == binomial(n, i);
    for (const auto& s : rep.syzygies)
      ok = ok && (static_cast<int>(s.index) <= n ? (!s.is_zero && s.dim == n) : s.is_zero);
    detail += (detail.empty() ? "" : "; ") + std::string("n=") + std::to_string(n) + ": betti " + seq(rep.betti);
  }
  return {ok, detail};
}

Verdict residue_field_support() {
  auto r = ring_of({"x", "y"});
  bool ok = true;
  std::string detail;
  for (auto gens : {std::initializer_list<const char*>{"x^2", "x*y"}, std::initializer_list<const char*>{"x*y"},
                    std::initializer_list<const char*>{"x^3", "x^2*y", "x*y^2"}}) {
    QuotientRing q = quotient(r, gens);
    InvariantReport rep = compute_report(residue_field(q), 5);
    for (const auto& s : rep.syzygies) ok = ok && s.support_full;
    detail += (detail.empty() ? "" : "; ") + std::string("betti ") + seq(rep.betti);
  }
  return {ok, detail + "; Syz_1..Syz_5 full each time"};
}

Verdict power_of_maximal() {
  auto r = ring_of({"x", "y"});
  QuotientRing q = quotient(r, {"x^3", "x^2*y", "x*y^2"});
  PresentedModule m = cyclic_module(q, {parse_poly("x^2", r), parse_poly("x*y", r), parse_poly("y^2", r)});
  FreeResolution res = resolve(m, 5);
  InvariantReport rep = compute_report(res, 5);
  bool ok = true;
  for (const auto& s : rep.syzygies) ok = ok && !s.length.is_finite() && s.support_full;
  H0Data h0 = h0_local_cohomology(q);
  LengthValue t = module_length(tor(res, cyclic_module(q, h0.saturation.groebner().elements), 1));
  ok = ok && t.is_finite() && t.value() > 0;
  return {ok, "Syz_1..Syz_5 infinite with full support; length Tor_1(M, R/H0) = " + t.to_string()};
}

Verdict h0_examples() {
  auto r = ring_of({"x", "y"});
  H0Data a = h0_local_cohomology(quotient(r, {"x^2", "x*y"}));
  H0Data b = h0_local_cohomology(quotient(r, {"x*y"}));
  bool ok = a.length == LengthValue::finite(1) && a.killed_by_m && !a.is_zero && b.is_zero &&
            !depth_is_positive(quotient(r, {"x^2", "x*y"})) && depth_is_positive(quotient(r, {"x*y"}));
  return {ok, "(x^2,xy): length " + a.length.to_string() + ", killed by m; (xy): zero"};
}

struct Corpus {
  std::vector<Analysis> analyses;
  FuzzReport fuzz_report;
  std::size_t fuzz_cases = 0;
};

const FuzzConfig kPinned{20260415, 200, 2, 4, 3, 0, 1};

const Corpus& corpus() {
  static const Corpus c = [] {
    Corpus out;
    for (const auto& sc : paper_cases()) out.analyses.push_back(analyze(suite_problem(sc)));
    for (std::size_t i = 0; i < kPinned.cases; ++i) out.analyses.push_back(analyze(fuzz_problem(kPinned, i)));
    out.fuzz_report = fuzz(kPinned);
    return out;
  }();
  return c;
}

Verdict sweep(const std::function<CheckOutcome(const Analysis&)>& check) {
  std::size_t pass = 0, fail = 0, skip = 0;
  std::string first;
  for (const auto& a : corpus().analyses) {
    CheckOutcome o = check(a);
    if (o.status == CheckStatus::pass) ++pass;
    if (o.status == CheckStatus::skipped) ++skip;
    if (o.status == CheckStatus::fail) {
      if (first.empty()) first = "; first failure " + a.spec.label + ": " + o.details;
      ++fail;
    }
  }
  std::ostringstream out;
  out << pass << " applicable instances agree, " << skip << " outside the hypotheses, " << fail << " violations" << first;
  return {fail == 0 && pass > 0, out.str()};
}

Verdict oracles() {
  std::mt19937_64 rng(909);
  std::size_t mismatches = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 1 + rng() % 3;
    std::vector<std::string> names{"x", "y", "z"};
    names.resize(n);
    auto r = ring_of(names);
    std::vector<Monomial> gens;
    for (std::size_t v = 0; v < n; ++v) gens.push_back(Monomial::variable(n, v, 1 + static_cast<int>(rng() % 3)));
    for (int k = 0; k < static_cast<int>(rng() % 3); ++k) {
      Monomial m = testing::random_monomial(rng, n, 3);
      if (!m.is_one() && m.degree() <= 3) gens.push_back(m);
    }
    std::vector<Polynomial> polys;
    for (const auto& g : gens) polys.push_back(Polynomial::monomial(r, g));
    Ideal ideal(r, polys);
    LengthValue len = vector_space_length(ideal);
    if (!len.is_finite() || len.value() != oracle::brute_colength(gens, n)) ++mismatches;

    // A two-generator module over a random monomial quotient, of finite length.
    std::vector<Polynomial> ring_gens;
    if (rng() % 2) ring_gens.push_back(polys.back());
    QuotientRing q{Ideal(r, ring_gens)};
    std::vector<Column> rels;
    for (std::size_t v = 0; v < n; ++v) {
      int t = 1 + static_cast<int>(rng() % 3);
      rels.push_back({Polynomial::monomial(r, Monomial::variable(n, v, t + 1)), Polynomial(r)});
      rels.push_back({Polynomial(r), Polynomial::monomial(r, Monomial::variable(n, v, t))});
    }
    rels.push_back({testing::random_form(rng, r, 1, 2), testing::random_form(rng, r, 0, 1)});
    PresentedModule m{q, map_from_columns(FreeModule{{0, 1}}, rels)};
    auto expected = oracle::module_length(m, 24);
    if (!expected || module_length(m) != LengthValue::finite(*expected)) ++mismatches;
  }
  auto r = ring_of({"x", "y", "z"});
  std::size_t kernel_mismatches = 0;
  for (int trial = 0; trial < 25; ++trial) {
    QuotientRing q = testing::random_quotient(rng, r);
    ModuleMap a = testing::random_map(rng, q, 1 + rng() % 2, 1 + rng() % 3);
    ModuleMap k = syzygy_generators(a, q);
    for (int d = 0; d <= 6; ++d)
      if (oracle::span_piece(k.columns, k.source.shifts, a.source.shifts, q, d) != oracle::kernel_piece(a, q, d))
        ++kernel_mismatches;
  }
  return {mismatches == 0 && kernel_mismatches == 0,
          std::to_string(mismatches) + " length discrepancies on 50 instances, " + std::to_string(kernel_mismatches) +
              " kernel discrepancies on 25 maps through degree 6"};
}

Verdict question_probe() {
  const FuzzReport& rep = corpus().fuzz_report;
  std::size_t guarded = 0, other = 0;
  for (const auto& k : rep.counterexample_candidates) (k.depth_positive || k.squarefree ? guarded : other)++;
  std::size_t in_class = 0;
  for (const auto& c : rep.cases) in_class += c.depth_positive || c.squarefree;
  return {guarded == 0 && rep.violations.empty(),
          "seed " + std::to_string(rep.config.seed) + ", " + std::to_string(rep.cases_run) + " cases (" +
              std::to_string(in_class) + " with positive depth or squarefree ideal): " + std::to_string(guarded) +
              " candidates in that class, " + std::to_string(other) + " elsewhere, " +
              std::to_string(rep.violations.size()) + " property violations"};
}

}  // namespace

int main() {
  const auto start = std::chrono::steady_clock::now();
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
      {"finite second syzygy over k[x,y]/(x^2,xy)", finite_second_syzygy},
      {"periodic syzygies over k[x,y]/(xy)", periodic_node},
      {"residue field over a polynomial ring", koszul},
      {"residue field syzygies have full support", residue_field_support},
      {"R/m^2 over k[x,y]/x(x,y)^2", power_of_maximal},
      {"H0 and depth", h0_examples},
      {"four-way equivalence on corpus and fuzz cases", [] { return sweep([](const Analysis& a) { return check_equivalence(a); }); }},
      {"new intersection on corpus and fuzz cases", [] { return sweep([](const Analysis& a) { return check_new_intersection(a); }); }},
      {"brute-force oracles", oracles},
      {"finite-length probe beyond dim R + 1", question_probe},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Verdict v = criteria[i].second();
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("criterion %2zu %s  %s: %s [%.2fs]\n", i + 1, v.ok ? "PASS" : "FAIL", criteria[i].first.c_str(),
                v.detail.c_str(), secs);
    failures += v.ok ? 0 : 1;
  }
  const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%d of %zu criteria passed in %.2fs\n", static_cast<int>(criteria.size()) - failures, criteria.size(), total);
  return failures == 0 && total < 60.0 ? 0 : 1;
}
