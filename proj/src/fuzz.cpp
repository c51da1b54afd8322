#include "syzkit/fuzz.hpp"

#include <atomic>
#include <random>
#include <stdexcept>
#include <thread>

namespace syz {

namespace {

std::vector<Monomial> monomials_up_to(std::size_t n, int max_degree) {
  std::vector<Monomial> out;
  for (int d = 1; d <= max_degree; ++d) for_each_monomial_of_degree(n, d, [&](const Monomial& m) { out.push_back(m); });
  return out;
}

const char* const kNames[] = {"x", "y", "z", "w"};

struct CaseResult {
  FuzzCaseSummary summary;
  std::vector<CheckOutcome> outcomes;
  std::vector<FuzzCandidate> candidates;
};

CaseResult run_case(const FuzzConfig& config, std::size_t index) {
  const ProblemSpec spec = fuzz_problem(config, index);
  const Analysis a = analyze(spec);
  CaseResult out;
  auto& s = out.summary;
  s.case_index = index;
  s.ring_dim = a.report.ring_dim;
  s.depth_positive = a.report.depth_positive;
  s.squarefree = is_squarefree_monomial(spec.ring);
  s.betti = a.report.betti;
  for (const auto& z : a.report.syzygies) s.dims.push_back(z.dim);
  for (std::size_t i = 1; i < s.dims.size(); ++i)
    if (s.dims[i] != s.dims[i - 1]) s.d_window = i;

  const std::string echo = "seed " + std::to_string(config.seed) + " case " + std::to_string(index) + "\n";
  for (auto& o : run_property_checks(a)) {
    if (o.status == CheckStatus::fail) o.reproducer = echo + o.reproducer;
    out.outcomes.push_back(std::move(o));
  }
  for (const auto& z : a.report.syzygies) {
    if (z.is_zero || !z.length.is_finite() || static_cast<int>(z.index) <= a.report.ring_dim + 1) continue;
    out.candidates.push_back(FuzzCandidate{index, z.index, s.depth_positive, s.squarefree, echo + to_problem_text(spec)});
  }
  return out;
}

}  // namespace

void validate(const FuzzConfig& config) {
  if (config.min_vars < 2 || config.max_vars > 4 || config.min_vars > config.max_vars)
    throw std::invalid_argument("variable range must lie within 2..4");
  if (config.max_degree < 1) throw std::invalid_argument("maximum degree must be at least 1");
  if (config.steps < 0) throw std::invalid_argument("steps must be nonnegative");
}

ProblemSpec fuzz_problem(const FuzzConfig& config, std::size_t index) {
  validate(config);
  std::seed_seq seq{static_cast<std::uint32_t>(config.seed), static_cast<std::uint32_t>(config.seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  std::mt19937_64 rng(seq);
  auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };

  const auto n = static_cast<std::size_t>(uniform(config.min_vars, config.max_vars));
  RingPtr ring = make_ring(std::vector<std::string>(kNames, kNames + n));
  const auto pool = monomials_up_to(n, config.max_degree);
  auto pick = [&] { return pool[static_cast<std::size_t>(uniform(0, static_cast<int>(pool.size()) - 1))]; };

  // Rejection sampling: monomials of positive degree always give a proper
  // ideal; a zero-dimensional ring makes every property vacuous, so it is redrawn.
  std::vector<Polynomial> ideal;
  for (;;) {
    ideal.clear();
    const int count = uniform(1, 4);
    for (int k = 0; k < count; ++k) ideal.push_back(Polynomial::monomial(ring, pick()));
    if (krull_dim(Ideal(ring, ideal)) > 0) break;
  }
  QuotientRing r{Ideal(ring, ideal)};

  std::vector<Polynomial> j;
  const int extra = uniform(0, 3);
  for (int k = 0; k < extra; ++k) j.push_back(Polynomial::monomial(ring, pick()));
  for (std::size_t v = 0; v < n; ++v) {
    j.push_back(Polynomial::monomial(ring, Monomial::variable(n, v, uniform(1, config.max_degree + 1))));
  }
  PresentedModule module = cyclic_module(r, j);
  const int steps = config.steps > 0 ? config.steps : r.dim() + 3;
  return ProblemSpec{r, std::move(module), steps, "fuzz-" + std::to_string(config.seed) + "-" + std::to_string(index)};
}

FuzzReport fuzz(const FuzzConfig& config) {
  validate(config);
  std::vector<CaseResult> results(config.cases);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < config.cases; i = next++) results[i] = run_case(config, i);
  };
  const unsigned jobs = std::max(1u, std::min<unsigned>(config.jobs, static_cast<unsigned>(config.cases)));
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
  }

  FuzzReport report;
  report.config = config;
  report.cases_run = config.cases;
  for (auto& r : results) {
    for (auto& o : r.outcomes) {
      auto& counts = report.check_counts[o.check_id];
      ++counts[static_cast<std::size_t>(o.status)];
      if (o.status == CheckStatus::fail) report.violations.push_back(std::move(o));
    }
    for (auto& c : r.candidates) report.counterexample_candidates.push_back(std::move(c));
    report.cases.push_back(std::move(r.summary));
  }
  return report;
}

}  // namespace syz
