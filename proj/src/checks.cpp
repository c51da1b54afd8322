#include "syzkit/checks.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace syz {

namespace {

CheckOutcome passed(std::string id, std::string details) {
  return CheckOutcome{std::move(id), CheckStatus::pass, std::move(details), {}};
}

CheckOutcome skipped(std::string id, std::string reason) {
  return CheckOutcome{std::move(id), CheckStatus::skipped, std::move(reason), {}};
}

CheckOutcome failed(std::string id, std::string details, const Analysis& a) {
  return CheckOutcome{std::move(id), CheckStatus::fail, std::move(details), to_problem_text(a.spec)};
}

// Finite projective dimension p satisfies p <= depth R <= dim R, so a
// resolution still running past step dim R never terminates.
bool infinite_pd(const Analysis& a) { return !a.report.terminated && static_cast<int>(a.steps()) > a.report.ring_dim; }

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : "; ") + p;
  return out;
}

std::string syz_name(std::size_t i) { return "Syz_" + std::to_string(i); }

// Full support for every computed Syz_i, infinite length included.
CheckOutcome all_full(const std::string& id, const Analysis& a) {
  std::vector<std::string> bad;
  for (const auto& s : a.report.syzygies) {
    if (s.is_zero) continue;
    if (!s.support_full || s.length.is_finite())
      bad.push_back(syz_name(s.index) + ": length " + s.length.to_string() + ", support " +
                    (s.support_full ? "full" : "partial"));
  }
  if (!bad.empty()) return failed(id, join(bad), a);
  return passed(id, "Syz_1.." + std::to_string(a.steps()) + " of infinite length with full support");
}

}  // namespace

int Analysis::betti(std::size_t i) const {
  if (i < report.betti.size()) return report.betti[i];
  if (report.terminated) return 0;
  throw std::out_of_range("Betti number beyond the computed resolution");
}

Analysis analyze(const ProblemSpec& spec) {
  FreeResolution res = resolve(spec.module, spec.steps);
  H0Data h0 = h0_local_cohomology(spec.ring);
  InvariantReport report = compute_report(res, spec.steps, h0);
  HilbertSummary m = summarize_hilbert(module_hilbert_numerator(spec.module), spec.ring.num_vars());
  return Analysis{spec, std::move(res), std::move(report), std::move(h0), m.length, m.dim < 0};
}

InvariantReport invariant_report(const ProblemSpec& spec) { return compute_report(spec.module, spec.steps); }

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::skipped: return "skipped";
  }
  return "?";
}

bool is_squarefree_monomial(const QuotientRing& ring) {
  for (const auto& g : ring.gb().elements) {
    if (!g.is_monomial()) return false;
    const Monomial& m = g.lead_monomial();
    for (std::size_t v = 0; v < m.num_vars(); ++v)
      if (m[v] > 1) return false;
  }
  return true;
}

bool is_residue_field(const PresentedModule& m) {
  if (m.num_generators() != 1) return false;
  LengthValue len = module_length(m);
  return len.is_finite() && len.value() == 1;
}

CheckOutcome check_equivalence(const Analysis& a) {
  const std::string id = "four-way-equivalence";
  if (a.module_is_zero) return skipped(id, "module is zero");
  if (!a.finite_length_module()) return skipped(id, "module does not have finite length");
  if (a.report.ring_dim == 0) return skipped(id, "ring has dimension 0");
  BettiTable table = betti_table(a.resolution);
  std::vector<std::string> bad;
  std::size_t checked = 0;
  for (std::size_t r = 0; r < a.steps(); ++r) {
    const auto& s = a.syzygy(r + 1);
    if (s.is_zero) continue;
    const long long alt = alternating_betti_sum(table, r);
    const bool c1 = !s.length.is_finite();
    const bool c2 = alt > 0;
    const bool c3 = s.support_full;
    const bool c4 = s.dim == a.report.ring_dim;
    ++checked;
    if (alt < 0) bad.push_back("r=" + std::to_string(r) + ": negative alternating sum " + std::to_string(alt));
    if (c1 != c2 || c2 != c3 || c3 != c4) {
      std::ostringstream out;
      out << "r=" << r << ": length " << s.length.to_string() << ", alternating sum " << alt << ", support "
          << (c3 ? "full" : "partial") << ", dim " << s.dim;
      bad.push_back(out.str());
    }
  }
  if (!bad.empty()) return failed(id, join(bad), a);
  return passed(id, "conditions agree at " + std::to_string(checked) + " indices");
}

CheckOutcome check_vanishing(const Analysis& a) {
  const std::string id = "tor-vanishing";
  if (!a.finite_length_module()) return skipped(id, "module does not have finite length");
  std::vector<std::string> notes;
  std::vector<std::string> bad;
  PresentedModule quotient = cyclic_module(a.spec.ring, a.h0.saturation.groebner().elements);
  if (!a.h0.is_zero && a.steps() >= 2) {
    LengthValue t1 = module_length(tor(a.resolution, quotient, 1));
    notes.push_back("length Tor_1(M, R/H0) = " + t1.to_string());
  }
  std::size_t applied = 0;
  for (std::size_t i = 1; i + 1 <= a.steps(); ++i) {
    if (!a.syzygy(i + 1).length.is_finite()) continue;
    ++applied;
    if (a.h0.is_zero) continue;  // R/H⁰ = R
    LengthValue t = module_length(tor(a.resolution, quotient, static_cast<int>(i)));
    if (!(t.is_finite() && t.value() == 0))
      bad.push_back("Syz_" + std::to_string(i + 1) + " has finite length but Tor_" + std::to_string(i) +
                    "(M, R/H0) has length " + t.to_string());
  }
  if (!bad.empty()) return failed(id, join(bad), a);
  notes.insert(notes.begin(), applied == 0 ? "no index applies" : std::to_string(applied) + " indices apply");
  return passed(id, join(notes));
}

CheckOutcome check_descending_length(const Analysis& a) {
  const std::string id = "descending-length";
  if (!a.finite_length_module()) return skipped(id, "module does not have finite length");
  if (a.report.ring_dim == 0) return skipped(id, "ring has dimension 0");
  if (!infinite_pd(a)) return skipped(id, "projective dimension is finite");
  std::vector<std::string> bad;
  std::size_t applied = 0;
  for (std::size_t i = 1; i + 1 <= a.steps(); ++i) {
    if (!a.syzygy(i + 1).length.is_finite() || a.betti(i) < a.betti(i - 1)) continue;
    ++applied;
    const bool below_finite = i == 1 ? a.module_length.is_finite() : a.syzygy(i - 1).length.is_finite();
    if (!below_finite)
      bad.push_back("Syz_" + std::to_string(i + 1) + " finite with beta_" + std::to_string(i) + " >= beta_" +
                    std::to_string(i - 1) + " but Syz_" + std::to_string(i - 1) + " infinite");
  }
  if (!bad.empty()) return failed(id, join(bad), a);
  return passed(id, applied == 0 ? "no index applies" : std::to_string(applied) + " indices apply");
}

CheckOutcome check_new_intersection(const Analysis& a) {
  const std::string id = "new-intersection";
  if (!a.finite_length_module()) return skipped(id, "module does not have finite length");
  const std::size_t top = std::min<std::size_t>(static_cast<std::size_t>(a.report.ring_dim), a.steps());
  if (top == 0) return skipped(id, "no index between 1 and dim R is computed");
  std::vector<std::string> bad;
  for (std::size_t i = 1; i <= top; ++i) {
    const auto& s = a.syzygy(i);
    if (s.is_zero) continue;
    if (s.length.is_finite() || !s.support_full)
      bad.push_back(syz_name(i) + ": length " + s.length.to_string() + ", support " + (s.support_full ? "full" : "partial"));
  }
  if (!bad.empty()) return failed(id, join(bad), a);
  return passed(id, "Syz_1..Syz_" + std::to_string(top) + " checked");
}

CheckOutcome check_positive_depth(const Analysis& a) {
  const std::string id = "positive-depth-support";
  if (!a.report.depth_positive) return skipped(id, "ring has depth zero");
  if (!a.finite_length_module()) return skipped(id, "module does not have finite length");
  if (!infinite_pd(a)) return skipped(id, "projective dimension is finite");
  return all_full(id, a);
}

CheckOutcome check_reduced_ring(const Analysis& a) {
  const std::string id = "reduced-ring-support";
  if (!is_squarefree_monomial(a.spec.ring)) return skipped(id, "defining ideal is not squarefree monomial");
  if (!a.finite_length_module()) return skipped(id, "module does not have finite length");
  if (!infinite_pd(a)) return skipped(id, "projective dimension is finite");
  return all_full(id, a);
}

CheckOutcome check_betti_support(const Analysis& a) {
  const std::string id = "betti-growth-support";
  std::vector<std::string> bad;
  std::size_t applied = 0;
  auto full_at = [&](std::size_t j) -> bool {
    if (j == 0) return !a.module_is_zero && support_is_full(a.spec.module);
    const auto& s = a.syzygy(j);
    return !s.is_zero && s.support_full;
  };
  const std::size_t last = a.report.terminated ? a.steps() + 1 : a.report.betti.size() - 1;
  for (std::size_t i = 1; i <= last; ++i) {
    const int bi = a.betti(i), prev = a.betti(i - 1);
    std::optional<std::size_t> target;
    if (bi > prev && i + 1 <= a.steps()) target = i + 1;
    if (bi < prev && i - 1 <= a.steps()) target = i - 1;
    if (!target) continue;
    ++applied;
    if (!full_at(*target))
      bad.push_back("beta_" + std::to_string(i) + " = " + std::to_string(bi) + ", beta_" + std::to_string(i - 1) + " = " +
                    std::to_string(prev) + " but " + syz_name(*target) + " lacks full support");
  }
  if (!bad.empty()) return failed(id, join(bad), a);
  return passed(id, applied == 0 ? "no index applies" : std::to_string(applied) + " indices apply");
}

CheckOutcome check_odd_support(const Analysis& a) {
  const std::string id = "odd-syzygy-support";
  if (!a.finite_length_module()) return skipped(id, "module does not have finite length");
  if (a.report.ring_dim == 0) return skipped(id, "ring has dimension 0");
  if (a.report.terminated) return skipped(id, "resolution terminates, so the Betti numbers decrease");
  // Syz_j needs β_1 <= ... <= β_{j-1}.
  std::vector<std::string> bad;
  std::size_t applied = 0;
  for (std::size_t j = 1; j <= a.steps(); j += 2) {
    bool monotone = true;
    for (std::size_t i = 1; i + 1 <= j - 1; ++i) monotone = monotone && a.betti(i) <= a.betti(i + 1);
    if (!monotone) break;
    ++applied;
    const auto& s = a.syzygy(j);
    if (s.is_zero || !s.support_full) bad.push_back(syz_name(j) + " lacks full support");
  }
  if (!bad.empty()) return failed(id, join(bad), a);
  return passed(id, std::to_string(applied) + " odd indices apply");
}

CheckOutcome check_one_dimensional(const Analysis& a) {
  const std::string id = "one-dimensional-odd-support";
  if (a.report.ring_dim != 1) return skipped(id, "ring dimension is not 1");
  if (!a.finite_length_module()) return skipped(id, "module does not have finite length");
  if (!infinite_pd(a)) return skipped(id, "projective dimension is finite");
  std::vector<std::string> bad;
  for (std::size_t j : {1, 3}) {
    if (j > a.steps()) continue;
    if (!a.syzygy(j).support_full) bad.push_back(syz_name(j) + " lacks full support");
  }
  if (!bad.empty()) return failed(id, join(bad), a);
  return passed(id, "Syz_1 and Syz_3 checked");
}

CheckOutcome check_residue_field(const Analysis& a) {
  const std::string id = "residue-field-support";
  if (a.report.ring_dim == 0) return skipped(id, "ring has dimension 0");
  if (!is_residue_field(a.spec.module)) return skipped(id, "module is not the residue field");
  return all_full(id, a);
}

CheckOutcome check_killed_h0(const Analysis& a) {
  const std::string id = "killed-h0-support";
  if (!a.h0.killed_by_m) return skipped(id, "H0 is not killed by the maximal ideal");
  if (a.report.ring_dim <= 1) return skipped(id, "ring dimension is at most 1");
  if (!a.finite_length_module()) return skipped(id, "module does not have finite length");
  if (!infinite_pd(a)) return skipped(id, "projective dimension is finite");
  return all_full(id, a);
}

CheckOutcome check_unmixed(const Analysis& a) {
  const std::string id = "unmixed-dimension";
  if (!is_squarefree_monomial(a.spec.ring)) return skipped(id, "defining ideal is not squarefree monomial");
  const auto primes = a.spec.ring.lead().minimal_primes();
  const bool equidim = std::all_of(primes.begin(), primes.end(),
                                   [&](std::uint32_t p) { return std::popcount(p) == std::popcount(primes.front()); });
  if (!equidim) return skipped(id, "ring is not equidimensional");
  if (!infinite_pd(a)) return skipped(id, "projective dimension is finite");
  std::vector<std::string> bad;
  for (const auto& s : a.report.syzygies) {
    if (s.dim != a.report.ring_dim) bad.push_back(syz_name(s.index) + " has dimension " + std::to_string(s.dim));
    if (a.finite_length_module() && !s.support_full) bad.push_back(syz_name(s.index) + " lacks full support");
  }
  if (!bad.empty()) return failed(id, join(bad), a);
  return passed(id, "Syz_1..Syz_" + std::to_string(a.steps()) + " checked");
}

CheckOutcome check_finite_second_syzygy(const Analysis& a) {
  const std::string id = "finite-second-syzygy";
  if (!a.finite_length_module()) return skipped(id, "module does not have finite length");
  if (a.steps() < 2) return skipped(id, "Syz_2 not computed");
  const auto& s = a.syzygy(2);
  if (s.is_zero || !s.length.is_finite()) return passed(id, "Syz_2 is zero or of infinite length");
  std::vector<std::string> bad;
  if (a.report.ring_dim != 1) bad.push_back("ring dimension " + std::to_string(a.report.ring_dim));
  // Over a ring of positive dimension H⁰ consists of nilpotents; a monomial
  // ideal is radical iff its minimal generators are squarefree.
  bool nilpotent = !a.h0.is_zero;
  if (!nilpotent) {
    const auto& gens = a.spec.ring.gb().elements;
    const bool monomial = std::all_of(gens.begin(), gens.end(), [](const Polynomial& g) { return g.is_monomial(); });
    if (!monomial) return skipped(id, "Syz_2 has finite length; nilpotents undecided for a non-monomial ideal");
    nilpotent = !is_squarefree_monomial(a.spec.ring);
  }
  if (!nilpotent) bad.push_back("ring is reduced");
  if (!bad.empty()) return failed(id, "Syz_2 has finite length " + s.length.to_string() + " but " + join(bad), a);
  return passed(id, "Syz_2 has finite length " + s.length.to_string() + " over a one-dimensional ring with nilpotents");
}

CheckOutcome check_equivalence(const ProblemSpec& spec) { return check_equivalence(analyze(spec)); }
CheckOutcome check_vanishing(const ProblemSpec& spec) { return check_vanishing(analyze(spec)); }

std::vector<CheckOutcome> run_property_checks(const Analysis& a) {
  return {check_equivalence(a),      check_vanishing(a),       check_descending_length(a),
          check_new_intersection(a), check_positive_depth(a),  check_reduced_ring(a),
          check_betti_support(a),    check_odd_support(a),     check_one_dimensional(a),
          check_residue_field(a),    check_killed_h0(a),       check_unmixed(a),
          check_finite_second_syzygy(a)};
}

}  // namespace syz
