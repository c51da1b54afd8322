#pragma once

#include <string>
#include <vector>

#include "syzkit/invariants.hpp"
#include "syzkit/problem.hpp"

namespace syz {

/// Everything the property checks read: the resolution to spec.steps, the
/// per-syzygy report, H⁰ of the ring and the length of M itself.
struct Analysis {
  ProblemSpec spec;
  FreeResolution resolution;
  InvariantReport report;
  H0Data h0;
  LengthValue module_length;
  bool module_is_zero = false;

  bool finite_length_module() const { return !module_is_zero && module_length.is_finite(); }
  /// β_i, reading zero past a terminated resolution.
  int betti(std::size_t i) const;
  /// Syz_i for 1 <= i <= spec.steps.
  const SyzygyInvariants& syzygy(std::size_t i) const { return report.syzygies.at(i - 1); }
  std::size_t steps() const { return report.syzygies.size(); }
};

Analysis analyze(const ProblemSpec& spec);
InvariantReport invariant_report(const ProblemSpec& spec);

enum class CheckStatus { pass, fail, skipped };
std::string to_string(CheckStatus s);

/// One property check on one input.  A skipped outcome carries the reason in
/// details; a failing one carries the input in reproducer.
struct CheckOutcome {
  std::string check_id;
  CheckStatus status = CheckStatus::pass;
  std::string details;
  std::string reproducer;
};

/// The four conditions λ(Syz_{r+1}) = ∞, Σ(-1)^{r-i}β_i > 0, full support and
/// dim Syz_{r+1} = dim R agree at every computed r with Syz_{r+1} ≠ 0.  Needs a
/// nonzero finite-length M and dim R > 0.
CheckOutcome check_equivalence(const Analysis& a);
CheckOutcome check_equivalence(const ProblemSpec& spec);

/// λ(Syz_{i+1}) < ∞ with i > 0 forces Tor_i(M, R/H⁰) = 0, for finite-length M.
/// The details also give the length of Tor_1(M, R/H⁰) whenever H⁰ ≠ 0.
CheckOutcome check_vanishing(const Analysis& a);
CheckOutcome check_vanishing(const ProblemSpec& spec);

/// Finite-length M of infinite projective dimension, dim R > 0: if
/// λ(Syz_{i+1}) < ∞ and β_i ≥ β_{i-1} for some i > 0, then λ(Syz_{i-1}) < ∞.
CheckOutcome check_descending_length(const Analysis& a);
/// Finite-length M: Syz_i has infinite length and full support for 1 <= i <= dim R when nonzero.
CheckOutcome check_new_intersection(const Analysis& a);
/// Positive depth, finite-length M of infinite projective dimension: every Syz_i has full support.
CheckOutcome check_positive_depth(const Analysis& a);
/// Reduced ring (squarefree monomial ideal), finite-length M of infinite
/// projective dimension: every Syz_i has full support.
CheckOutcome check_reduced_ring(const Analysis& a);
/// β_i > β_{i-1} forces full support of Syz_{i+1}; β_i < β_{i-1} forces it for Syz_{i-1}.
CheckOutcome check_betti_support(const Analysis& a);
/// Finite-length M whose Betti numbers do not decrease from β_1 on: the odd
/// syzygies have full support.  Only the computed window is examined.
CheckOutcome check_odd_support(const Analysis& a);
/// dim R = 1, finite-length M of infinite projective dimension: Syz_1 and Syz_3 have full support.
CheckOutcome check_one_dimensional(const Analysis& a);
/// M = k, dim R > 0: every nonzero Syz_i has full support.
CheckOutcome check_residue_field(const Analysis& a);
/// 𝔪H⁰ = 0, dim R > 1, finite-length M of infinite projective dimension: every Syz_i has full support.
CheckOutcome check_killed_h0(const Analysis& a);
/// Squarefree and equidimensional monomial ideal (so Ass R = assh R), M of
/// infinite projective dimension: dim Syz_i = dim R, with full support when M has finite length.
CheckOutcome check_unmixed(const Analysis& a);
/// A finite-length M with Syz_2 nonzero of finite length only occurs over a
/// one-dimensional ring with a nonzero nilpotent.
CheckOutcome check_finite_second_syzygy(const Analysis& a);

/// Every check above, in a fixed order.
std::vector<CheckOutcome> run_property_checks(const Analysis& a);

/// True iff the defining ideal is generated by squarefree monomials.
bool is_squarefree_monomial(const QuotientRing& ring);
/// M ≅ R/𝔪 with one generator.
bool is_residue_field(const PresentedModule& m);

}  // namespace syz
