#pragma once

#include <optional>
#include <string>
#include <vector>

#include "syzkit/checks.hpp"

namespace syz {

/// A curated example with its pinned expectations.  Sequences are prefixes:
/// only the indices inside both the expectation and the computed window are
/// compared, so raising the step count keeps every case meaningful.
struct SuiteCase {
  std::string label;
  std::string claim;  // the statement the case exercises
  std::string variables;
  std::string ideal;
  std::vector<std::string> rows;
  int steps = 0;  // 0: dim R + 3

  std::vector<int> betti;                            // β_0, β_1, ...
  std::vector<std::optional<std::uint64_t>> lengths;  // λ(Syz_1), ...; nullopt is infinite
  std::vector<bool> support;                          // Syz_1, ...
  std::optional<std::size_t> full_support_from;      // every Syz_i with i >= this has full support
  std::optional<bool> support_never_full;
  std::optional<int> all_dims;                        // dim Syz_i for every nonzero Syz_i
  std::optional<std::size_t> zero_from;               // Syz_i = 0 for i >= this
  std::optional<std::uint64_t> h0_length;
  std::optional<bool> h0_killed_by_m;
  bool tor1_witness = false;                          // Tor_1(M, R/H⁰) ≠ 0
};

struct SuiteOptions {
  std::optional<int> steps;
  bool rational = false;
};

const std::vector<SuiteCase>& paper_cases();
std::string suite_problem_text(const SuiteCase& c, const SuiteOptions& options = {});
ProblemSpec suite_problem(const SuiteCase& c, const SuiteOptions& options = {});

/// Expectation outcomes followed by every property check, for one case.
std::vector<CheckOutcome> run_suite_case(const SuiteCase& c, const SuiteOptions& options = {});
std::vector<CheckOutcome> run_paper_suite(const SuiteOptions& options = {});

}  // namespace syz
