#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "syzkit/checks.hpp"

namespace syz {

struct FuzzConfig {
  std::uint64_t seed = 0;
  std::size_t cases = 0;
  int min_vars = 2;
  int max_vars = 3;
  int max_degree = 3;
  int steps = 0;  // 0: dim R + 3
  unsigned jobs = 1;
};

/// Throws std::invalid_argument unless 2 <= min_vars <= max_vars <= 4, max_degree >= 1 and steps >= 0.
void validate(const FuzzConfig& config);

/// The problem of case `index`, a function of (seed, index) only: a random
/// monomial ideal I with dim R > 0 and M = R/J with J a random artinian
/// monomial ideal.
ProblemSpec fuzz_problem(const FuzzConfig& config, std::size_t index);

struct FuzzCandidate {
  std::size_t case_index = 0;
  std::size_t syzygy_index = 0;  // some i > dim R + 1 with λ(Syz_i) finite and Syz_i ≠ 0
  bool depth_positive = false;
  bool squarefree = false;
  std::string problem;
};

struct FuzzCaseSummary {
  std::size_t case_index = 0;
  int ring_dim = 0;
  bool depth_positive = false;
  bool squarefree = false;
  std::vector<int> betti;
  std::vector<int> dims;  // dim Syz_1 .. Syz_steps
  /// Smallest l with dim Syz_i constant for l < i <= steps.  Only the
  /// computed window is seen, so this is a lower bound for the true value.
  std::size_t d_window = 0;
};

struct FuzzReport {
  FuzzConfig config;
  std::size_t cases_run = 0;
  std::vector<CheckOutcome> violations;
  std::vector<FuzzCandidate> counterexample_candidates;
  std::map<std::string, std::array<std::size_t, 3>> check_counts;  // pass, fail, skipped
  std::vector<FuzzCaseSummary> cases;
};

FuzzReport fuzz(const FuzzConfig& config);

}  // namespace syz
