#pragma once

#include <filesystem>
#include <string>

#include "syzkit/modules.hpp"

namespace syz {

struct ProblemSpec {
  QuotientRing ring;
  PresentedModule module;
  int steps = 1;
  std::string label;
};

/// Parses the line-oriented problem grammar:
///
///   field prime 32003        (or: field rational; default prime 32003)
///   ring x y
///   ideal x^2; x*y           (or: ideal 0; default 0)
///   module rows 1
///   [ y ]
///   steps 5                  (default dim R + 3)
///
/// '#' starts a comment.  Generator degrees of the module are inferred from
/// the matrix.  Throws ParseError, NotHomogeneous or UnitIdeal, each carrying
/// the line and column of the offending input.
ProblemSpec parse_problem(const std::string& text, const std::string& label = "problem");
ProblemSpec load_problem(const std::filesystem::path& path);

/// Text that parse_problem reads back to the same problem.
std::string to_problem_text(const ProblemSpec& spec);

/// Shifts making every nonzero entry (r, c) of degree src_c - shift_r, each
/// connected block normalized to minimum 0.  nullopt-like failure is reported
/// through the row/column of the first inconsistent entry.
struct ShiftInference {
  std::vector<int> row_shifts;
  std::vector<int> column_degrees;
  bool consistent = true;
  std::size_t bad_row = 0;
  std::size_t bad_column = 0;
};
ShiftInference infer_shifts(const std::vector<Column>& columns, std::size_t rows);

}  // namespace syz
