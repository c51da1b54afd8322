#pragma once

#include <string>
#include <vector>

#include "syzkit/fuzz.hpp"

namespace syz {

enum class ReportFormat { text, structured };

/// Byte-deterministic renderings.  The structured form is JSON with the keys
/// ring_dim, betti, terminated, syzygies [{i, dim, length, support_full}],
/// h0 {is_zero, killed_by_m, length} and depth_positive; an infinite length
/// is the string "infinite".
std::string emit_report(const InvariantReport& report, ReportFormat format);
std::string emit_report(const FuzzReport& report, ReportFormat format);
std::string emit_report(const FreeResolution& res, ReportFormat format);
std::string emit_report(const std::vector<CheckOutcome>& outcomes, ReportFormat format);

/// "β: 1 1 1 2"
std::string betti_row(const std::vector<int>& betti);

}  // namespace syz
