#include "syzkit/report.hpp"

#include <iomanip>
#include <sstream>

#include "json.hpp"

namespace syz {

namespace {

using json = nlohmann::ordered_json;

json length_json(const LengthValue& l) { return l.is_finite() ? json(l.value()) : json("infinite"); }

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json outcome_json(const CheckOutcome& o) {
  json j;
  j["check_id"] = o.check_id;
  j["status"] = to_string(o.status);
  j["details"] = o.details;
  if (!o.reproducer.empty()) j["reproducer"] = o.reproducer;
  return j;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

std::string betti_row(const std::vector<int>& betti) {
  std::string out = "β:";
  for (int b : betti) out += " " + std::to_string(b);
  return out;
}

std::string emit_report(const InvariantReport& r, ReportFormat format) {
  if (format == ReportFormat::structured) {
    json j;
    j["ring_dim"] = r.ring_dim;
    j["betti"] = r.betti;
    j["terminated"] = r.terminated;
    j["syzygies"] = json::array();
    for (const auto& s : r.syzygies) {
      json e;
      e["i"] = s.index;
      e["dim"] = s.dim;
      e["length"] = length_json(s.length);
      e["support_full"] = s.support_full;
      j["syzygies"].push_back(std::move(e));
    }
    j["h0"] = {{"is_zero", r.h0.is_zero}, {"killed_by_m", r.h0.killed_by_m}, {"length", length_json(r.h0.length)}};
    j["depth_positive"] = r.depth_positive;
    return dump(j);
  }
  std::ostringstream out;
  out << "ring dimension: " << r.ring_dim << "\n";
  out << betti_row(r.betti) << "\n";
  out << "terminated: " << yes_no(r.terminated) << "\n";
  out << std::left << std::setw(4) << "i" << std::setw(6) << "dim" << std::setw(10) << "length"
      << "support\n";
  for (const auto& s : r.syzygies) {
    out << std::setw(4) << s.index << std::setw(6) << s.dim << std::setw(10) << s.length.to_string()
        << (s.is_zero ? "empty" : s.support_full ? "full" : "partial") << "\n";
  }
  out << "H0: ";
  if (r.h0.is_zero) out << "zero\n";
  else out << "length " << r.h0.length.to_string() << ", killed by m: " << yes_no(r.h0.killed_by_m) << "\n";
  out << "depth positive: " << yes_no(r.depth_positive) << "\n";
  return out.str();
}

std::string emit_report(const FreeResolution& res, ReportFormat format) {
  if (format == ReportFormat::structured) {
    json j;
    j["betti"] = res.betti;
    j["terminated"] = res.terminated;
    j["maps"] = json::array();
    for (const auto& f : res.maps) {
      json m;
      m["source_shifts"] = f.source.shifts;
      m["target_shifts"] = f.target.shifts;
      m["rows"] = json::array();
      for (std::size_t r = 0; r < f.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < f.cols(); ++c) row.push_back(f.entry(r, c).to_string());
        m["rows"].push_back(std::move(row));
      }
      j["maps"].push_back(std::move(m));
    }
    return dump(j);
  }
  std::ostringstream out;
  out << betti_row(res.betti) << "\n";
  out << "terminated: " << yes_no(res.terminated) << "\n";
  for (std::size_t i = 0; i < res.maps.size(); ++i) {
    const auto& f = res.maps[i];
    out << "f_" << i + 1 << ": " << f.rows() << " x " << f.cols() << "\n";
    for (std::size_t r = 0; r < f.rows(); ++r) {
      out << "  [";
      for (std::size_t c = 0; c < f.cols(); ++c) out << (c ? ", " : " ") << f.entry(r, c).to_string();
      out << " ]\n";
    }
  }
  return out.str();
}

std::string emit_report(const FuzzReport& r, ReportFormat format) {
  const auto& c = r.config;
  if (format == ReportFormat::structured) {
    json j;
    j["seed"] = c.seed;
    j["cases_run"] = r.cases_run;
    j["config"] = {{"vars", {c.min_vars, c.max_vars}}, {"maxdeg", c.max_degree}, {"steps", c.steps}};
    j["violations"] = json::array();
    for (const auto& o : r.violations) j["violations"].push_back(outcome_json(o));
    j["counterexample_candidates"] = json::array();
    for (const auto& k : r.counterexample_candidates)
      j["counterexample_candidates"].push_back({{"case", k.case_index},
                                                {"i", k.syzygy_index},
                                                {"depth_positive", k.depth_positive},
                                                {"squarefree", k.squarefree},
                                                {"problem", k.problem}});
    j["check_counts"] = json::object();
    for (const auto& [id, n] : r.check_counts)
      j["check_counts"][id] = {{"pass", n[0]}, {"fail", n[1]}, {"skipped", n[2]}};
    j["d_window_truncated"] = true;
    j["cases"] = json::array();
    for (const auto& s : r.cases)
      j["cases"].push_back({{"case", s.case_index},
                            {"ring_dim", s.ring_dim},
                            {"depth_positive", s.depth_positive},
                            {"squarefree", s.squarefree},
                            {"betti", s.betti},
                            {"dims", s.dims},
                            {"d_window", s.d_window}});
    return dump(j);
  }
  std::ostringstream out;
  out << "seed " << c.seed << ", cases " << r.cases_run << ", vars " << c.min_vars << ".." << c.max_vars
      << ", maxdeg " << c.max_degree << ", steps " << (c.steps > 0 ? std::to_string(c.steps) : "dim R + 3") << "\n";
  out << "violations: " << r.violations.size() << "\n";
  for (const auto& o : r.violations) out << "  " << o.check_id << ": " << o.details << "\n" << o.reproducer;
  out << "counterexample candidates: " << r.counterexample_candidates.size() << "\n";
  for (const auto& k : r.counterexample_candidates)
    out << "  case " << k.case_index << ", Syz_" << k.syzygy_index << " of finite length"
        << ", depth positive: " << yes_no(k.depth_positive) << ", squarefree: " << yes_no(k.squarefree) << "\n"
        << k.problem;
  if (!r.check_counts.empty()) {
    out << std::left << std::setw(30) << "check" << std::setw(7) << "pass" << std::setw(7) << "fail"
        << "skipped\n";
    for (const auto& [id, n] : r.check_counts)
      out << std::setw(30) << id << std::setw(7) << n[0] << std::setw(7) << n[1] << n[2] << "\n";
  }
  std::map<std::size_t, std::size_t> hist;
  for (const auto& s : r.cases) ++hist[s.d_window];
  if (!hist.empty()) {
    out << "d(M) within the window (truncated, a lower bound):";
    for (const auto& [v, n] : hist) out << " " << v << ":" << n;
    out << "\n";
  }
  return out.str();
}

std::string emit_report(const std::vector<CheckOutcome>& outcomes, ReportFormat format) {
  std::size_t counts[3] = {0, 0, 0};
  for (const auto& o : outcomes) ++counts[static_cast<std::size_t>(o.status)];
  if (format == ReportFormat::structured) {
    json j;
    j["passed"] = counts[0];
    j["failed"] = counts[1];
    j["skipped"] = counts[2];
    j["outcomes"] = json::array();
    for (const auto& o : outcomes) j["outcomes"].push_back(outcome_json(o));
    return dump(j);
  }
  std::ostringstream out;
  for (const auto& o : outcomes) {
    out << std::left << std::setw(8) << to_string(o.status) << o.check_id << ": " << o.details << "\n";
    if (!o.reproducer.empty()) out << o.reproducer;
  }
  out << counts[0] << " passed, " << counts[1] << " failed, " << counts[2] << " skipped\n";
  return out.str();
}

}  // namespace syz
