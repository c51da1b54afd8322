#include "syzkit/suite.hpp"

#include <sstream>

namespace syz {

namespace {

using std::nullopt;
constexpr std::optional<std::uint64_t> kInf = nullopt;

std::vector<SuiteCase> build_cases() {
  std::vector<SuiteCase> out;
  {
    SuiteCase c;
    c.label = "finite-second-syzygy";
    c.claim = "over k[x,y]/(x^2,xy) the finite-length module R/yR has Syz_2 of finite length, "
              "while Syz_1 and Syz_3 have full support over this one-dimensional ring";
    c.variables = "x y";
    c.ideal = "x^2; x*y";
    c.rows = {"y"};
    c.steps = 3;
    c.betti = {1, 1, 1, 2};
    c.lengths = {kInf, 1, kInf};
    c.support = {true, false, true};
    c.h0_length = 1;
    c.h0_killed_by_m = true;
    out.push_back(c);
  }
  {
    SuiteCase c;
    c.label = "periodic-infinite-length";
    c.claim = "over k[x,y]/(xy) the module R/xR has periodic syzygies R/xR and R/yR, each of full dimension "
              "and none of full support";
    c.variables = "x y";
    c.ideal = "x*y";
    c.rows = {"x"};
    c.steps = 6;
    c.betti = {1, 1, 1, 1, 1, 1, 1};
    c.lengths = {kInf, kInf, kInf, kInf, kInf, kInf};
    c.all_dims = 1;
    c.support_never_full = true;
    c.h0_length = 0;
    out.push_back(c);
  }
  for (int n : {2, 3}) {
    SuiteCase c;
    c.label = "koszul-" + std::to_string(n);
    c.claim = "over a regular ring of dimension d the residue field has Syz_i = 0 for i > d";
    c.variables = n == 2 ? "x y" : "x y z";
    c.ideal = "0";
    c.rows = {n == 2 ? "x, y" : "x, y, z"};
    c.betti = n == 2 ? std::vector<int>{1, 2, 1} : std::vector<int>{1, 3, 3, 1};
    c.all_dims = n;
    c.zero_from = static_cast<std::size_t>(n + 1);
    out.push_back(c);
  }
  {
    SuiteCase c;
    c.label = "residue-field-embedded-point";
    c.claim = "in positive dimension every syzygy of the residue field has full support";
    c.variables = "x y";
    c.ideal = "x^2; x*y";
    c.rows = {"x, y"};
    c.steps = 5;
    c.betti = {1, 2, 3, 5, 8, 13};
    c.full_support_from = 1;
    out.push_back(c);
  }
  {
    SuiteCase c;
    c.label = "residue-field-node";
    c.claim = "in positive dimension every syzygy of the residue field has full support";
    c.variables = "x y";
    c.ideal = "x*y";
    c.rows = {"x, y"};
    c.steps = 5;
    c.betti = {1, 2, 2, 2, 2, 2};
    c.full_support_from = 1;
    c.h0_length = 0;
    out.push_back(c);
  }
  {
    SuiteCase c;
    c.label = "residue-field-fat-point-line";
    c.claim = "in positive dimension every syzygy of the residue field has full support";
    c.variables = "x y";
    c.ideal = "x^3; x^2*y; x*y^2";
    c.rows = {"x, y"};
    c.steps = 5;
    c.betti = {1, 2, 4, 8, 16, 32};
    c.full_support_from = 1;
    out.push_back(c);
  }
  {
    SuiteCase c;
    c.label = "residue-field-cone";
    c.claim = "in positive dimension every syzygy of the residue field has full support";
    c.variables = "x y z";
    c.ideal = "x*z - y^2";
    c.rows = {"x, y, z"};
    c.steps = 5;
    c.betti = {1, 3, 4, 4, 4, 4};
    c.full_support_from = 1;
    c.h0_length = 0;
    out.push_back(c);
  }
  const char* powers[] = {"x, y", "x^2, x*y, y^2", "x^3, x^2*y, x*y^2, y^3"};
  const char* ideals[] = {"x^2; x*y", "x^3; x^2*y; x*y^2", "x^4; x^3*y; x^2*y^2; x*y^3"};
  const std::uint64_t h0_lengths[] = {1, 3, 6};
  for (int n = 1; n <= 3; ++n) {
    SuiteCase c;
    c.label = "power-of-maximal-ideal-" + std::to_string(n);
    c.claim = "over k[x,y]/x(x,y)^n the module R/m^n has syzygies of infinite length and full support; "
              "for n = 2 the element x^2 of m^2 and of H0 makes Tor_1(R/m^2, R/H0) nonzero";
    c.variables = "x y";
    c.ideal = ideals[n - 1];
    c.rows = {powers[n - 1]};
    c.steps = 5;
    c.lengths = {kInf, kInf, kInf, kInf, kInf};
    c.full_support_from = 1;
    c.h0_length = h0_lengths[n - 1];
    c.h0_killed_by_m = n == 1;
    c.tor1_witness = n == 2;
    out.push_back(c);
  }
  {
    SuiteCase c;
    c.label = "hypersurface-times-maximal";
    c.claim = "over k[x,y,z]/f m with f = x^2 + yz, H0 = fR is killed by m and every syzygy of a "
              "finite-length module has full dimension";
    c.variables = "x y z";
    c.ideal = "x^3 + x*y*z; x^2*y + y^2*z; x^2*z + y*z^2";
    c.rows = {"x, y, z"};
    c.steps = 5;
    c.betti = {1, 3, 6, 13, 28, 60};
    c.all_dims = 2;
    c.full_support_from = 1;
    c.h0_length = 1;
    c.h0_killed_by_m = true;
    out.push_back(c);
  }
  {
    SuiteCase c;
    c.label = "prime-times-maximal-residue";
    c.claim = "over k[x,y,z]/(x,y)m the Betti numbers strictly increase and every syzygy of a "
              "finite-length module has full support";
    c.variables = "x y z";
    c.ideal = "x^2; x*y; x*z; y^2; y*z";
    c.rows = {"x, y, z"};
    c.steps = 5;
    c.betti = {1, 3, 8, 22, 60, 164};
    c.full_support_from = 1;
    c.h0_length = 2;
    c.h0_killed_by_m = true;
    out.push_back(c);
  }
  {
    SuiteCase c;
    c.label = "prime-times-maximal-line";
    c.claim = "over k[x,y,z]/(x,y)m a non-free module of infinite length has Syz_i of full support for i > 1";
    c.variables = "x y z";
    c.ideal = "x^2; x*y; x*z; y^2; y*z";
    c.rows = {"x"};
    c.steps = 5;
    c.full_support_from = 2;
    out.push_back(c);
  }
  return out;
}

CheckOutcome outcome(const std::string& id, bool ok, const std::string& details, const ProblemSpec& spec) {
  return CheckOutcome{id, ok ? CheckStatus::pass : CheckStatus::fail, details, ok ? "" : to_problem_text(spec)};
}

template <class T, class F>
std::string render(const std::vector<T>& v, F f) {
  std::string out;
  for (const auto& x : v) out += (out.empty() ? "" : " ") + f(x);
  return out;
}

std::string length_text(const std::optional<std::uint64_t>& v) { return v ? std::to_string(*v) : "infinite"; }

}  // namespace

const std::vector<SuiteCase>& paper_cases() {
  static const std::vector<SuiteCase> cases = build_cases();
  return cases;
}

std::string suite_problem_text(const SuiteCase& c, const SuiteOptions& options) {
  std::ostringstream out;
  out << "# " << c.label << "\n";
  out << (options.rational ? "field rational\n" : "field prime 32003\n");
  out << "ring " << c.variables << "\n";
  out << "ideal " << c.ideal << "\n";
  out << "module rows " << c.rows.size() << "\n";
  for (const auto& r : c.rows) out << "[ " << r << " ]\n";
  if (options.steps) out << "steps " << *options.steps << "\n";
  else if (c.steps > 0) out << "steps " << c.steps << "\n";
  return out.str();
}

ProblemSpec suite_problem(const SuiteCase& c, const SuiteOptions& options) {
  return parse_problem(suite_problem_text(c, options), c.label);
}

std::vector<CheckOutcome> run_suite_case(const SuiteCase& c, const SuiteOptions& options) {
  const ProblemSpec spec = suite_problem(c, options);
  const Analysis a = analyze(spec);
  const auto& rep = a.report;
  std::vector<CheckOutcome> out;
  const std::string p = c.label + "/";

  if (!c.betti.empty()) {
    std::vector<int> got;
    for (std::size_t i = 0; i < c.betti.size() && (i < rep.betti.size() || rep.terminated); ++i)
      got.push_back(i < rep.betti.size() ? rep.betti[i] : 0);
    std::vector<int> want(c.betti.begin(), c.betti.begin() + static_cast<std::ptrdiff_t>(got.size()));
    auto num = [](int x) { return std::to_string(x); };
    out.push_back(outcome(p + "betti", got == want, "expected " + render(want, num) + ", got " + render(got, num), spec));
  }
  if (!c.lengths.empty()) {
    std::vector<std::optional<std::uint64_t>> got, want;
    for (std::size_t i = 1; i <= c.lengths.size() && i <= a.steps(); ++i) {
      const auto& l = a.syzygy(i).length;
      got.push_back(l.is_finite() ? std::optional<std::uint64_t>(l.value()) : nullopt);
      want.push_back(c.lengths[i - 1]);
    }
    out.push_back(outcome(p + "lengths", got == want,
                          "expected " + render(want, length_text) + ", got " + render(got, length_text), spec));
  }
  auto flag = [](bool b) { return std::string(b ? "full" : "partial"); };
  if (!c.support.empty()) {
    std::vector<bool> got, want;
    for (std::size_t i = 1; i <= c.support.size() && i <= a.steps(); ++i) {
      got.push_back(a.syzygy(i).support_full);
      want.push_back(c.support[i - 1]);
    }
    out.push_back(outcome(p + "support", got == want, "expected " + render(want, flag) + ", got " + render(got, flag), spec));
  }
  if (c.full_support_from) {
    std::vector<std::string> bad;
    for (std::size_t i = *c.full_support_from; i <= a.steps(); ++i)
      if (!a.syzygy(i).support_full) bad.push_back("Syz_" + std::to_string(i));
    out.push_back(outcome(p + "full-support", bad.empty(),
                          bad.empty() ? "Syz_" + std::to_string(*c.full_support_from) + "..Syz_" +
                                            std::to_string(a.steps()) + " have full support"
                                      : "partial support at " + render(bad, [](const std::string& s) { return s; }),
                          spec));
  }
  if (c.support_never_full) {
    std::vector<std::string> bad;
    for (const auto& s : rep.syzygies)
      if (s.support_full) bad.push_back("Syz_" + std::to_string(s.index));
    out.push_back(outcome(p + "partial-support", bad.empty(),
                          bad.empty() ? "no computed syzygy has full support"
                                      : "full support at " + render(bad, [](const std::string& s) { return s; }),
                          spec));
  }
  if (c.all_dims || c.zero_from) {
    std::vector<std::string> bad;
    for (const auto& s : rep.syzygies) {
      const bool should_vanish = c.zero_from && s.index >= *c.zero_from;
      if (should_vanish && !s.is_zero) bad.push_back("Syz_" + std::to_string(s.index) + " is nonzero");
      if (!should_vanish && c.all_dims && s.dim != *c.all_dims)
        bad.push_back("Syz_" + std::to_string(s.index) + " has dimension " + std::to_string(s.dim));
    }
    if (c.zero_from && !rep.terminated) bad.push_back("resolution did not terminate");
    out.push_back(outcome(p + "dimensions", bad.empty(),
                          bad.empty() ? "dimensions as expected" : render(bad, [](const std::string& s) { return s; }),
                          spec));
  }
  if (c.h0_length) {
    const auto& h = rep.h0;
    const bool ok = h.length.is_finite() && h.length.value() == *c.h0_length;
    out.push_back(outcome(p + "h0-length", ok,
                          "expected " + std::to_string(*c.h0_length) + ", got " + h.length.to_string(), spec));
  }
  if (c.h0_killed_by_m) {
    out.push_back(outcome(p + "h0-killed-by-m", rep.h0.killed_by_m == *c.h0_killed_by_m,
                          std::string("expected ") + (*c.h0_killed_by_m ? "true" : "false") + ", got " +
                              (rep.h0.killed_by_m ? "true" : "false"),
                          spec));
  }
  if (c.tor1_witness) {
    PresentedModule quotient = cyclic_module(spec.ring, a.h0.saturation.groebner().elements);
    LengthValue t = module_length(tor(a.resolution, quotient, 1));
    const bool ok = !t.is_finite() || t.value() > 0;
    out.push_back(outcome(p + "tor1-witness", ok, "length Tor_1(M, R/H0) = " + t.to_string(), spec));
  }
  for (auto& o : run_property_checks(a)) {
    o.check_id = p + o.check_id;
    out.push_back(std::move(o));
  }
  return out;
}

std::vector<CheckOutcome> run_paper_suite(const SuiteOptions& options) {
  std::vector<CheckOutcome> out;
  for (const auto& c : paper_cases()) {
    auto part = run_suite_case(c, options);
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return out;
}

}  // namespace syz
