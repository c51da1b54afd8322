#pragma once

#include <vector>

#include "syzkit/resolution.hpp"

namespace syz {

/// Pullback to S of the ideal of maximal minors of a presentation, plus I.
struct FittingData {
  Ideal ideal;
};

/// Presentations with more columns than this are refused by fitting_ideal_0:
/// the number of maximal minors grows like a binomial coefficient.
inline constexpr std::size_t kFittingColumnLimit = 16;

/// Fitt_0 of coker(presentation).  Unit for the zero module, I when there are
/// fewer relations than generators.  Throws std::length_error beyond the limit.
FittingData fitting_ideal_0(const PresentedModule& m);

/// Annihilator of M pulled back to S, computed generator by generator as (U : e_k).
Ideal module_annihilator(const PresentedModule& m);
/// Annihilator of the submodule of R^r spanned by the columns: the intersection
/// of (I : e) over the distinct nonzero entries e.
Ideal image_annihilator(const ModuleMap& f, const QuotientRing& ring);
/// V(J) = Spec R, i.e. every generator of J lies in the radical of I.
bool contained_in_nilradical(const Ideal& j, const QuotientRing& ring);

/// Krull dimension from the Hilbert series; -1 for the zero module.
int module_dim(const PresentedModule& m);
LengthValue module_length(const PresentedModule& m);
/// Supp M = Spec R, via Fitt_0 when the presentation is small enough and via
/// the annihilator otherwise.  Throws std::invalid_argument for M = 0.
bool support_is_full(const PresentedModule& m);

/// Invariants of Syz_i(M) ≅ im f_i, for 1 <= i.
struct SyzygyInvariants {
  std::size_t index = 0;
  int betti = 0;  // β_i, the number of generators of Syz_i
  bool is_zero = false;
  int dim = -1;
  LengthValue length = LengthValue::finite(0);
  bool support_full = false;
};
/// Throws std::out_of_range when i is outside the computed range.
SyzygyInvariants syzygy_invariants(const FreeResolution& res, std::size_t i);

struct H0Data {
  Ideal saturation;        // J = (I : m^∞)
  PresentedModule module;  // J/I
  bool is_zero;
  bool killed_by_m;
  LengthValue length;
};
H0Data h0_local_cohomology(const QuotientRing& ring);
bool depth_is_positive(const QuotientRing& ring);

/// Σ_{i=0}^{r} (-1)^{r-i} β_i.  Throws std::out_of_range.
long long alternating_betti_sum(const BettiTable& t, std::size_t r);
/// The defining ideal is zero.
bool is_regular_model(const QuotientRing& ring);

struct H0Summary {
  bool is_zero;
  bool killed_by_m;
  LengthValue length;
};

struct InvariantReport {
  int ring_dim = 0;
  std::vector<int> betti;
  bool terminated = false;
  std::vector<SyzygyInvariants> syzygies;  // Syz_1 .. Syz_steps
  H0Summary h0{true, true, LengthValue::finite(0)};
  bool depth_positive = true;
};

/// Resolution to `steps` and the invariants of Syz_1..Syz_steps.
InvariantReport compute_report(const PresentedModule& m, int steps);
InvariantReport compute_report(const FreeResolution& res, int steps);
InvariantReport compute_report(const FreeResolution& res, int steps, const H0Data& h0);

}  // namespace syz
