#pragma once

#include <vector>

#include "syzkit/modules.hpp"

namespace syz {

/// Minimal graded free resolution ... -> F_2 --f_2--> F_1 --f_1--> F_0 -> M.
/// maps[i] is f_{i+1}; betti[i] = rank F_i.  terminated is set when some
/// computed kernel was zero, in which case maps ends with an injective map.
struct FreeResolution {
  QuotientRing ring;
  FreeModule generators;  // F_0
  std::vector<ModuleMap> maps;
  std::vector<int> betti;
  bool terminated = false;

  /// F_i for i <= maps.size().
  const FreeModule& free_module(std::size_t i) const { return i == 0 ? generators : maps[i - 1].source; }
};

struct BettiTable {
  std::vector<int> total;
};

/// Resolves M out to homological degree max_steps: f_1 is a minimal
/// presentation and f_{i+1} a minimal generating set of ker f_i.
FreeResolution resolve(const PresentedModule& m, int max_steps);

/// Syz_i(M) = coker f_{i+1}, generated by F_i.  Past a terminated resolution
/// it is free (i = maps.size()) or zero.  Throws std::out_of_range when the
/// computed range does not determine it.
PresentedModule syzygy_module(const FreeResolution& res, std::size_t i);

BettiTable betti_table(const FreeResolution& res);

/// Tor_i^R(M, N) from a resolution of M tensored with N.
PresentedModule tor(const PresentedModule& m, const PresentedModule& n, int i);
/// Same from an existing resolution of M, which must reach F_{i+1} or have terminated.
PresentedModule tor(const FreeResolution& res, const PresentedModule& n, int i);

}  // namespace syz
