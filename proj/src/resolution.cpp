#include "syzkit/resolution.hpp"

#include <stdexcept>

namespace syz {

FreeResolution resolve(const PresentedModule& m, int max_steps) {
  if (max_steps < 0) throw std::invalid_argument("resolve: negative step count");
  PresentedModule pres = minimal_presentation(m);
  FreeResolution res{m.ring, pres.presentation.target, {}, {static_cast<int>(pres.num_generators())}, false};
  if (pres.num_generators() == 0) {
    res.terminated = true;
    return res;
  }
  ModuleMap current = std::move(pres.presentation);
  for (int step = 1; step <= max_steps; ++step) {
    if (step > 1) {
      ModuleMap kernel = syzygy_generators(res.maps.back(), m.ring);
      auto keep = minimalize_generators(kernel.columns, kernel.target.shifts, m.ring);
      current = ModuleMap{FreeModule{}, kernel.target, {}};
      for (std::size_t j : keep) {
        current.source.shifts.push_back(kernel.source.shifts[j]);
        current.columns.push_back(std::move(kernel.columns[j]));
      }
    }
    if (current.cols() == 0) {
      res.terminated = true;
      break;
    }
    res.betti.push_back(static_cast<int>(current.cols()));
    res.maps.push_back(std::move(current));
  }
  return res;
}

PresentedModule syzygy_module(const FreeResolution& res, std::size_t i) {
  if (i < res.maps.size()) return PresentedModule{res.ring, res.maps[i]};
  if (res.terminated) {
    if (i == res.maps.size()) return free_module(res.ring, res.free_module(i));
    return zero_module(res.ring);
  }
  throw std::out_of_range("syzygy module " + std::to_string(i) + " lies beyond the computed resolution");
}

BettiTable betti_table(const FreeResolution& res) { return BettiTable{res.betti}; }

namespace {

// f ⊗ id on F ⊗ N_0, with (a, s) at index a * r0 + s.
ModuleMap tensor_map(const ModuleMap& f, const FreeModule& n0, const RingPtr& ring) {
  const std::size_t r0 = n0.rank();
  ModuleMap out;
  for (int s : f.target.shifts)
    for (int t : n0.shifts) out.target.shifts.push_back(s + t);
  for (std::size_t c = 0; c < f.cols(); ++c) {
    for (std::size_t s = 0; s < r0; ++s) {
      out.source.shifts.push_back(f.source.shifts[c] + n0.shifts[s]);
      Column col(f.rows() * r0, Polynomial(ring));
      for (std::size_t a = 0; a < f.rows(); ++a) col[a * r0 + s] = f.columns[c][a];
      out.columns.push_back(std::move(col));
    }
  }
  return out;
}

std::vector<Column> block_relations(const FreeModule& f, const ModuleMap& p, const RingPtr& ring) {
  const std::size_t r0 = p.rows();
  std::vector<Column> out;
  for (std::size_t a = 0; a < f.rank(); ++a) {
    for (const auto& col : p.columns) {
      Column c(f.rank() * r0, Polynomial(ring));
      for (std::size_t s = 0; s < r0; ++s) c[a * r0 + s] = col[s];
      out.push_back(std::move(c));
    }
  }
  return out;
}

FreeModule tensor_free(const FreeModule& f, const FreeModule& n0) {
  FreeModule out;
  for (int s : f.shifts)
    for (int t : n0.shifts) out.shifts.push_back(s + t);
  return out;
}

}  // namespace

PresentedModule tor(const FreeResolution& res, const PresentedModule& n, int i) {
  if (i < 0) throw std::invalid_argument("tor: negative index");
  if (!same_quotient(res.ring, n.ring)) throw std::invalid_argument("tor: modules over different rings");
  const QuotientRing& ring = res.ring;
  const auto idx = static_cast<std::size_t>(i);
  if (idx > res.maps.size()) {
    if (res.terminated) return zero_module(ring);
    throw std::out_of_range("tor: index beyond the computed resolution");
  }
  if (idx == res.maps.size() && !res.terminated) throw std::out_of_range("tor: index beyond the computed resolution");
  const FreeModule& n0 = n.presentation.target;
  const FreeModule& fi = res.free_module(idx);

  ModuleMap incoming = idx < res.maps.size() ? res.maps[idx] : ModuleMap{FreeModule{}, fi, {}};
  ModuleMap outgoing = idx > 0 ? res.maps[idx - 1] : ModuleMap{fi, FreeModule{}, std::vector<Column>(fi.rank())};

  const RingPtr& s = ring.ambient();
  ModuleMap a = tensor_map(incoming, n0, s);
  a.target = tensor_free(fi, n0);
  ModuleMap b = tensor_map(outgoing, n0, s);
  b.source = tensor_free(fi, n0);
  std::vector<Column> mid_rel = block_relations(fi, n.presentation, s);
  std::vector<Column> target_rel =
      idx > 0 ? block_relations(res.free_module(idx - 1), n.presentation, s) : std::vector<Column>{};
  return homology(a, b, ring, mid_rel, target_rel);
}

PresentedModule tor(const PresentedModule& m, const PresentedModule& n, int i) {
  if (i < 0) throw std::invalid_argument("tor: negative index");
  if (!same_quotient(m.ring, n.ring)) throw std::invalid_argument("tor: modules over different rings");
  return tor(resolve(m, i + 1), n, i);
}

}  // namespace syz
