#include "syzkit/modules.hpp"

#include <algorithm>
#include <stdexcept>

#include "syzkit/errors.hpp"

namespace syz {

namespace {

ModuleVector column_vector(const Column& col, const ModuleOrder& order) {
  std::vector<ModuleTerm> terms;
  append_column(terms, col, 0);
  return normalize_vector(std::move(terms), order);
}

// Engine over S^rank holding I S^rank.
GroebnerEngine relation_engine(const QuotientRing& ring, const std::vector<int>& shifts) {
  GroebnerEngine engine(ring.ambient(), ModuleOrder(shifts));
  for (std::size_t k = 0; k < shifts.size(); ++k) {
    for (const auto& g : ring.gb().elements) {
      ModuleVector v;
      v.reserve(g.size());
      for (const auto& t : g.terms()) v.push_back(ModuleTerm{t.mono, static_cast<std::uint32_t>(k), t.coef});
      engine.add(std::move(v));
    }
  }
  return engine;
}

std::vector<int> degrees_of(const std::vector<Column>& cols, const std::vector<int>& row_shifts) {
  std::vector<int> out;
  out.reserve(cols.size());
  for (const auto& c : cols) {
    auto d = column_degree(c, row_shifts);
    if (!d) throw std::invalid_argument("unexpected zero column");
    out.push_back(*d);
  }
  return out;
}

std::vector<Column> nonzero_reduced(const std::vector<Column>& cols, const QuotientRing& ring) {
  std::vector<Column> out;
  for (const auto& c : cols) {
    Column r = reduce_column(c, ring);
    if (!is_zero_column(r)) out.push_back(std::move(r));
  }
  return out;
}

std::vector<Column> pick(const std::vector<Column>& cols, const std::vector<std::size_t>& idx) {
  std::vector<Column> out;
  out.reserve(idx.size());
  for (std::size_t i : idx) out.push_back(cols[i]);
  return out;
}

// Scales so the first nonzero entry has lead coefficient 1.
Column normalize_column(Column c) {
  for (const auto& e : c) {
    if (e.is_zero()) continue;
    if (e.lead_coef().is_one()) return c;
    Scalar inv = e.lead_coef().inverse();
    for (auto& f : c) f = f.scaled(inv);
    return c;
  }
  return c;
}

// Kernel over R of the columns, projected onto the first `keep` coordinates,
// reduced and with zero columns dropped.
std::vector<Column> projected_kernel(const std::vector<Column>& cols, const std::vector<int>& row_shifts,
                                     const std::vector<int>& col_shifts, std::size_t keep, const QuotientRing& ring) {
  std::vector<Column> out;
  for (auto& v : syzygies_modulo(ring.ambient(), cols, row_shifts, ring.gb().elements, col_shifts)) {
    v.resize(keep);
    Column r = reduce_column(v, ring);
    if (!is_zero_column(r)) out.push_back(normalize_column(std::move(r)));
  }
  return out;
}

IntPoly quotient_numerator(const std::vector<Column>& cols, const std::vector<int>& shifts, const QuotientRing& ring,
                           int base_shift) {
  GroebnerEngine engine = relation_engine(ring, shifts);
  for (const auto& c : cols) {
    ModuleVector v = column_vector(reduce_column(c, ring), engine.order());
    if (!v.empty()) engine.add(std::move(v));
  }
  engine.complete();
  std::vector<std::vector<Monomial>> leads(shifts.size());
  for (const auto& v : engine.basis()) leads[v.front().comp].push_back(v.front().mono);
  IntPoly num;
  for (std::size_t k = 0; k < shifts.size(); ++k) {
    MonomialIdeal l(ring.num_vars(), std::move(leads[k]));
    num = int_poly_add(num, int_poly_shift(l.hilbert_numerator(), shifts[k] - base_shift));
  }
  return num;
}

int min_shift(const std::vector<int>& shifts) { return shifts.empty() ? 0 : *std::min_element(shifts.begin(), shifts.end()); }

}  // namespace

PresentedModule zero_module(const QuotientRing& ring) { return PresentedModule{ring, ModuleMap{}}; }

PresentedModule free_module(const QuotientRing& ring, FreeModule f) {
  return PresentedModule{ring, ModuleMap{FreeModule{}, std::move(f), {}}};
}

PresentedModule cyclic_module(const QuotientRing& ring, const std::vector<Polynomial>& gens) {
  std::vector<Column> cols;
  for (const auto& g : gens) cols.push_back(Column{g});
  return PresentedModule{ring, map_from_columns(FreeModule{{0}}, std::move(cols))};
}

std::optional<int> column_degree(const Column& col, const std::vector<int>& row_shifts) {
  std::optional<int> deg;
  for (std::size_t r = 0; r < col.size(); ++r) {
    if (col[r].is_zero()) continue;
    if (!col[r].is_homogeneous()) throw NotHomogeneous("entry '" + col[r].to_string() + "' is not homogeneous");
    int d = col[r].total_degree() + row_shifts[r];
    if (deg && *deg != d) throw NotHomogeneous("column entries '" + col[r].to_string() + "' disagree in degree");
    deg = d;
  }
  return deg;
}

ModuleMap map_from_columns(const FreeModule& target, std::vector<Column> columns) {
  ModuleMap out{FreeModule{}, target, {}};
  for (auto& c : columns) {
    if (c.size() != target.rank()) throw std::invalid_argument("column length does not match target rank");
    auto d = column_degree(c, target.shifts);
    if (!d) continue;
    out.source.shifts.push_back(*d);
    out.columns.push_back(std::move(c));
  }
  return out;
}

void validate_map(const ModuleMap& map, const QuotientRing& ring) {
  if (map.source.rank() != map.cols()) throw std::invalid_argument("map: source rank differs from column count");
  for (std::size_t j = 0; j < map.cols(); ++j) {
    if (map.columns[j].size() != map.rows()) throw std::invalid_argument("map: column length differs from target rank");
    for (std::size_t r = 0; r < map.rows(); ++r) {
      const auto& e = map.columns[j][r];
      if (!same_ring(e.ring(), ring.ambient())) throw RingMismatch();
      if (e.is_zero()) continue;
      if (!e.is_homogeneous() || e.total_degree() != map.source.shifts[j] - map.target.shifts[r])
        throw NotHomogeneous("entry (" + std::to_string(r + 1) + ", " + std::to_string(j + 1) + ") '" + e.to_string() +
                             "' does not have degree " + std::to_string(map.source.shifts[j] - map.target.shifts[r]));
    }
  }
}

bool is_minimal(const ModuleMap& map) {
  for (const auto& c : map.columns)
    for (const auto& e : c)
      if (!e.is_zero() && e.terms().back().mono.is_one()) return false;
  return true;
}

Column reduce_column(const Column& col, const QuotientRing& ring) {
  Column out;
  out.reserve(col.size());
  for (const auto& e : col) out.push_back(e.is_zero() ? Polynomial(ring.ambient()) : ring.reduce(e));
  return out;
}

bool is_zero_column(const Column& col) {
  return std::all_of(col.begin(), col.end(), [](const Polynomial& e) { return e.is_zero(); });
}

ModuleMap compose(const ModuleMap& b, const ModuleMap& a, const QuotientRing& ring) {
  if (b.source.rank() != a.target.rank()) throw std::invalid_argument("compose: shapes do not match");
  ModuleMap out{a.source, b.target, {}};
  for (const auto& col : a.columns) {
    Column c(b.rows(), Polynomial(ring.ambient()));
    for (std::size_t k = 0; k < col.size(); ++k) {
      if (col[k].is_zero()) continue;
      for (std::size_t r = 0; r < b.rows(); ++r)
        if (!b.columns[k][r].is_zero()) c[r] += b.columns[k][r] * col[k];
    }
    out.columns.push_back(reduce_column(c, ring));
  }
  return out;
}

ModuleMap syzygy_generators(const ModuleMap& a, const QuotientRing& ring) {
  validate_map(a, ring);
  ModuleMap out{FreeModule{}, a.source, {}};
  if (a.cols() == 0) return out;
  for (auto& v : projected_kernel(a.columns, a.target.shifts, a.source.shifts, a.cols(), ring)) {
    out.source.shifts.push_back(*column_degree(v, a.source.shifts));
    out.columns.push_back(std::move(v));
  }
  return out;
}

std::vector<std::size_t> minimalize_generators(const std::vector<Column>& cols, const std::vector<int>& target_shifts,
                                               const QuotientRing& ring, const std::vector<Column>& base) {
  std::vector<std::pair<int, std::size_t>> todo;
  std::vector<Column> reduced(cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != target_shifts.size()) throw std::invalid_argument("column length does not match target rank");
    reduced[j] = reduce_column(cols[j], ring);
    if (auto d = column_degree(reduced[j], target_shifts)) todo.emplace_back(*d, j);
  }
  std::stable_sort(todo.begin(), todo.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  std::vector<std::size_t> keep;
  if (todo.empty()) return keep;
  GroebnerEngine engine = relation_engine(ring, target_shifts);
  for (const auto& b : base) {
    ModuleVector v = column_vector(reduce_column(b, ring), engine.order());
    if (!v.empty()) engine.add(std::move(v));
  }
  for (const auto& [deg, j] : todo) {
    engine.complete(deg);
    ModuleVector v = engine.reduce(column_vector(reduced[j], engine.order()), false);
    if (v.empty()) continue;
    keep.push_back(j);
    engine.add(engine.reduce(std::move(v), true));
  }
  return keep;
}

PresentedModule minimal_presentation(const PresentedModule& m) {
  const QuotientRing& ring = m.ring;
  validate_map(m.presentation, ring);
  std::vector<int> shifts = m.presentation.target.shifts;
  std::vector<Column> cols = nonzero_reduced(m.presentation.columns, ring);
  for (;;) {
    std::optional<std::pair<std::size_t, std::size_t>> pivot;
    for (std::size_t j = 0; j < cols.size() && !pivot; ++j)
      for (std::size_t r = 0; r < shifts.size() && !pivot; ++r)
        if (!cols[j][r].is_zero() && cols[j][r].is_constant()) pivot = {j, r};
    if (!pivot) break;
    auto [pj, pr] = *pivot;
    Column p = cols[pj];
    Scalar inv = p[pr].lead_coef().inverse();
    std::vector<Column> next;
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (j == pj) continue;
      Column c = cols[j];
      if (!c[pr].is_zero()) {
        Polynomial factor = c[pr].scaled(inv);
        for (std::size_t r = 0; r < c.size(); ++r)
          if (!p[r].is_zero()) c[r] -= factor * p[r];
        c = reduce_column(c, ring);
      }
      c.erase(c.begin() + static_cast<std::ptrdiff_t>(pr));
      if (!is_zero_column(c)) next.push_back(std::move(c));
    }
    shifts.erase(shifts.begin() + static_cast<std::ptrdiff_t>(pr));
    cols = std::move(next);
  }
  auto keep = minimalize_generators(cols, shifts, ring);
  return PresentedModule{ring, map_from_columns(FreeModule{shifts}, pick(cols, keep))};
}

IntPoly module_hilbert_numerator(const PresentedModule& m) {
  const auto& shifts = m.presentation.target.shifts;
  return quotient_numerator(m.presentation.columns, shifts, m.ring, min_shift(shifts));
}

IntPoly image_hilbert_numerator(const ModuleMap& map, const QuotientRing& ring) {
  const auto& shifts = map.target.shifts;
  const int base = min_shift(shifts);
  IntPoly free_part;
  IntPoly ring_num = ring.lead().hilbert_numerator();
  for (int s : shifts) free_part = int_poly_add(free_part, int_poly_shift(ring_num, s - base));
  return int_poly_sub(free_part, quotient_numerator(map.columns, shifts, ring, base));
}

PresentedModule homology(const ModuleMap& a, const ModuleMap& b, const QuotientRing& ring,
                         const std::vector<Column>& mid_relations, const std::vector<Column>& target_relations) {
  if (a.target.rank() != b.source.rank() || a.target.shifts != b.source.shifts)
    throw std::invalid_argument("homology: maps are not composable");
  validate_map(a, ring);
  validate_map(b, ring);
  const auto& mid = b.source.shifts;

  // b ∘ a must vanish modulo the target relations.
  if (b.rows() > 0 && a.cols() > 0) {
    GroebnerEngine engine = relation_engine(ring, b.target.shifts);
    for (const auto& c : target_relations) {
      ModuleVector v = column_vector(reduce_column(c, ring), engine.order());
      if (!v.empty()) engine.add(std::move(v));
    }
    engine.complete();
    for (const auto& c : compose(b, a, ring).columns)
      if (!engine.reduce(column_vector(c, engine.order()), true).empty())
        throw std::invalid_argument("homology: the maps do not compose to zero");
  }

  // Kernel of b modulo the target relations, inside R^mid.
  std::vector<Column> kernel;
  if (b.rows() == 0) {
    for (std::size_t k = 0; k < mid.size(); ++k) {
      Column e(mid.size(), Polynomial(ring.ambient()));
      e[k] = Polynomial::constant(ring.ambient(), 1);
      kernel.push_back(std::move(e));
    }
  } else if (b.cols() > 0) {
    std::vector<Column> cols = b.columns;
    std::vector<int> col_shifts = b.source.shifts;
    auto rel = nonzero_reduced(target_relations, ring);
    auto rel_deg = degrees_of(rel, b.target.shifts);
    cols.insert(cols.end(), rel.begin(), rel.end());
    col_shifts.insert(col_shifts.end(), rel_deg.begin(), rel_deg.end());
    kernel = projected_kernel(cols, b.target.shifts, col_shifts, b.cols(), ring);
  }

  std::vector<Column> boundary = nonzero_reduced(a.columns, ring);
  auto mid_rel = nonzero_reduced(mid_relations, ring);
  boundary.insert(boundary.end(), mid_rel.begin(), mid_rel.end());

  auto keep = minimalize_generators(kernel, mid, ring, boundary);
  std::vector<Column> gens = pick(kernel, keep);
  std::vector<int> gen_deg = degrees_of(gens, mid);
  if (gens.empty()) return PresentedModule{ring, ModuleMap{}};

  std::vector<Column> all = gens;
  all.insert(all.end(), boundary.begin(), boundary.end());
  std::vector<int> all_deg = gen_deg;
  auto bdeg = degrees_of(boundary, mid);
  all_deg.insert(all_deg.end(), bdeg.begin(), bdeg.end());
  auto relations = projected_kernel(all, mid, all_deg, gens.size(), ring);
  auto rkeep = minimalize_generators(relations, gen_deg, ring);
  return PresentedModule{ring, map_from_columns(FreeModule{gen_deg}, pick(relations, rkeep))};
}

}  // namespace syz
