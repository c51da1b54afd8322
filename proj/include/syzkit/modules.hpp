#pragma once

#include <optional>
#include <vector>

#include "syzkit/monomial_ideal.hpp"
#include "syzkit/quotient_ring.hpp"

namespace syz {

/// Graded free module ⊕ R(-shift_j).
struct FreeModule {
  std::vector<int> shifts;

  std::size_t rank() const { return shifts.size(); }
  friend bool operator==(const FreeModule&, const FreeModule&) = default;
};

using Column = std::vector<Polynomial>;

/// Homogeneous map source -> target, stored by columns: columns[j][r] is the
/// entry in row r, of degree source.shifts[j] - target.shifts[r].
struct ModuleMap {
  FreeModule source;
  FreeModule target;
  std::vector<Column> columns;

  std::size_t rows() const { return target.rank(); }
  std::size_t cols() const { return columns.size(); }
  const Polynomial& entry(std::size_t row, std::size_t col) const { return columns[col][row]; }
};

/// Cokernel of presentation over ring; the generators are presentation.target.
struct PresentedModule {
  QuotientRing ring;
  ModuleMap presentation;

  std::size_t num_generators() const { return presentation.rows(); }
  bool has_no_generators() const { return presentation.rows() == 0; }
};

PresentedModule zero_module(const QuotientRing& ring);
PresentedModule free_module(const QuotientRing& ring, FreeModule f);
/// R/(gens) with one generator in degree 0.
PresentedModule cyclic_module(const QuotientRing& ring, const std::vector<Polynomial>& gens);

/// Degree of a column against the row shifts: nullopt for a zero column.
/// Throws NotHomogeneous if the entries disagree.
std::optional<int> column_degree(const Column& col, const std::vector<int>& row_shifts);

/// Rebuilds a map from columns, reading source shifts off the entries.  Zero
/// columns are dropped.  Throws NotHomogeneous.
ModuleMap map_from_columns(const FreeModule& target, std::vector<Column> columns);

/// Checks entry ring, column length and homogeneity.  Throws on violation.
void validate_map(const ModuleMap& map, const QuotientRing& ring);
/// No entry has a nonzero constant term.
bool is_minimal(const ModuleMap& map);
/// b ∘ a with entries reduced modulo the defining ideal.
ModuleMap compose(const ModuleMap& b, const ModuleMap& a, const QuotientRing& ring);
Column reduce_column(const Column& col, const QuotientRing& ring);
bool is_zero_column(const Column& col);

/// Generators of ker(a) over R: lift to S, adjoin the columns g e_k for g in
/// the Gröbner basis of I, take syzygies and project back.  Zero columns are
/// dropped; the result is not minimal.
ModuleMap syzygy_generators(const ModuleMap& a, const QuotientRing& ring);

/// Indices of a minimal subset of cols generating the same submodule of
/// R^target modulo base.  Candidates are visited by degree, then index; one is
/// kept iff it is not in the span of base and of the columns kept before it.
std::vector<std::size_t> minimalize_generators(const std::vector<Column>& cols, const std::vector<int>& target_shifts,
                                               const QuotientRing& ring, const std::vector<Column>& base = {});

/// Same cokernel with no unit entries and minimal relations.  Generators
/// killed by a unit relation are eliminated.
PresentedModule minimal_presentation(const PresentedModule& m);

/// Numerator N(t) of the Hilbert series of coker(presentation), over
/// (1-t)^n, multiplied by t^(-min shift) so it is a polynomial.
IntPoly module_hilbert_numerator(const PresentedModule& m);
/// Same for the image of a map inside its target, with I R^target factored out.
IntPoly image_hilbert_numerator(const ModuleMap& map, const QuotientRing& ring);

/// Homology of G/mid_relations at the middle of F --a--> G --b--> H, where H
/// is taken modulo target_relations.  Throws std::invalid_argument on shape
/// mismatch or if b ∘ a is nonzero.
PresentedModule homology(const ModuleMap& a, const ModuleMap& b, const QuotientRing& ring,
                         const std::vector<Column>& mid_relations = {},
                         const std::vector<Column>& target_relations = {});

}  // namespace syz
