#pragma once

#include <climits>
#include <cstdint>
#include <set>
#include <unordered_set>
#include <vector>

#include "syzkit/polynomial.hpp"

namespace syz {

struct ModuleTerm {
  Monomial mono;
  std::uint32_t comp;
  Scalar coef;
};

/// Element of a free module S^r: terms sorted strictly descending in a ModuleOrder.
using ModuleVector = std::vector<ModuleTerm>;

/// Monomial order on S^r.  Terms compare by block (lower block number is
/// larger), then by shifted degree deg(m) + shift(comp), then reverse
/// lexicographically on exponents, then by component (lower index larger).
/// With one block this is a degree-compatible term-over-position order; with
/// two blocks every term of block 0 dominates block 1, which makes the
/// block-1 part of a Gröbner basis eliminate block 0.
class ModuleOrder {
 public:
  explicit ModuleOrder(std::vector<int> shifts, std::vector<int> blocks = {});

  std::size_t rank() const { return shifts_.size(); }
  int shift(std::size_t comp) const { return shifts_[comp]; }
  int block(std::size_t comp) const { return blocks_[comp]; }
  const std::vector<int>& shifts() const { return shifts_; }

  int degree(const Monomial& m, std::size_t comp) const { return m.degree() + shifts_[comp]; }
  int degree(const ModuleTerm& t) const { return degree(t.mono, t.comp); }
  std::strong_ordering compare(const Monomial& a, std::size_t ca, const Monomial& b, std::size_t cb) const;
  std::strong_ordering compare(const ModuleTerm& a, const ModuleTerm& b) const {
    return compare(a.mono, a.comp, b.mono, b.comp);
  }

 private:
  std::vector<int> shifts_;
  std::vector<int> blocks_;
};

/// Sorts, merges like terms and drops zeros.
ModuleVector normalize_vector(std::vector<ModuleTerm> terms, const ModuleOrder& order);
/// v - c * m * g.
ModuleVector subtract_multiple(const ModuleVector& v, const Scalar& c, const Monomial& m, const ModuleVector& g,
                               const ModuleOrder& order);
ModuleVector scale_vector(ModuleVector v, const Scalar& c);
/// All terms share one shifted degree.
bool is_homogeneous(const ModuleVector& v, const ModuleOrder& order);

/// Column of polynomials placed at components offset..offset+size-1.
void append_column(std::vector<ModuleTerm>& out, const std::vector<Polynomial>& column, std::size_t offset);
/// Components [offset, offset+rank) of v as a column of polynomials.
std::vector<Polynomial> extract_column(const ModuleVector& v, std::size_t offset, std::size_t rank, const RingPtr& ring);

/// Buchberger's algorithm for submodules of S^r.
///
/// Generators are added one at a time; complete(D) processes every pending
/// S-pair whose lcm has shifted degree at most D, so for homogeneous input the
/// basis is a Gröbner basis up to degree D.  Pairs are taken in order of lcm
/// degree, then pair index.  The coprime-lead criterion is used only in rank 1;
/// the chain criterion always.  With skip_upper_blocks, elements whose lead lies
/// in a block above 0 are kept but never paired: their S-pairs only complete a
/// basis of the eliminated part and add no new generators to it.
class GroebnerEngine {
 public:
  GroebnerEngine(RingPtr ring, ModuleOrder order, bool skip_upper_blocks = false);

  const RingPtr& ring() const { return ring_; }
  const ModuleOrder& order() const { return order_; }
  const std::vector<ModuleVector>& basis() const { return basis_; }

  /// Adds a nonzero vector (stored monic).  Returns its index.
  std::size_t add(ModuleVector v);
  /// Adds an element of a basis known to be complete already; no pairs are formed.
  void adopt(ModuleVector v);
  void complete(int max_degree = INT_MAX);
  bool has_pending(int max_degree = INT_MAX) const;

  /// Division by the current basis.  With full = false only the lead is reduced.
  ModuleVector reduce(ModuleVector v, bool full = true) const;
  bool reduces_to_zero(ModuleVector v) const { return reduce(std::move(v), false).empty(); }

  /// Minimal, tail-reduced, monic basis sorted ascending by lead term.
  std::vector<ModuleVector> reduced_basis() const;

 private:
  struct Pair {
    int degree;
    std::size_t i;
    std::size_t j;
    friend auto operator<=>(const Pair&, const Pair&) = default;
  };

  static std::uint64_t key(std::size_t i, std::size_t j) {
    return (static_cast<std::uint64_t>(std::min(i, j)) << 32) | std::max(i, j);
  }
  const ModuleVector* find_divisor(const ModuleTerm& t) const;
  bool chain_criterion(const Pair& p, const Monomial& lcm) const;
  ModuleVector s_vector(std::size_t i, std::size_t j) const;

  RingPtr ring_;
  ModuleOrder order_;
  bool skip_upper_blocks_;
  std::vector<ModuleVector> basis_;
  std::vector<std::vector<std::size_t>> by_comp_;
  std::set<Pair> queue_;
  std::unordered_set<std::uint64_t> pending_;
};

}  // namespace syz
