#include "syzkit/module_gb.hpp"

#include <algorithm>
#include <stdexcept>

namespace syz {

ModuleOrder::ModuleOrder(std::vector<int> shifts, std::vector<int> blocks)
    : shifts_(std::move(shifts)), blocks_(std::move(blocks)) {
  if (blocks_.empty()) blocks_.assign(shifts_.size(), 0);
  if (blocks_.size() != shifts_.size()) throw std::invalid_argument("module order: shifts and blocks differ in size");
}

std::strong_ordering ModuleOrder::compare(const Monomial& a, std::size_t ca, const Monomial& b, std::size_t cb) const {
  if (blocks_[ca] != blocks_[cb]) return blocks_[cb] <=> blocks_[ca];
  int da = degree(a, ca), db = degree(b, cb);
  if (da != db) return da <=> db;
  for (std::size_t i = a.num_vars(); i-- > 0;)
    if (a[i] != b[i]) return b[i] <=> a[i];
  return cb <=> ca;
}

ModuleVector normalize_vector(std::vector<ModuleTerm> terms, const ModuleOrder& order) {
  std::sort(terms.begin(), terms.end(), [&](const ModuleTerm& a, const ModuleTerm& b) {
    return order.compare(a, b) == std::strong_ordering::greater;
  });
  ModuleVector out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().comp == t.comp && out.back().mono == t.mono) {
      out.back().coef += t.coef;
      if (out.back().coef.is_zero()) out.pop_back();
    } else if (!t.coef.is_zero()) {
      out.push_back(std::move(t));
    }
  }
  return out;
}

ModuleVector subtract_multiple(const ModuleVector& v, const Scalar& c, const Monomial& m, const ModuleVector& g,
                               const ModuleOrder& order) {
  ModuleVector out;
  out.reserve(v.size() + g.size());
  std::size_t i = 0, j = 0;
  while (i < v.size() && j < g.size()) {
    Monomial gm = g[j].mono * m;
    auto cmp = order.compare(v[i].mono, v[i].comp, gm, g[j].comp);
    if (cmp == std::strong_ordering::greater) {
      out.push_back(v[i++]);
    } else if (cmp == std::strong_ordering::less) {
      out.push_back(ModuleTerm{gm, g[j].comp, -(g[j].coef * c)});
      ++j;
    } else {
      Scalar s = v[i].coef - g[j].coef * c;
      if (!s.is_zero()) out.push_back(ModuleTerm{gm, v[i].comp, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < v.size(); ++i) out.push_back(v[i]);
  for (; j < g.size(); ++j) out.push_back(ModuleTerm{g[j].mono * m, g[j].comp, -(g[j].coef * c)});
  return out;
}

ModuleVector scale_vector(ModuleVector v, const Scalar& c) {
  for (auto& t : v) t.coef *= c;
  return v;
}

bool is_homogeneous(const ModuleVector& v, const ModuleOrder& order) {
  return std::all_of(v.begin(), v.end(), [&](const ModuleTerm& t) { return order.degree(t) == order.degree(v.front()); });
}

void append_column(std::vector<ModuleTerm>& out, const std::vector<Polynomial>& column, std::size_t offset) {
  for (std::size_t r = 0; r < column.size(); ++r)
    for (const auto& t : column[r].terms()) out.push_back(ModuleTerm{t.mono, static_cast<std::uint32_t>(offset + r), t.coef});
}

std::vector<Polynomial> extract_column(const ModuleVector& v, std::size_t offset, std::size_t rank, const RingPtr& ring) {
  std::vector<std::vector<Term>> parts(rank);
  for (const auto& t : v)
    if (t.comp >= offset && t.comp < offset + rank) parts[t.comp - offset].push_back(Term{t.mono, t.coef});
  std::vector<Polynomial> out;
  out.reserve(rank);
  for (auto& p : parts) out.push_back(Polynomial::from_terms(ring, std::move(p)));
  return out;
}

GroebnerEngine::GroebnerEngine(RingPtr ring, ModuleOrder order, bool skip_upper_blocks)
    : ring_(std::move(ring)), order_(std::move(order)), skip_upper_blocks_(skip_upper_blocks), by_comp_(order_.rank()) {}

std::size_t GroebnerEngine::add(ModuleVector v) {
  if (v.empty()) throw std::invalid_argument("cannot add the zero vector to a basis");
  if (!v.front().coef.is_one()) v = scale_vector(std::move(v), v.front().coef.inverse());
  const std::size_t idx = basis_.size();
  const auto comp = v.front().comp;
  const bool pairable = !(skip_upper_blocks_ && order_.block(comp) > 0);
  if (pairable) {
    for (std::size_t k : by_comp_[comp]) {
      const Monomial& a = basis_[k].front().mono;
      const Monomial& b = v.front().mono;
      if (order_.rank() == 1 && a.coprime(b)) continue;
      Monomial l = Monomial::lcm(a, b);
      queue_.insert(Pair{order_.degree(l, comp), k, idx});
      pending_.insert(key(k, idx));
    }
  }
  basis_.push_back(std::move(v));
  by_comp_[comp].push_back(idx);
  return idx;
}

void GroebnerEngine::adopt(ModuleVector v) {
  if (v.empty()) throw std::invalid_argument("cannot add the zero vector to a basis");
  if (!v.front().coef.is_one()) v = scale_vector(std::move(v), v.front().coef.inverse());
  by_comp_[v.front().comp].push_back(basis_.size());
  basis_.push_back(std::move(v));
}

bool GroebnerEngine::has_pending(int max_degree) const {
  return !queue_.empty() && queue_.begin()->degree <= max_degree;
}

const ModuleVector* GroebnerEngine::find_divisor(const ModuleTerm& t) const {
  for (std::size_t k : by_comp_[t.comp])
    if (basis_[k].front().mono.divides(t.mono)) return &basis_[k];
  return nullptr;
}

bool GroebnerEngine::chain_criterion(const Pair& p, const Monomial& lcm) const {
  const auto comp = basis_[p.i].front().comp;
  for (std::size_t k : by_comp_[comp]) {
    if (k == p.i || k == p.j) continue;
    if (!basis_[k].front().mono.divides(lcm)) continue;
    if (pending_.count(key(p.i, k)) || pending_.count(key(p.j, k))) continue;
    return true;
  }
  return false;
}

ModuleVector GroebnerEngine::s_vector(std::size_t i, std::size_t j) const {
  const auto& f = basis_[i];
  const auto& g = basis_[j];
  Monomial l = Monomial::lcm(f.front().mono, g.front().mono);
  ModuleVector lhs;
  lhs.reserve(f.size());
  Monomial mf = l / f.front().mono;
  for (const auto& t : f) lhs.push_back(ModuleTerm{t.mono * mf, t.comp, t.coef});
  return subtract_multiple(lhs, ring_->field().one(), l / g.front().mono, g, order_);
}

void GroebnerEngine::complete(int max_degree) {
  while (!queue_.empty() && queue_.begin()->degree <= max_degree) {
    Pair p = *queue_.begin();
    queue_.erase(queue_.begin());
    pending_.erase(key(p.i, p.j));
    Monomial l = Monomial::lcm(basis_[p.i].front().mono, basis_[p.j].front().mono);
    if (chain_criterion(p, l)) continue;
    ModuleVector r = reduce(s_vector(p.i, p.j), true);
    if (!r.empty()) add(std::move(r));
  }
}

ModuleVector GroebnerEngine::reduce(ModuleVector v, bool full) const {
  std::size_t k = 0;
  while (k < v.size()) {
    const ModuleVector* g = find_divisor(v[k]);
    if (g == nullptr) {
      if (!full) return v;
      ++k;
      continue;
    }
    Scalar c = v[k].coef;  // divisors are monic
    Monomial m = v[k].mono / g->front().mono;
    v = subtract_multiple(v, c, m, *g, order_);
  }
  return v;
}

std::vector<ModuleVector> GroebnerEngine::reduced_basis() const {
  std::vector<std::size_t> minimal;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const auto& lead = basis_[i].front();
    bool redundant = false;
    for (std::size_t k : by_comp_[lead.comp]) {
      if (k == i) continue;
      const Monomial& other = basis_[k].front().mono;
      if (other.divides(lead.mono) && (!(other == lead.mono) || k < i)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) minimal.push_back(i);
  }
  GroebnerEngine reducer(ring_, order_);
  for (std::size_t i : minimal) {
    reducer.basis_.push_back(basis_[i]);
    reducer.by_comp_[basis_[i].front().comp].push_back(reducer.basis_.size() - 1);
  }
  std::vector<ModuleVector> out;
  out.reserve(minimal.size());
  for (const auto& g : reducer.basis_) {
    ModuleVector tail(g.begin() + 1, g.end());
    tail = reducer.reduce(std::move(tail), true);
    ModuleVector full;
    full.reserve(tail.size() + 1);
    full.push_back(g.front());
    full.insert(full.end(), tail.begin(), tail.end());
    out.push_back(std::move(full));
  }
  std::sort(out.begin(), out.end(), [&](const ModuleVector& a, const ModuleVector& b) {
    return order_.compare(a.front(), b.front()) == std::strong_ordering::less;
  });
  return out;
}

}  // namespace syz
