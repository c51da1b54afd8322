#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "syzkit/errors.hpp"
#include "syzkit/resolution.hpp"
#include "test_support.hpp"

using namespace syz;
using syz::testing::P;

namespace {

QuotientRing quotient(const RingPtr& r, std::initializer_list<const char*> gens) {
  std::vector<Polynomial> g;
  for (const char* s : gens) g.push_back(P(r, s));
  return QuotientRing(Ideal(r, std::move(g)));
}

PresentedModule cyclic(const QuotientRing& q, std::initializer_list<const char*> gens) {
  std::vector<Polynomial> g;
  for (const char* s : gens) g.push_back(P(q.ambient(), s));
  return cyclic_module(q, g);
}

ModuleMap row_map(const QuotientRing& q, std::initializer_list<const char*> entries) {
  std::vector<Column> cols;
  for (const char* s : entries) cols.push_back(Column{P(q.ambient(), s)});
  return map_from_columns(FreeModule{{0}}, std::move(cols));
}

std::vector<std::string> column_text(const Column& c) {
  std::vector<std::string> out;
  for (const auto& e : c) out.push_back(e.to_string());
  return out;
}

// Each family lies in the span of the other.
bool same_span(const std::vector<Column>& a, const std::vector<Column>& b, const std::vector<int>& shifts,
               const QuotientRing& q) {
  return minimalize_generators(a, shifts, q, b).empty() && minimalize_generators(b, shifts, q, a).empty();
}

LengthValue length_of(const PresentedModule& m) {
  return summarize_hilbert(module_hilbert_numerator(m), m.ring.num_vars()).length;
}

}  // namespace

TEST_CASE("quotient ring validation") {
  auto r = make_ring({"x", "y"});
  CHECK_THROWS_AS(quotient(r, {"x^2 + y"}), NotHomogeneous);
  CHECK_THROWS_AS(quotient(r, {"1"}), UnitIdeal);
  auto q = quotient(r, {"x^2", "x*y"});
  CHECK(q.dim() == 1);
  CHECK(q.reduce(P(r, "x^2 + y^2")) == P(r, "y^2"));
}

TEST_CASE("syzygy_generators examples") {
  auto r = make_ring({"x", "y"});
  auto q = quotient(r, {"x^2", "x*y"});
  ModuleMap k1 = syzygy_generators(row_map(q, {"y"}), q);
  auto keep = minimalize_generators(k1.columns, k1.target.shifts, q);
  REQUIRE(keep.size() == 1);
  CHECK(column_text(k1.columns[keep[0]]) == std::vector<std::string>{"x"});

  auto qxy = quotient(r, {"x*y"});
  ModuleMap k2 = syzygy_generators(row_map(qxy, {"x", "y"}), qxy);
  auto keep2 = minimalize_generators(k2.columns, k2.target.shifts, qxy);
  CHECK(keep2.size() == 2);
  std::vector<Column> expected{{P(r, "y"), Polynomial(r)}, {Polynomial(r), P(r, "x")}};
  CHECK(same_span(k2.columns, expected, k2.target.shifts, qxy));

  auto s = QuotientRing::polynomial(r);
  ModuleMap k3 = syzygy_generators(row_map(s, {"x", "y"}), s);
  auto keep3 = minimalize_generators(k3.columns, k3.target.shifts, s);
  REQUIRE(keep3.size() == 1);
  Column koszul = k3.columns[keep3[0]];
  CHECK((koszul[0] * P(r, "x") + koszul[1] * P(r, "y")).is_zero());
  CHECK(koszul[0].total_degree() == 1);
}

TEST_CASE("minimalize_generators examples") {
  auto r = make_ring({"x", "y"});
  auto q = quotient(r, {"x*y"});
  std::vector<Column> cols{{P(r, "y"), Polynomial(r)}, {Polynomial(r), P(r, "x")}, {P(r, "y"), P(r, "-x")}};
  CHECK(minimalize_generators(cols, {1, 1}, q) == std::vector<std::size_t>{0, 1});
  CHECK(minimalize_generators({{P(r, "x")}}, {0}, q) == std::vector<std::size_t>{0});
  CHECK(minimalize_generators({}, {0}, q).empty());
  CHECK_THROWS_AS(minimalize_generators({{P(r, "x + y^2")}}, {0}, q), NotHomogeneous);
}

TEST_CASE("resolve examples") {
  auto r = make_ring({"x", "y"});
  auto ex12 = quotient(r, {"x^2", "x*y"});
  auto res = resolve(cyclic(ex12, {"y"}), 3);
  CHECK(res.betti == std::vector<int>{1, 1, 1, 2});
  CHECK_FALSE(res.terminated);

  auto s = QuotientRing::polynomial(r);
  auto koszul = resolve(cyclic(s, {"x", "y"}), 5);
  CHECK(koszul.betti == std::vector<int>{1, 2, 1});
  CHECK(koszul.terminated);

  auto qxy = quotient(r, {"x*y"});
  auto periodic = resolve(cyclic(qxy, {"x"}), 6);
  CHECK(periodic.betti == std::vector<int>{1, 1, 1, 1, 1, 1, 1});

  for (const auto* res_ptr : {&res, &koszul, &periodic}) {
    for (std::size_t i = 0; i + 1 < res_ptr->maps.size(); ++i) {
      ModuleMap c = compose(res_ptr->maps[i], res_ptr->maps[i + 1], res_ptr->ring);
      for (const auto& col : c.columns) CHECK(is_zero_column(col));
    }
    for (const auto& m : res_ptr->maps) CHECK(is_minimal(m));
  }
}

TEST_CASE("resolve trims a non-minimal presentation") {
  auto r = make_ring({"x", "y"});
  auto s = QuotientRing::polynomial(r);
  // coker [[1, x], [0, y]] ≅ S/(y) after eliminating the first generator... shifted.
  ModuleMap p = map_from_columns(FreeModule{{0, 0}}, {{P(r, "1"), Polynomial(r)}, {P(r, "x"), P(r, "y")}});
  auto res = resolve(PresentedModule{s, p}, 3);
  CHECK(res.betti == std::vector<int>{1, 1});
  CHECK(res.terminated);
}

TEST_CASE("syzygy_module examples") {
  auto r = make_ring({"x", "y"});
  auto ex12 = quotient(r, {"x^2", "x*y"});
  auto res = resolve(cyclic(ex12, {"y"}), 3);
  auto syz2 = syzygy_module(res, 2);
  REQUIRE(syz2.num_generators() == 1);
  std::vector<std::string> entries;
  for (const auto& c : syz2.presentation.columns) entries.push_back(c[0].to_string());
  CHECK(entries == std::vector<std::string>{"y", "x"});
  CHECK(length_of(syz2) == LengthValue::finite(1));
  CHECK_THROWS_AS(syzygy_module(res, 3), std::out_of_range);

  auto s = QuotientRing::polynomial(r);
  auto koszul = resolve(cyclic(s, {"x", "y"}), 5);
  CHECK(syzygy_module(koszul, 3).has_no_generators());
  CHECK(syzygy_module(koszul, 2).num_generators() == 1);
  CHECK(syzygy_module(koszul, 2).presentation.cols() == 0);

  auto qxy = quotient(r, {"x*y"});
  auto periodic = resolve(cyclic(qxy, {"x"}), 6);
  auto even = syzygy_module(periodic, 2);
  REQUIRE(even.presentation.cols() == 1);
  CHECK(even.presentation.columns[0][0].to_string() == "x");
  auto odd = syzygy_module(periodic, 1);
  CHECK(odd.presentation.columns[0][0].to_string() == "y");
}

TEST_CASE("betti_table examples") {
  auto r = make_ring({"x", "y"});
  auto qxy = quotient(r, {"x*y"});
  CHECK(betti_table(resolve(cyclic(qxy, {"x", "y"}), 3)).total == std::vector<int>{1, 2, 2, 2});
  auto ex12 = quotient(r, {"x^2", "x*y"});
  CHECK(betti_table(resolve(cyclic(ex12, {"y"}), 3)).total == std::vector<int>{1, 1, 1, 2});
}

TEST_CASE("homology examples") {
  auto r = make_ring({"x", "y"});
  auto q = quotient(r, {"x^2", "x*y"});
  ModuleMap zero_to_r{FreeModule{}, FreeModule{{0}}, {}};
  ModuleMap r_to_zero{FreeModule{{0}}, FreeModule{}, {Column{}}};
  auto h0 = homology(zero_to_r, r_to_zero, q);
  CHECK(h0.num_generators() == 1);
  CHECK(h0.presentation.cols() == 0);

  auto hx = homology(row_map(q, {"x"}), r_to_zero, q);
  REQUIRE(hx.num_generators() == 1);
  REQUIRE(hx.presentation.cols() == 1);
  CHECK(hx.presentation.columns[0][0].to_string() == "x");

  // R(-1) --y--> R --x--> R(1)
  ModuleMap by_x = map_from_columns(FreeModule{{-1}}, {{P(r, "x")}});
  auto h = homology(row_map(q, {"y"}), by_x, q);
  CHECK(h.num_generators() == 1);
  CHECK(length_of(h) == LengthValue::finite(1));

  ModuleMap by_y = map_from_columns(FreeModule{{-1}}, {{P(r, "y")}});
  CHECK_THROWS_AS(homology(row_map(q, {"y"}), by_y, q), std::invalid_argument);
  CHECK_THROWS_AS(homology(row_map(q, {"y"}), row_map(q, {"x"}), q), std::invalid_argument);
}

TEST_CASE("tor examples") {
  auto r = make_ring({"x", "y"});
  auto q = quotient(r, {"x^2", "x*y"});
  auto k = cyclic(q, {"x", "y"});
  CHECK(length_of(tor(k, k, 0)) == LengthValue::finite(1));
  auto t1 = tor(cyclic(q, {"y"}), cyclic(q, {"x"}), 1);
  CHECK(t1.has_no_generators());
  auto m = cyclic(q, {"y"});
  std::vector<std::uint64_t> lengths, sym;
  for (int i = 0; i <= 3; ++i) {
    lengths.push_back(length_of(tor(m, k, i)).value());
    sym.push_back(length_of(tor(k, m, i)).value());
  }
  CHECK(lengths == std::vector<std::uint64_t>{1, 1, 1, 2});
  CHECK(sym == lengths);
  CHECK_THROWS_AS(tor(m, k, -1), std::invalid_argument);
}

TEST_CASE("syzygy generators span the brute-force kernel up to degree 6") {
  std::mt19937_64 rng(31);
  auto r = make_ring({"x", "y", "z"});
  for (int trial = 0; trial < 25; ++trial) {
    QuotientRing q = testing::random_quotient(rng, r);
    ModuleMap a = testing::random_map(rng, q, 1 + rng() % 2, 1 + rng() % 3);
    ModuleMap k = syzygy_generators(a, q);
    for (const auto& col : compose(a, k, q).columns) REQUIRE(is_zero_column(col));
    for (int d = 0; d <= 6; ++d)
      REQUIRE(oracle::span_piece(k.columns, k.source.shifts, a.source.shifts, q, d) == oracle::kernel_piece(a, q, d));
  }
}

TEST_CASE("resolutions are exact and minimal, Tor matches Betti numbers, order does not matter") {
  std::mt19937_64 rng(32);
  auto r = make_ring({"x", "y", "z"});
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Polynomial> ideal_gens, module_gens;
    for (int k = 0; k < 1 + static_cast<int>(rng() % 3); ++k)
      ideal_gens.push_back(Polynomial::monomial(r, testing::random_monomial(rng, 3, 2)));
    ideal_gens.erase(std::remove_if(ideal_gens.begin(), ideal_gens.end(), [](const Polynomial& p) { return p.is_constant(); }),
                     ideal_gens.end());
    QuotientRing q{Ideal(r, ideal_gens)};
    for (int k = 0; k < 1 + static_cast<int>(rng() % 3); ++k) module_gens.push_back(testing::random_form(rng, r, 1 + rng() % 2, 2));
    PresentedModule m = cyclic_module(q, module_gens);
    auto res = resolve(m, 3);
    for (std::size_t i = 0; i + 1 < res.maps.size(); ++i)
      for (const auto& col : compose(res.maps[i], res.maps[i + 1], q).columns) REQUIRE(is_zero_column(col));
    for (const auto& f : res.maps) REQUIRE(is_minimal(f));

    PresentedModule k = cyclic_module(q, Ideal::maximal(r).generators());
    for (std::size_t i = 0; i < res.betti.size() && i <= 2; ++i)
      REQUIRE(length_of(tor(m, k, static_cast<int>(i))) == LengthValue::finite(res.betti[i]));

    std::shuffle(module_gens.begin(), module_gens.end(), rng);
    REQUIRE(resolve(cyclic_module(q, module_gens), 3).betti == res.betti);
  }
}
