#include <random>

#include "doctest.h"
#include "syzkit/errors.hpp"
#include "syzkit/polynomial.hpp"
#include "test_support.hpp"

using namespace syz;
using syz::testing::P;

TEST_CASE("scalar arithmetic") {
  Scalar a = Scalar::rational(6, -4);
  CHECK(a.to_string() == "-3/2");
  CHECK((a * a.inverse()).is_one());
  Scalar r = Scalar::modular(-1, 7);
  CHECK(r.as_residue().value == 6);
  CHECK((r * r).is_one());
  CHECK((Scalar::modular(3, 7) / Scalar::modular(5, 7)) * Scalar::modular(5, 7) == Scalar::modular(3, 7));
  CHECK_THROWS_AS(Scalar::modular(0, 7).inverse(), std::domain_error);
  CHECK_THROWS_AS(a + r, std::invalid_argument);
  CHECK(is_prime(32003));
  CHECK_FALSE(is_prime(32001));
}

TEST_CASE("field and ring construction") {
  CHECK_THROWS_AS(Field::prime(12), std::invalid_argument);
  CHECK_THROWS_AS(make_ring({"x", "x"}), std::invalid_argument);
  CHECK_THROWS_AS(make_ring({"2x"}), std::invalid_argument);
  auto r = make_ring({"x", "y"});
  CHECK(r->field().characteristic() == 32003);
  auto big = adjoin_variable(r, "y");
  CHECK(big->num_vars() == 3);
  CHECK(big->variable_names()[2] != "y");
}

TEST_CASE("poly_op examples") {
  auto q = make_ring({"x", "y"}, Field::rational());
  CHECK(P(q, "x + y") + P(q, "x - y") == P(q, "2*x"));
  CHECK(P(q, "x + y") * P(q, "x - y") == P(q, "x^2 - y^2"));
  auto f2 = make_ring({"x", "y"}, Field::prime(2));
  CHECK((P(f2, "x + y") + P(f2, "x + y")).is_zero());
  CHECK(poly_op(P(q, "x"), P(q, "y"), PolyOpKind::mul) == P(q, "x*y"));
  auto other = make_ring({"x", "z"}, Field::rational());
  CHECK_THROWS_AS(P(q, "x") + P(other, "x"), RingMismatch);
}

TEST_CASE("monomial_compare examples") {
  CHECK(grevlex_compare({2, 0}, {1, 1}) == std::strong_ordering::greater);
  CHECK(grevlex_compare({1, 0}, {1, 0}) == std::strong_ordering::equal);
  CHECK(grevlex_compare({0, 3}, {2, 1}) == std::strong_ordering::less);
  // x*z < y^2 in grevlex(x,y,z)
  CHECK(grevlex_compare({1, 0, 1}, {0, 2, 0}) == std::strong_ordering::less);
  CHECK_THROWS_AS(grevlex_compare({1, 0}, {1, 0, 0}), std::invalid_argument);
}

TEST_CASE("is_homogeneous examples") {
  auto r = make_ring({"x", "y"});
  CHECK(P(r, "x^2 + x*y").is_homogeneous());
  CHECK_FALSE(P(r, "x^2 + y").is_homogeneous());
  CHECK(Polynomial(r).is_homogeneous());
}

TEST_CASE("parse_poly examples and errors") {
  auto r = make_ring({"x", "y"}, Field::rational());
  Polynomial f = P(r, "x^2 + x*y");
  CHECK(f.size() == 2);
  CHECK(f.to_string() == "x^2 + x*y");
  CHECK(P(r, "3*x - 3*x").is_zero());
  CHECK(P(r, "x*y^2").lead_monomial() == Monomial{1, 2});
  CHECK(P(r, "-1/2*y + 1").to_string() == "-1/2*y + 1");
  CHECK_THROWS_AS(P(r, ""), ParseError);
  CHECK_THROWS_AS(P(r, "x + w"), ParseError);
  CHECK_THROWS_AS(P(r, "x^"), ParseError);
  CHECK_THROWS_AS(P(r, "x^-1"), ParseError);
  try {
    P(r, "x + w");
  } catch (const ParseError& e) {
    CHECK(e.column() == 5);
  }
}

TEST_CASE("ring axioms on random triples") {
  std::mt19937_64 rng(11);
  for (auto field : {Field::rational(), Field::prime(32003), Field::prime(5)}) {
    auto r = make_ring({"x", "y", "z"}, field);
    for (int trial = 0; trial < 1000; ++trial) {
      Polynomial a = testing::random_poly(rng, r, 4, 3);
      Polynomial b = testing::random_poly(rng, r, 4, 3);
      Polynomial c = testing::random_poly(rng, r, 4, 3);
      REQUIRE((a + b) + c == a + (b + c));
      REQUIRE((a * b) * c == a * (b * c));
      REQUIRE(a * (b + c) == a * b + a * c);
      REQUIRE(a + b == b + a);
      REQUIRE(a * b == b * a);
      REQUIRE((a - a).is_zero());
    }
  }
}

TEST_CASE("parse of print is the identity") {
  std::mt19937_64 rng(12);
  for (auto field : {Field::rational(), Field::prime(32003)}) {
    auto r = make_ring({"x", "y", "z"}, field);
    for (int trial = 0; trial < 500; ++trial) {
      Polynomial a = testing::random_poly(rng, r, 5, 4);
      if (field.is_rational()) a = a.scaled(Scalar::rational(1, 1 + static_cast<long long>(rng() % 5)));
      REQUIRE(P(r, a.to_string()) == a);
    }
  }
}

TEST_CASE("grevlex is a total monomial order") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 2000; ++trial) {
    Monomial a = testing::random_monomial(rng, 3, 3);
    Monomial b = testing::random_monomial(rng, 3, 3);
    Monomial c = testing::random_monomial(rng, 3, 3);
    auto ab = grevlex_compare(a, b);
    REQUIRE(grevlex_compare(b, a) == 0 <=> ab);
    REQUIRE((ab == 0) == (a == b));
    if (ab < 0 && grevlex_compare(b, c) < 0) REQUIRE(grevlex_compare(a, c) < 0);
    REQUIRE(grevlex_compare(a * c, b * c) == ab);
    if (a.degree() < b.degree()) REQUIRE(ab < 0);
  }
}
