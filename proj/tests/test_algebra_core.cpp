#include <doctest.h>

#include "support.hpp"

using namespace testsupport;

TEST_CASE("polynomial arithmetic basics") {
  auto R = qring({"x", "y"});
  CHECK(qp("(x+y)*(x-y)", R) == qp("x^2-y^2", R));
  Polynomial p = qp("3*x^2*y - 1/2*x + 5", R);
  CHECK(p + Polynomial::zero(R) == p);
  CHECK(p - p == Polynomial::zero(R));
}

TEST_CASE("freshman's dream over F_5") {
  auto R5 = make_poly_ring(CoeffField::prime_field(5), {"x"});
  Polynomial lhs = parse_polynomial("(x-2)^5", R5);
  // expected via the binomial theorem, Pascal's triangle mod 5
  long pascal[6] = {1, 5, 10, 10, 5, 1};
  std::vector<Term> terms;
  long pw = 1;  // (-2)^k
  for (int k = 0; k <= 5; ++k) {
    long c = pascal[k] * pw;
    terms.push_back({Monomial::var(1, 0, static_cast<std::uint32_t>(5 - k)),
                     Coeff::residue(c, 5)});
    pw *= -2;
  }
  Polynomial rhs =
      Polynomial::from_terms(R5, MonomialOrder::grevlex(), terms);
  CHECK(lhs == rhs);
  CHECK(lhs == parse_polynomial("x^5-2", R5));
}

TEST_CASE("ring axioms on random triples, both fields") {
  for (bool rational : {true, false}) {
    RingPtr R = rational ? qring({"x", "y"})
                         : make_poly_ring(CoeffField::prime_field(7),
                                          {"x", "y"});
    std::mt19937_64 rng(rational ? 11 : 12);
    for (int i = 0; i < 1000; ++i) {
      Polynomial a = random_poly(rng, R, 3, 3);
      Polynomial b = random_poly(rng, R, 3, 3);
      Polynomial c = random_poly(rng, R, 3, 3);
      REQUIRE((a * b) * c == a * (b * c));
      REQUIRE(a * (b + c) == a * b + a * c);
      REQUIRE(a * b == b * a);
      REQUIRE((a + b) + c == a + (b + c));
    }
  }
}

TEST_CASE("multivariate gcd examples") {
  auto R = qring({"x", "y"});
  CHECK(poly_gcd(qp("x^2-y^2", R), qp("x-y", R)) == qp("x-y", R));
  CHECK(poly_gcd(qp("x^2", R), qp("y^2", R)) == qp("1", R));
  CHECK(poly_gcd(qp("x^2*y + x*y^2", R), qp("x*y", R)) == qp("x*y", R));
  // confirm by exact division
  CHECK(exact_quotient(qp("x^2*y + x*y^2", R), qp("x*y", R)).has_value());
  CHECK(poly_gcd(qp("x^2-y^2", R), Polynomial::zero(R)) ==
        qp("x^2-y^2", R));
}

TEST_CASE("gcd divides both and is divisible by common divisors") {
  auto R = qring({"x", "y"});
  std::mt19937_64 rng(21);
  int nontrivial = 0;
  for (int i = 0; i < 40; ++i) {
    Polynomial f = random_nonzero_poly(rng, R, 2, 2);
    Polynomial g = random_nonzero_poly(rng, R, 2, 2);
    Polynomial h = random_nonzero_poly(rng, R, 2, 2);
    Polynomial a = f * g;
    Polynomial b = f * h;
    Polynomial d = poly_gcd(a, b);
    REQUIRE(divides_exactly(d, a));
    REQUIRE(divides_exactly(d, b));
    if (!f.is_constant()) {
      REQUIRE(divides_exactly(f.monic(), d * poly_gcd(g, h)));
      ++nontrivial;
    }
  }
  CHECK(nontrivial > 10);
}

TEST_CASE("squarefree part") {
  auto R = qring({"x", "y"});
  CHECK(squarefree_part(qp("x^2*y", R)) == qp("x*y", R));
  CHECK(squarefree_part(qp("(x-y)^3*(x+y)", R)) ==
        qp("(x-y)*(x+y)", R).monic());
  // char p failure: derivative vanishes
  auto R5 = make_poly_ring(CoeffField::prime_field(5), {"x"});
  CHECK_THROWS_AS(squarefree_part(parse_polynomial("x^5-2", R5)), Error);
  // multiplicity divisible by p with a separable cofactor also fails
  CHECK_THROWS_AS(squarefree_part(parse_polynomial("(x-2)^5*(x-1)", R5)),
                  Error);
  // clean multiplicities are fine in char p
  CHECK(squarefree_part(parse_polynomial("(x-1)^2*(x-2)", R5)) ==
        parse_polynomial("(x-1)*(x-2)", R5));
}

TEST_CASE("radical part handles p-th powers") {
  auto R5 = make_poly_ring(CoeffField::prime_field(5), {"x"});
  CHECK(radical_part(parse_polynomial("x^5-2", R5)) ==
        parse_polynomial("x-2", R5).monic());
  CHECK(radical_part(parse_polynomial("(x-2)^5*(x-1)", R5)) ==
        parse_polynomial("(x-2)*(x-1)", R5).monic());
}

TEST_CASE("squarefree property: result is squarefree and divides the input") {
  auto R = qring({"x", "y"});
  std::mt19937_64 rng(31);
  for (int i = 0; i < 25; ++i) {
    Polynomial f = random_nonzero_poly(rng, R, 2, 2);
    Polynomial g = random_nonzero_poly(rng, R, 2, 2);
    Polynomial a = f * f * g;
    if (a.is_constant()) continue;
    Polynomial sf = squarefree_part(a);
    REQUIRE(radical_part(sf) == sf);
    // distinct factors of a all appear in sf
    Polynomial r = a;
    while (true) {
      Polynomial d = poly_gcd(r, sf);
      if (d.is_constant()) break;
      r = *exact_quotient(r, d);
    }
    REQUIRE(r.is_constant());
  }
}

TEST_CASE("substitution") {
  auto Rx = qring({"x"});
  auto Ry = make_ring(CoeffField::rationals(), {"y"});
  RationalFunction img = rf("1", "y", Ry);
  RationalFunction s = substitute(qp("x^2+1", Rx), {img});
  CHECK(s == rf("y^2+1", "y^2", Ry));
  // identity
  auto Rxp = make_ring(CoeffField::rationals(), {"x"});
  RationalFunction idimg = rf("x", "1", Rxp);
  CHECK(substitute(qp("x", Rx), {idimg}) == idimg);
}

TEST_CASE("parser grammar") {
  auto R = qring({"x", "y"});
  CHECK(qp("x^2 - 1/2*x + 5", R).to_string() == "x^2 - 1/2*x + 5");
  CHECK_THROWS_AS(qp("2x", R), ParseError);
  CHECK_THROWS_AS(qp("x y", R), ParseError);
  CHECK_THROWS_AS(qp("(x+1)(x-1)", R), ParseError);
  CHECK_THROWS_AS(qp("z+1", R), ParseError);
  CHECK_THROWS_AS(qp("1/0", R), ParseError);
  try {
    qp("x + \n 2z", R);
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() >= 2);
  }
  // unary minus and explicit products
  CHECK(qp("-x^2 + -1*y", R) == qp("-1*x^2 - y", R));
  // unbounded exponents are rejected loudly, not truncated
  CHECK_THROWS_AS(qp("x^99999999999999999999", R), ParseError);
  CHECK_THROWS_AS(qp("x^2000000", R), ParseError);
}

TEST_CASE("canonical form round trip, both fields") {
  for (bool rational : {true, false}) {
    RingPtr R = rational ? qring({"x", "y", "z"})
                         : make_poly_ring(CoeffField::prime_field(13),
                                          {"x", "y", "z"});
    std::mt19937_64 rng(rational ? 41 : 42);
    for (int i = 0; i < 300; ++i) {
      Polynomial p = random_poly(rng, R, 4, 5);
      REQUIRE(parse_polynomial(p.to_string(), R) == p);
    }
  }
}

TEST_CASE("rational function canonical form") {
  auto R = make_ring(CoeffField::rationals(), {"x", "y"});
  RationalFunction g = rf("x^2-y^2", "x-y", R);
  CHECK(g == RationalFunction(qp("x+y", R)));
  CHECK(rf("2*x", "2", R) == RationalFunction(qp("x", R)));
  // denominator normalized monic
  RationalFunction h = rf("x", "2*y", R);
  CHECK(h.den() == qp("y", R));
  CHECK(h.num() == qp("1/2*x", R));
  CHECK_THROWS_AS(rf("x", "0", R), Error);
}

TEST_CASE("prime field arithmetic") {
  Coeff a = Coeff::residue(3, 7);
  CHECK((a.inverse() * a).is_one());
  CHECK(Coeff::residue(-1, 7) == Coeff::residue(6, 7));
  CHECK(a.pow(-2) == Coeff::residue(4, 7));  // 3^2=2, 2^{-1}=4
  CHECK_THROWS_AS(CoeffField::prime_field(6), Error);
  CHECK_THROWS_AS(Coeff::residue(1, 7) / Coeff::residue(0, 7), Error);
}
