#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "k3fib/factor.hpp"

using namespace k3fib;

namespace {

MultiPoly P(const char* s) { return MultiPoly::parse(s); }

MultiPoly random_univariate(std::mt19937& rng, Var v, int max_deg) {
  std::uniform_int_distribution<int> deg(1, max_deg);
  std::uniform_int_distribution<int> coeff(-5, 5);
  int d = deg(rng);
  MultiPoly p;
  for (int k = 0; k < d; k++)
    p += MultiPoly::variable(v, k) * rational(coeff(rng));
  p += MultiPoly::variable(v, d) * rational(coeff(rng) | 1);
  return p;
}

MultiPoly random_bivariate(std::mt19937& rng, int max_deg) {
  std::uniform_int_distribution<int> deg(1, max_deg);
  std::uniform_int_distribution<int> tdeg(0, 2);
  std::uniform_int_distribution<int> coeff(-4, 4);
  int d = deg(rng);
  MultiPoly p;
  for (int k = 0; k <= d; k++) {
    Exponents e;
    e[Var::x0] = k;
    e[Var::t] = tdeg(rng);
    int c = k == d ? (coeff(rng) | 1) : coeff(rng);
    p += MultiPoly::monomial(e, rational(c));
  }
  return p;
}

// Homogenize a poly in (x0, t) to (x0, x2, t) with x2 filling the degree.
MultiPoly homogenize(const MultiPoly& p) {
  int d = p.degree(Var::x0);
  MultiPoly out;
  for (const auto& [e, c] : p.terms()) {
    Exponents shifted = e;
    shifted[Var::x2] = d - e[Var::x0];
    out += MultiPoly::monomial(shifted, c);
  }
  return out;
}

}  // namespace

TEST_CASE("valuations and trial division") {
  CHECK(valuation(P("t^3 + t^4"), P("t")) == 3);
  CHECK(valuation(P("t + 1"), P("t")) == 0);
  CHECK(try_divide(P("x0^2 - x2^2"), P("x0 - x2")).has_value());
  CHECK_FALSE(try_divide(P("x0^2 + x2^2"), P("x0 - x2")).has_value());
}

TEST_CASE("primitive part") {
  Rational content;
  MultiPoly pp = primitive_part(P("4/3*t^2 - 2/3*t"), &content);
  CHECK(pp == P("2t^2 - t"));
  CHECK(content == rational(2, 3));
  CHECK(primitive_part(P("-t - 1")) == P("t + 1"));
}

TEST_CASE("univariate gcd") {
  MultiPoly g = gcd_univariate(P("t^2 - 1"), P("t^2 + 2t + 1"), Var::t);
  CHECK(g == P("t + 1"));
  CHECK(gcd_univariate(P("t^2 + 1"), P("t"), Var::t) == P("1"));
  CHECK(gcd_univariate(P("t^3"), MultiPoly(), Var::t) == P("t^3"));

  std::mt19937 rng(3);
  for (int trial = 0; trial < 80; trial++) {
    MultiPoly a = random_univariate(rng, Var::t, 4);
    MultiPoly b = random_univariate(rng, Var::t, 4);
    MultiPoly common = random_univariate(rng, Var::t, 3);
    MultiPoly g2 = gcd_univariate(a * common, b * common, Var::t);
    CHECK(try_divide(g2, primitive_part(common)).has_value());
    CHECK(try_divide(a * common, g2).has_value());
    CHECK(try_divide(b * common, g2).has_value());
  }
}

TEST_CASE("bivariate gcd over Q(t)") {
  MultiPoly g = gcd_in_main(P("t*x0^2 - t"), P("x0^2 + 2x0 + 1"), Var::x0, Var::t);
  CHECK(g == P("x0 + 1"));
  // t-contents are ignored
  CHECK(gcd_in_main(P("t^2*x0"), P("t^3*x0 + t^3"), Var::x0, Var::t) == P("1"));

  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; trial++) {
    MultiPoly a = random_bivariate(rng, 3);
    MultiPoly b = random_bivariate(rng, 3);
    MultiPoly common = random_bivariate(rng, 2);
    MultiPoly g2 = gcd_in_main(a * common, b * common, Var::x0, Var::t);
    CAPTURE(a.str());
    CAPTURE(b.str());
    CAPTURE(common.str());
    // the main-variable part of `common` divides the gcd
    MultiPoly common_pp = gcd_in_main(common, common, Var::x0, Var::t);
    CHECK(gcd_in_main(g2, common, Var::x0, Var::t) == common_pp);
  }
}

TEST_CASE("squarefree decomposition") {
  auto factors =
      squarefree_decomposition(P("t^2") * P("t+1") * P("t+1") * P("t-3"), Var::t);
  // (t-3) once, t^2(t+1)^2 twice
  REQUIRE(factors.size() == 2);
  CHECK(factors[0].second == 1);
  CHECK(factors[0].first == P("t - 3"));
  CHECK(factors[1].second == 2);
  CHECK(factors[1].first == P("t^2 + t"));

  std::mt19937 rng(11);
  for (int trial = 0; trial < 40; trial++) {
    MultiPoly p = random_univariate(rng, Var::t, 3);
    MultiPoly q = random_univariate(rng, Var::t, 2);
    MultiPoly product = p * q * q;
    MultiPoly rebuilt = MultiPoly::constant(1);
    for (const auto& [factor, mult] : squarefree_decomposition(product, Var::t))
      rebuilt *= pow(factor, mult);
    // rebuilt agrees with the primitive part of the product
    CHECK(primitive_part(rebuilt) == primitive_part(product));
  }
}

TEST_CASE("split by valuation") {
  MultiPoly d = P("t") * P("t - 1") * P("t + 2");  // squarefree
  MultiPoly f = P("t^2") * P("t - 1");             // valuations 2, 1, 0
  auto groups = split_by_valuation(d, f, Var::t);
  REQUIRE(groups.size() == 3);
  CHECK(groups[0] == std::pair(P("t + 2"), 0));
  CHECK(groups[1] == std::pair(P("t - 1"), 1));
  CHECK(groups[2] == std::pair(P("t"), 2));

  auto flat = split_by_valuation(d, P("5"), Var::t);
  REQUIRE(flat.size() == 1);
  CHECK(flat[0].second == 0);
}

TEST_CASE("square part decomposition examples") {
  MultiPoly r = P("x2^2") * P("t*x0^2 + x2^2") * P("x0^2 + t^3*x2^2");
  SquarePartDecomposition d = square_part_decompose(r);
  CHECK(d.a == P("x2"));
  CHECK(d.b == P("t*x0^4 + t^4*x0^2*x2^2 + x0^2*x2^2 + t^3*x2^4"));
  CHECK(d.c == P("1"));

  SquarePartDecomposition plain = square_part_decompose(P("x0^2 + x2^2"));
  CHECK(plain.a == P("1"));
  CHECK(plain.b == P("x0^2 + x2^2"));
  CHECK(plain.c == P("1"));

  SquarePartDecomposition pure = square_part_decompose(P("t^2*x0^4"));
  CHECK(pure.a == P("x0^2"));
  CHECK(pure.b == P("1"));
  CHECK(pure.c == P("t^2"));
}

TEST_CASE("square part rejects bad input") {
  CHECK_THROWS_AS(square_part_decompose(P("x0^2 + x2")), Error);
  CHECK_THROWS_AS(square_part_decompose(P("x0*x1")), Error);
  CHECK_THROWS_AS(square_part_decompose(MultiPoly()), Error);
}

TEST_CASE("decomposition reproduces the input exactly") {
  std::mt19937 rng(19);
  for (int trial = 0; trial < 100; trial++) {
    MultiPoly a = homogenize(random_bivariate(rng, 2));
    MultiPoly b = homogenize(random_bivariate(rng, 3));
    MultiPoly c = random_univariate(rng, Var::t, 2);
    MultiPoly r = a * a * b * c;
    SquarePartDecomposition d = square_part_decompose(r);
    CHECK(d.a * d.a * d.b * d.c == r);
    CHECK(d.c.degree(Var::x0) <= 0);
    CHECK(d.c.degree(Var::x2) <= 0);
    // b is squarefree over Q(t)
    MultiPoly b_affine = d.b.substitute(Var::x2, MultiPoly::constant(1));
    if (b_affine.degree(Var::x0) > 0) {
      MultiPoly g = gcd_in_main(b_affine, b_affine.derivative(Var::x0), Var::x0,
                                Var::t);
      CHECK(g.degree(Var::x0) == 0);
    }
  }
}
