#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "k3fib/resultant.hpp"
#include "k3fib/weierstrass.hpp"

using namespace k3fib;

namespace {

MultiPoly P(const char* s) { return MultiPoly::parse(s); }

GenusOneQuartic quartic_from_affine(const MultiPoly& affine) {
  // homogenize a degree <= 4 poly in (x0, t) to x0/x2 degree 4
  MultiPoly b;
  for (const auto& [e, c] : affine.terms()) {
    Exponents shifted = e;
    shifted[Var::x2] = 4 - e[Var::x0];
    b += MultiPoly::monomial(shifted, c);
  }
  return GenusOneQuartic(MultiPoly::constant(1), b);
}

// Jacobian of the binary quartic s4 u^4 + ... + s0: Y^2 = X^3 - 27 I X - 27 J
// with the classical invariants I and J. Test-side oracle.
WeierstrassModel jacobian_of(const std::array<MultiPoly, 5>& s) {
  const MultiPoly &e = s[0], &d = s[1], &c = s[2], &b = s[3], &a = s[4];
  MultiPoly I = rational(12) * a * e - rational(3) * b * d + c * c;
  MultiPoly J = rational(72) * a * c * e - rational(27) * a * d * d -
                rational(27) * b * b * e + rational(9) * b * c * d -
                rational(2) * c * c * c;
  return WeierstrassModel::short_form(rational(-27) * I, rational(-27) * J);
}

std::array<MultiPoly, 5> affine_coefficients(const GenusOneQuartic& q) {
  std::array<MultiPoly, 5> s;
  for (int k = 0; k <= 4; k++) {
    MultiPoly coeff;
    for (const auto& [e, c] : q.b.terms())
      if (e[Var::x0] == k) {
        Exponents stripped = e;
        stripped[Var::x0] = 0;
        stripped[Var::x2] = 0;
        coeff += MultiPoly::monomial(stripped, c);
      }
    s[static_cast<std::size_t>(k)] = q.c * coeff;
  }
  return s;
}

const DoubleCoverModel& running_cover() {
  static const DoubleCoverModel cover(P("x0^2*x1 + x2^3"), P("x0^2*x2 + x1^3"));
  return cover;
}

}  // namespace

TEST_CASE("model validation") {
  CHECK_THROWS_AS(WeierstrassModel::short_form(P("x0"), P("1")), Error);
  // delta = 0
  CHECK_THROWS_AS(WeierstrassModel::short_form(P("-3"), P("2")), Error);
  CHECK_THROWS_AS(WeierstrassModel::two_torsion_form(P("t"), MultiPoly()), Error);
  WeierstrassModel w = WeierstrassModel::two_torsion_form(P("t"), P("1"));
  CHECK(w.has_two_torsion_form());
  CHECK_THROWS_AS(w.A(), Error);
}

TEST_CASE("c4^3 - c6^2 = 1728 delta on both forms") {
  WeierstrassModel tt = WeierstrassModel::two_torsion_form(P("t^2+1"), P("t"));
  WeierstrassModel sh = WeierstrassModel::short_form(P("t"), P("t+2"));
  for (const WeierstrassModel& w : {tt, sh}) {
    MultiPoly c4 = w.c4(), c6 = w.c6();
    CHECK(c4 * c4 * c4 - c6 * c6 == rational(1728) * w.discriminant());
  }
}

TEST_CASE("double cover and pencil validation") {
  CHECK_NOTHROW(running_cover());
  CHECK_THROWS_AS(DoubleCoverModel(P("x0^2"), P("x1^3")), Error);  // not cubic
  CHECK_THROWS_AS(DoubleCoverModel(P("x0^3 + t*x1^3"), P("x1^3")), Error);
  // common factor x0
  CHECK_THROWS_AS(DoubleCoverModel(P("x0*x1^2"), P("x0*x2^2 + x0^3")), Error);
  CHECK_THROWS_AS(PencilModel(P("x1 - x2")), Error);          // no t
  CHECK_THROWS_AS(PencilModel(P("x1 - t^2*x2")), Error);      // quadratic in t
  CHECK_THROWS_AS(PencilModel(P("x1 - t*x2^2")), Error);      // not homogeneous
  CHECK_THROWS_AS(PencilModel(P("x0 - t*x2")), Error);        // misses x1
  CHECK_THROWS_AS(PencilModel(P("x0^2*x1^2 - t*x2^4")), Error);  // degree 4
  CHECK_NOTHROW(PencilModel(P("x1 - t*x2")));
  CHECK(PencilModel(P("x1^2 - t*x0*x2")).e == 2);
}

TEST_CASE("extraction: pencil of lines through (1:0:0)") {
  ExtractionResult r =
      extract_genus_one_fibration(running_cover(), PencilModel(P("x1 - t*x2")));
  CHECK(r.a == P("x2"));
  CHECK(r.quartic.c == P("1"));
  CHECK(r.quartic.b == P("t*x0^4 + t^4*x0^2*x2^2 + x0^2*x2^2 + t^3*x2^4"));
}

TEST_CASE("extraction: pencil of lines through (0:0:1)") {
  ExtractionResult r =
      extract_genus_one_fibration(running_cover(), PencilModel(P("x1 - t*x0")));
  CHECK(r.a == P("x0"));
  CHECK(r.quartic.c == P("1"));
  CHECK(r.quartic.b == P("t*x0^3 + x2^3") * P("x2 + t^3*x0"));
}

TEST_CASE("extraction output multiplies back to the resultant") {
  for (const char* pencil : {"x1 - t*x2", "x1 - t*x0", "x1 - t*x0 - x2",
                             "x1^2 - t*x0*x2"}) {
    CAPTURE(pencil);
    MultiPoly h = P(pencil);
    MultiPoly r = resultant(running_cover().f3 * running_cover().g3, h, Var::x1);
    try {
      ExtractionResult e =
          extract_genus_one_fibration(running_cover(), PencilModel(h));
      CHECK(e.a * e.a * e.quartic.b * e.quartic.c == r);
    } catch (const Error& err) {
      CHECK(err.code() == errc::not_a_conic_bundle_pencil);
    }
  }
}

TEST_CASE("extraction: conic pencil through four base points") {
  // Cubics through (1:0:0), (0:1:0), (0:0:1), (1:1:1) and the pencil of
  // conics through the same four points; the base points are absorbed into
  // the square part and a quartic remains.
  DoubleCoverModel cover(P("x0^2*x1 + x1^2*x2 - 2x2^2*x0"),
                         P("x0^2*x2 + x1*x2^2 - 2x0*x1^2"));
  PencilModel pencil(P("x0*x1 - x1*x2 - t*x0*x2 + t*x1*x2"));
  CHECK(pencil.e == 2);
  ExtractionResult r = extract_genus_one_fibration(cover, pencil);
  CHECK(r.a == P("x0^2*x2 - x0*x2^2"));
  CHECK(r.quartic.b.leading_exponents()[Var::x0] +
            r.quartic.b.leading_exponents()[Var::x2] ==
        4);
  MultiPoly rr = resultant(cover.f3 * cover.g3, pencil.h, Var::x1);
  CHECK(r.a * r.a * r.quartic.b * r.quartic.c == rr);
}

TEST_CASE("extraction: generic pencil is not a conic bundle") {
  CHECK_THROWS_AS(extract_genus_one_fibration(running_cover(),
                                              PencilModel(P("x1 - t*x0 - t*x2"))),
                  Error);
}

TEST_CASE("lemniscatic quartic gives j = 1728") {
  GenusOneQuartic q = quartic_from_affine(P("x0^4 + 1"));
  WeierstrassModel w = quartic_to_weierstrass(
      q, {RatFunc(MultiPoly()), RatFunc(MultiPoly::constant(1))});
  RatFunc j = w.j_invariant();
  CHECK(j == RatFunc(MultiPoly::constant(1728)));
  CHECK(w.B().is_zero());
}

TEST_CASE("root section drops the degree to a cubic") {
  // w^2 = u^3 + 1 (quartic coefficient zero), root at u = -1: j = 0.
  GenusOneQuartic q = quartic_from_affine(P("x0^3 + 1"));
  WeierstrassModel w = quartic_to_weierstrass(
      q, {RatFunc(MultiPoly::constant(-1)), RatFunc(MultiPoly())});
  CHECK(w.A().is_zero());
  CHECK(w.j_invariant() == RatFunc(MultiPoly()));
}

TEST_CASE("sections are validated") {
  GenusOneQuartic q = quartic_from_affine(P("x0^4 + 1"));
  CHECK_THROWS_AS(quartic_to_weierstrass(q, {RatFunc(MultiPoly::constant(1)),
                                             RatFunc(MultiPoly::constant(1))}),
                  Error);
  GenusOneQuartic singular = quartic_from_affine(P("x0^4 + 2*x0^2 + 1"));
  CHECK_THROWS_AS(
      quartic_to_weierstrass(singular, {RatFunc(MultiPoly()),
                                        RatFunc(MultiPoly::constant(1))}),
      Error);
}

TEST_CASE("quartic models match the Jacobian j-invariant") {
  std::mt19937 rng(71);
  std::uniform_int_distribution<int> coeff(-5, 5);
  std::uniform_int_distribution<int> tdeg(0, 1);
  std::uniform_int_distribution<int> qval(1, 4);
  int checked = 0;
  while (checked < 50) {
    MultiPoly affine;
    for (int k = 1; k <= 4; k++) {
      MultiPoly ck = MultiPoly::constant(coeff(rng)) +
                     MultiPoly::variable(Var::t) * rational(tdeg(rng) * coeff(rng));
      affine += ck * MultiPoly::variable(Var::x0, k);
    }
    int q0 = qval(rng);
    affine += MultiPoly::constant(q0 * q0);
    if (affine.degree(Var::x0) < 3) continue;
    GenusOneQuartic quartic = quartic_from_affine(affine);
    try {
      WeierstrassModel model = quartic_to_weierstrass(
          quartic, {RatFunc(MultiPoly()), RatFunc(MultiPoly::constant(q0))});
      WeierstrassModel jac = jacobian_of(affine_coefficients(quartic));
      CHECK(model.j_invariant() == jac.j_invariant());
      checked++;
    } catch (const Error&) {
      continue;  // singular sample
    }
  }
}

TEST_CASE("j-invariant does not depend on the chosen section") {
  std::mt19937 rng(73);
  std::uniform_int_distribution<int> coeff(-4, 4);
  std::uniform_int_distribution<int> qval(1, 3);
  int checked = 0;
  while (checked < 100) {
    // (u - 1) * (c3 u^3 + c2 u^2 + c1 u - q^2): sections (1, 0) and (0, q).
    int q0 = qval(rng);
    MultiPoly cubic = MultiPoly::variable(Var::x0, 3) * rational(coeff(rng)) +
                      MultiPoly::variable(Var::x0, 2) * rational(coeff(rng)) +
                      MultiPoly::variable(Var::x0) *
                          (MultiPoly::constant(coeff(rng)) +
                           MultiPoly::variable(Var::t) * rational(coeff(rng))) +
                      MultiPoly::constant(-q0 * q0);
    MultiPoly affine = (MultiPoly::variable(Var::x0) - MultiPoly::constant(1)) * cubic;
    if (affine.degree(Var::x0) < 3) continue;
    GenusOneQuartic quartic = quartic_from_affine(affine);
    RatFunc zero{MultiPoly()};
    RatFunc one{MultiPoly::constant(1)};
    RatFunc q{MultiPoly::constant(q0)};
    try {
      WeierstrassModel at_root = quartic_to_weierstrass(quartic, {one, zero});
      WeierstrassModel at_unit = quartic_to_weierstrass(quartic, {zero, q});
      CHECK(at_root.j_invariant() == at_unit.j_invariant());
      checked++;
    } catch (const Error&) {
      continue;  // singular sample
    }
  }
}

TEST_CASE("the degree-2 map satisfies the long Weierstrass relation") {
  // For w^2 = Q(u) = s4 u^4 + s3 u^3 + s2 u^2 + s1 u + q^2 the map
  //   x = (2q(w+q) + s1 u)/u^2
  //   y = (4q^2(w+q) + 2q(s1 u + s2 u^2) - s1^2 u^2/(2q))/u^3
  // lands on y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 with
  //   a1 = s1/q, a2 = s2 - s1^2/(4q^2), a3 = 2q s3, a4 = -4q^2 s4, a6 = a2 a4.
  // Checked as an exact identity modulo (w^2 - Q): u is x0, w is x1.
  auto reduce = [](MultiPoly p, const MultiPoly& Q) {
    while (p.degree(Var::x1) >= 2) {
      MultiPoly high, rest;
      for (const auto& [e, c] : p.terms()) {
        if (e[Var::x1] >= 2) {
          Exponents low = e;
          low[Var::x1] -= 2;
          high += MultiPoly::monomial(low, c);
        } else {
          rest += MultiPoly::monomial(e, c);
        }
      }
      p = rest + high * Q;
    }
    return p;
  };

  std::mt19937 rng(83);
  std::uniform_int_distribution<int> coeff(-4, 4);
  std::uniform_int_distribution<int> qval(1, 3);
  const MultiPoly u = MultiPoly::variable(Var::x0);
  const MultiPoly w = MultiPoly::variable(Var::x1);
  for (int trial = 0; trial < 20; trial++) {
    Rational q = rational(qval(rng));
    MultiPoly s[5];
    for (int k = 1; k <= 4; k++)
      s[k] = MultiPoly::constant(coeff(rng)) +
             MultiPoly::variable(Var::t) * rational(coeff(rng));
    MultiPoly Q = MultiPoly::constant(q * q);
    for (int k = 1; k <= 4; k++) Q += s[k] * pow(u, k);

    MultiPoly X = rational(2) * q * (w + MultiPoly::constant(q)) + s[1] * u;
    MultiPoly Y = rational(4) * q * q * (w + MultiPoly::constant(q)) +
                  rational(2) * q * (s[1] * u + s[2] * u * u) -
                  s[1] * s[1] * u * u * rational(1, 2) * Rational(1 / q);
    Rational q2 = q * q;
    MultiPoly a1 = s[1] * Rational(1 / q);
    MultiPoly a2 = s[2] - s[1] * s[1] * Rational(1 / (4 * q2));
    MultiPoly a3 = rational(2) * q * s[3];
    MultiPoly a4 = rational(-4) * q2 * s[4];
    MultiPoly a6 = a2 * a4;
    // relation cleared by u^6: x = X/u^2, y = Y/u^3
    MultiPoly relation = Y * Y + a1 * X * Y * u + a3 * Y * pow(u, 3) -
                         X * X * X - a2 * X * X * u * u - a4 * X * pow(u, 4) -
                         a6 * pow(u, 6);
    CHECK(reduce(relation, Q).is_zero());
  }
}

TEST_CASE("two-isogeny quotient formula") {
  WeierstrassModel w1 = WeierstrassModel::two_torsion_form(P("0"), P("1"));
  WeierstrassModel q1 = two_isogeny_quotient(w1);
  CHECK(q1.a().is_zero());
  CHECK(q1.b() == P("-4"));

  WeierstrassModel w2 = WeierstrassModel::two_torsion_form(P("t"), P("1"));
  WeierstrassModel q2 = two_isogeny_quotient(w2);
  CHECK(q2.a() == P("-2t"));
  CHECK(q2.b() == P("t^2 - 4"));

  CHECK_THROWS_AS(two_isogeny_quotient(WeierstrassModel::short_form(P("t"), P("t"))),
                  Error);
}

TEST_CASE("isogeny applied twice is multiplication by 2") {
  std::mt19937 rng(79);
  std::uniform_int_distribution<int> coeff(-4, 4);
  int checked = 0;
  while (checked < 100) {
    MultiPoly a, b;
    for (int k = 0; k <= 2; k++) {
      a += MultiPoly::variable(Var::t, k) * rational(coeff(rng));
      b += MultiPoly::variable(Var::t, k) * rational(coeff(rng));
    }
    if (b.is_zero() || (a * a - rational(4) * b).is_zero()) continue;
    WeierstrassModel w = WeierstrassModel::two_torsion_form(a, b);
    WeierstrassModel quotient = two_isogeny_quotient(w);
    if ((quotient.a() * quotient.a() - rational(4) * quotient.b()).is_zero())
      continue;
    WeierstrassModel twice = two_isogeny_quotient(quotient);
    CHECK(twice.a() == rational(4) * a);
    CHECK(twice.b() == rational(16) * b);
    checked++;
  }
}

TEST_CASE("kodaira types at finite places") {
  WeierstrassModel w = WeierstrassModel::short_form(P("t"), P("t"));
  auto [type, v] = kodaira_type_at_place(w, Place::at(P("t")));
  CHECK(type == KodairaType::additive(FiberKind::II));
  CHECK(v.v_c4 == 1);
  CHECK(v.v_c6 == 1);
  CHECK(v.v_delta == 2);

  WeierstrassModel tt = WeierstrassModel::two_torsion_form(P("1"), P("t"));
  auto [type2, v2] = kodaira_type_at_place(tt, Place::at(P("t")));
  CHECK(type2 == KodairaType::I(2));
  CHECK(v2.v_c4 == 0);
  CHECK(v2.v_delta == 2);
}

TEST_CASE("every reduction type is reachable from the valuation table") {
  struct Row {
    const char* A;
    const char* B;
    KodairaType expect;
  };
  const Row rows[] = {
      {"t", "t", KodairaType::additive(FiberKind::II)},        // (1,1,2)
      {"t", "t^2", KodairaType::additive(FiberKind::III)},     // (1,2,3)
      {"t^2", "t^2", KodairaType::additive(FiberKind::IV)},    // (2,2,4)
      {"t^2", "t^3", KodairaType::IStar(0)},                   // (2,3,6)
      {"t^3", "t^4", KodairaType::additive(FiberKind::IVStar)},   // (3,4,8)
      {"t^3", "t^5", KodairaType::additive(FiberKind::IIIStar)},  // (3,5,9)
      {"t^4", "t^5", KodairaType::additive(FiberKind::IIStar)},   // (4,5,10)
  };
  for (const Row& row : rows) {
    CAPTURE(row.A);
    WeierstrassModel w = WeierstrassModel::short_form(P(row.A), P(row.B));
    auto [type, v] = kodaira_type_at_place(w, Place::at(P("t")));
    CHECK(type == row.expect);
    CHECK(v.v_delta == type.euler_number());
    // reported valuations are minimal
    CHECK_FALSE((v.v_c4 >= 4 && v.v_c6 >= 6 && v.v_delta >= 12));
  }
  // multiplicative and starred multiplicative rows
  auto [i3, vi3] = kodaira_type_at_place(
      WeierstrassModel::two_torsion_form(P("1"), P("t^3")), Place::at(P("t")));
  CHECK(i3 == KodairaType::I(6));
  auto [istar, vs] = kodaira_type_at_place(
      WeierstrassModel::two_torsion_form(P("t"), P("1/4*t^2 + 1/4*t^3")),
      Place::at(P("t")));
  CHECK(istar == KodairaType::IStar(1));
}

TEST_CASE("kodaira type at infinity") {
  // c4, c6, delta of degrees 1, 1, 3: weights at infinity give (3, 5, 9).
  WeierstrassModel w = WeierstrassModel::short_form(P("t"), P("t"));
  auto [type, v] = kodaira_type_at_place(w, Place::infinity());
  CHECK(type == KodairaType::additive(FiberKind::IIIStar));
  CHECK(v.v_c4 == 3);
  CHECK(v.v_c6 == 5);
  CHECK(v.v_delta == 9);
}

TEST_CASE("minimalization strips 12th powers") {
  WeierstrassModel minimal = WeierstrassModel::short_form(P("t"), P("t"));
  WeierstrassModel scaled = WeierstrassModel::short_form(P("t^5"), P("t^7"));
  auto [tm, vm] = kodaira_type_at_place(minimal, Place::at(P("t")));
  auto [ts, vs] = kodaira_type_at_place(scaled, Place::at(P("t")));
  CHECK(tm == ts);
  CHECK(vm.v_delta == vs.v_delta);
}

TEST_CASE("place validation") {
  CHECK_THROWS_AS(Place::at(P("x0")), Error);
  CHECK_THROWS_AS(Place::at(P("3")), Error);
  CHECK(Place::at(P("2t - 2")).polynomial() == P("t - 1"));
  CHECK(Place::infinity().is_infinity());
}

TEST_CASE("fiber configurations of small models") {
  // y^2 = x(x^2 + x + (1-t)/4): I1 at t, I2 at t-1, III* at infinity.
  WeierstrassModel w =
      WeierstrassModel::two_torsion_form(P("1"), P("1/4 - 1/4*t"));
  CHECK(fiber_configuration_of(w) == FiberConfiguration::parse("I1+I2+III*"));
  CHECK(total_discriminant_degree(w) == 12);
  CHECK(fiber_configuration_of(w).euler_characteristic() == 12);
}

TEST_CASE("conjugate places count with their degree") {
  // y^2 = x(x^2 + x + t^2+1): delta = 16 (t^2+1)^2 (1 - 4t^2 - 4), irreducible
  // quadratic factor t^2 + 1 contributes two I_2 fibers.
  WeierstrassModel w = WeierstrassModel::two_torsion_form(P("1"), P("t^2 + 1"));
  FiberConfiguration c = fiber_configuration_of(w);
  CHECK(c.count(KodairaType::I(2)) >= 2);
  CHECK(c.euler_characteristic() == total_discriminant_degree(w));
}

namespace {

struct DeskCase {
  const char* name;
  const char* a;
  const char* b;
  const char* place;
  KodairaType source;
  TorsionMarking marking;
};

}  // namespace

TEST_CASE("quotient fibers follow the isogeny table") {
  const DeskCase cases[] = {
      {"I1 -> I2", "1", "1/4 - 1/4*t", "t", KodairaType::I(1), TorsionMarking::None},
      {"I2 (thetaN) -> I1", "1", "1/4 - 1/4*t", "t - 1", KodairaType::I(2),
       TorsionMarking::MeetsThetaN},
      {"I4 (theta0) -> I8", "2", "1 - 1/4*t^4", "t", KodairaType::I(4),
       TorsionMarking::MeetsTheta0},
      {"I4 (thetaN) -> I2", "1", "t^2", "t", KodairaType::I(4),
       TorsionMarking::MeetsThetaN},
      {"I1* -> I2*", "t", "1/4*t^2 + 1/4*t^3", "t", KodairaType::IStar(1),
       TorsionMarking::None},
      {"I3* -> I6*", "t", "1/4*t^2 + 1/4*t^5", "t", KodairaType::IStar(3),
       TorsionMarking::None},
      {"III* -> III*", "t^2", "t^3", "t", KodairaType::additive(FiberKind::IIIStar),
       TorsionMarking::None},
  };
  for (const DeskCase& c : cases) {
    CAPTURE(c.name);
    WeierstrassModel w = WeierstrassModel::two_torsion_form(P(c.a), P(c.b));
    Place place = Place::at(P(c.place));
    auto [source, v_source] = kodaira_type_at_place(w, place);
    REQUIRE(source == c.source);
    WeierstrassModel quotient = two_isogeny_quotient(w);
    auto [image, v_image] = kodaira_type_at_place(quotient, place);
    CHECK(image == isogeny_transform(c.source, c.marking));
  }
}

TEST_CASE("even-star quotients realize both table rows") {
  // The component met by the torsion section is not identified here, so for
  // I*_{2n} the quotient may be I*_{4n} or I*_n; both must occur.
  WeierstrassModel far_model = WeierstrassModel::two_torsion_form(P("t"), P("t^3"));
  auto [src_far, vf] = kodaira_type_at_place(far_model, Place::at(P("t")));
  REQUIRE(src_far == KodairaType::IStar(2));
  auto [img_far, vfq] =
      kodaira_type_at_place(two_isogeny_quotient(far_model), Place::at(P("t")));
  CHECK(img_far == KodairaType::IStar(1));

  WeierstrassModel near_model =
      WeierstrassModel::two_torsion_form(P("t"), P("1/4*t^2 - 1/4*t^4"));
  auto [src_near, vn] = kodaira_type_at_place(near_model, Place::at(P("t")));
  REQUIRE(src_near == KodairaType::IStar(2));
  auto [img_near, vnq] =
      kodaira_type_at_place(two_isogeny_quotient(near_model), Place::at(P("t")));
  CHECK(img_near == KodairaType::IStar(4));

  CHECK(isogeny_transform(KodairaType::IStar(2), TorsionMarking::MeetsFar) ==
        img_far);
  CHECK(isogeny_transform(KodairaType::IStar(2), TorsionMarking::MeetsNear) ==
        img_near);
}

TEST_CASE("euler conservation across the corpus") {
  std::vector<WeierstrassModel> corpus;
  corpus.push_back(WeierstrassModel::short_form(P("t"), P("t")));
  corpus.push_back(WeierstrassModel::two_torsion_form(P("1"), P("1/4 - 1/4*t")));
  corpus.push_back(WeierstrassModel::two_torsion_form(P("t"), P("1/4*t^2 + 1/4*t^3")));
  corpus.push_back(WeierstrassModel::two_torsion_form(P("t"), P("1/4*t^2 + 1/4*t^5")));
  corpus.push_back(WeierstrassModel::two_torsion_form(P("t^2"), P("t^3")));
  corpus.push_back(WeierstrassModel::two_torsion_form(P("2"), P("1 - 1/4*t^4")));
  corpus.push_back(
      two_isogeny_quotient(WeierstrassModel::two_torsion_form(P("t^2"), P("t^3"))));
  for (const WeierstrassModel& w : corpus) {
    int total = total_discriminant_degree(w);
    CHECK(total == fiber_configuration_of(w).euler_characteristic());
    CHECK((total == 12 || total == 24));
  }
}

TEST_CASE("pipeline closure: extracted model has Euler 24") {
  ExtractionResult r =
      extract_genus_one_fibration(running_cover(), PencilModel(P("x1 - t*x0")));
  WeierstrassModel model = quartic_to_weierstrass(
      r.quartic, {RatFunc(MultiPoly()), RatFunc(MultiPoly::constant(1))});
  FiberConfiguration config = fiber_configuration_of(model);
  CHECK(config.euler_characteristic() == 24);
  CHECK(total_discriminant_degree(model) == 24);
}
