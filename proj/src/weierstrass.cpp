#include "k3fib/weierstrass.hpp"

#include <algorithm>
#include <array>

#include "k3fib/resultant.hpp"

namespace k3fib {

namespace {

bool t_only(const MultiPoly& p) {
  return p.degree(Var::x0) <= 0 && p.degree(Var::x1) <= 0 && p.degree(Var::x2) <= 0;
}

void require_t_only(const MultiPoly& p, const char* what) {
  if (!t_only(p))
    fail(errc::inconsistent_input, std::string(what) + " must depend on t only");
}

bool homogeneous_deg3_t_free(const MultiPoly& p) {
  if (p.is_zero() || p.degree(Var::t) > 0) return false;
  for (const auto& [e, c] : p.terms())
    if (e[Var::x0] + e[Var::x1] + e[Var::x2] != 3) return false;
  return true;
}

// Gcd of two homogeneous polynomials in (x0, x2) via dehomogenization.
MultiPoly gcd_homogeneous_x0x2(const MultiPoly& p, const MultiPoly& q) {
  auto analyze = [](const MultiPoly& f) {
    int x0_min = 1 << 20, x2_min = 1 << 20;
    for (const auto& [e, c] : f.terms()) {
      x0_min = std::min(x0_min, e[Var::x0]);
      x2_min = std::min(x2_min, e[Var::x2]);
    }
    return std::pair(x0_min, x2_min);
  };
  if (p.is_zero()) return q;
  if (q.is_zero()) return p;
  auto [p0, p2] = analyze(p);
  auto [q0, q2] = analyze(q);
  MultiPoly pu = p.substitute(Var::x2, MultiPoly::constant(1));
  MultiPoly qu = q.substitute(Var::x2, MultiPoly::constant(1));
  MultiPoly g = gcd_univariate(pu, qu, Var::x0);
  int deg = g.degree(Var::x0);
  MultiPoly out;
  for (const auto& [e, c] : g.terms()) {
    Exponents shifted = e;
    shifted[Var::x2] = deg - e[Var::x0];
    out += MultiPoly::monomial(shifted, c);
  }
  return MultiPoly::variable(Var::x0, std::min(p0, q0)) *
         MultiPoly::variable(Var::x2, std::min(p2, q2)) * out;
}

bool cubics_share_factor(const MultiPoly& f, const MultiPoly& g) {
  MultiPoly cf = f, cg = g;
  if (f.degree(Var::x1) >= 1 && g.degree(Var::x1) >= 1) {
    if (resultant(f, g, Var::x1).is_zero()) return true;
  }
  // A common factor free of x1 divides both x1-contents.
  MultiPoly content_f, content_g;
  for (int k = 0; k <= f.degree(Var::x1); k++)
    content_f = gcd_homogeneous_x0x2(content_f, f.coefficient_of(Var::x1, k));
  for (int k = 0; k <= g.degree(Var::x1); k++)
    content_g = gcd_homogeneous_x0x2(content_g, g.coefficient_of(Var::x1, k));
  MultiPoly common = gcd_homogeneous_x0x2(content_f, content_g);
  return common.total_degree() > 0;
}

}  // namespace

DoubleCoverModel::DoubleCoverModel(MultiPoly f3_, MultiPoly g3_)
    : f3(std::move(f3_)), g3(std::move(g3_)) {
  if (!homogeneous_deg3_t_free(f3))
    fail(errc::not_homogeneous, "f3 must be a t-free homogeneous cubic");
  if (!homogeneous_deg3_t_free(g3))
    fail(errc::not_homogeneous, "g3 must be a t-free homogeneous cubic");
  if (cubics_share_factor(f3, g3))
    fail(errc::inconsistent_input, "f3 and g3 must have no common factor");
}

PencilModel::PencilModel(MultiPoly h_) : h(std::move(h_)) {
  if (h.is_zero() || h.degree(Var::t) != 1)
    fail(errc::inconsistent_input, "pencil must be linear in t");
  int deg = -1;
  for (const auto& [ex, c] : h.terms()) {
    int d = ex[Var::x0] + ex[Var::x1] + ex[Var::x2];
    if (deg == -1) deg = d;
    if (d != deg)
      fail(errc::not_homogeneous, "pencil must be homogeneous in (x0, x1, x2)");
  }
  if (deg < 1 || deg > 3)
    fail(errc::inconsistent_input, "pencil degree must be 1, 2 or 3");
  if (h.degree(Var::x1) < 1)
    fail(errc::inconsistent_input,
         "pencil must involve x1 (projection point normalized to (0:1:0))");
  e = deg;
}

GenusOneQuartic::GenusOneQuartic(MultiPoly c_, MultiPoly b_)
    : c(std::move(c_)), b(std::move(b_)) {
  require_t_only(c, "c");
  if (c.is_zero()) fail(errc::inconsistent_input, "c must be nonzero");
  if (b.degree(Var::x1) > 0 || !b.is_homogeneous_in(Var::x0, Var::x2) ||
      b.is_zero() || b.leading_exponents()[Var::x0] + b.leading_exponents()[Var::x2] != 4)
    fail(errc::not_homogeneous, "b must be homogeneous of degree 4 in (x0, x2)");
}

ExtractionResult extract_genus_one_fibration(const DoubleCoverModel& cover,
                                             const PencilModel& pencil) {
  MultiPoly sextic = cover.f3 * cover.g3;
  MultiPoly r = resultant(sextic, pencil.h, Var::x1);
  if (r.is_zero())
    fail(errc::not_a_conic_bundle_pencil,
         "pencil is degenerate against the branch sextic");
  SquarePartDecomposition d = square_part_decompose(r);
  int deg_b = d.b.is_zero()
                  ? -1
                  : d.b.leading_exponents()[Var::x0] + d.b.leading_exponents()[Var::x2];
  if (deg_b != 4)
    fail(errc::not_a_conic_bundle_pencil,
         "residual curve has degree " + std::to_string(deg_b) +
             " in (x0:x2), expected 4");
  return {d.a, GenusOneQuartic(d.c, d.b)};
}

WeierstrassModel::WeierstrassModel(bool two_torsion, MultiPoly p, MultiPoly q)
    : two_torsion_(two_torsion), p_(std::move(p)), q_(std::move(q)) {
  require_t_only(p_, two_torsion_ ? "a" : "A");
  require_t_only(q_, two_torsion_ ? "b" : "B");
  if (discriminant().is_zero())
    fail(errc::singular_input, "discriminant vanishes identically");
}

WeierstrassModel WeierstrassModel::short_form(MultiPoly A, MultiPoly B) {
  return WeierstrassModel(false, std::move(A), std::move(B));
}

WeierstrassModel WeierstrassModel::two_torsion_form(MultiPoly a, MultiPoly b) {
  return WeierstrassModel(true, std::move(a), std::move(b));
}

const MultiPoly& WeierstrassModel::A() const {
  if (two_torsion_) fail(errc::inconsistent_input, "model is in 2-torsion form");
  return p_;
}
const MultiPoly& WeierstrassModel::B() const {
  if (two_torsion_) fail(errc::inconsistent_input, "model is in 2-torsion form");
  return q_;
}
const MultiPoly& WeierstrassModel::a() const {
  if (!two_torsion_) fail(errc::inconsistent_input, "model is in short form");
  return p_;
}
const MultiPoly& WeierstrassModel::b() const {
  if (!two_torsion_) fail(errc::inconsistent_input, "model is in short form");
  return q_;
}

MultiPoly WeierstrassModel::c4() const {
  if (two_torsion_) return rational(16) * p_ * p_ - rational(48) * q_;
  return rational(-48) * p_;
}

MultiPoly WeierstrassModel::c6() const {
  if (two_torsion_) return rational(-64) * p_ * p_ * p_ + rational(288) * p_ * q_;
  return rational(-864) * q_;
}

MultiPoly WeierstrassModel::discriminant() const {
  if (two_torsion_)
    return rational(16) * q_ * q_ * (p_ * p_ - rational(4) * q_);
  return rational(-16) * (rational(4) * p_ * p_ * p_ + rational(27) * q_ * q_);
}

RatFunc WeierstrassModel::j_invariant() const {
  MultiPoly c = c4();
  return RatFunc(c * c * c, discriminant());
}

std::string WeierstrassModel::str() const {
  if (two_torsion_)
    return "y^2 = x*(x^2 + (" + p_.str() + ")*x + (" + q_.str() + "))";
  return "y^2 = x^3 + (" + p_.str() + ")*x + (" + q_.str() + ")";
}

WeierstrassModel two_isogeny_quotient(const WeierstrassModel& w) {
  if (!w.has_two_torsion_form())
    fail(errc::inconsistent_input,
         "2-isogeny quotient needs the 2-torsion form y^2 = x(x^2+ax+b)");
  const MultiPoly& a = w.a();
  const MultiPoly& b = w.b();
  MultiPoly radicand = a * a - rational(4) * b;
  if (b.is_zero() || radicand.is_zero())
    fail(errc::singular_input, "b(a^2-4b) vanishes identically");
  return WeierstrassModel::two_torsion_form(rational(-2) * a, radicand);
}

namespace {

std::array<RatFunc, 5> quartic_coefficients(const GenusOneQuartic& q) {
  std::array<RatFunc, 5> s;
  for (int k = 0; k <= 4; k++) {
    MultiPoly coeff;
    for (const auto& [e, c] : q.b.terms())
      if (e[Var::x0] == k) {
        Exponents stripped = e;
        stripped[Var::x0] = 0;
        stripped[Var::x2] = 0;
        coeff += MultiPoly::monomial(stripped, c);
      }
    s[static_cast<std::size_t>(k)] = RatFunc(q.c * coeff);
  }
  return s;
}

RatFunc evaluate_at(const std::array<RatFunc, 5>& s, const RatFunc& u0) {
  RatFunc acc = s[4];
  for (int k = 3; k >= 0; k--) acc = acc * u0 + s[static_cast<std::size_t>(k)];
  return acc;
}

// Long Weierstrass coefficients (a1, a2, a3, a4, a6) -> scaled short model
// y^2 = x^3 - 27 c4 x - 54 c6 (constant rescalings leave every place alone).
WeierstrassModel long_to_short(const std::array<RatFunc, 5>& a) {
  const RatFunc &a1 = a[0], &a2 = a[1], &a3 = a[2], &a4 = a[3], &a6 = a[4];
  RatFunc b2 = a1 * a1 + RatFunc::constant(4) * a2;
  RatFunc b4 = RatFunc::constant(2) * a4 + a1 * a3;
  RatFunc b6 = a3 * a3 + RatFunc::constant(4) * a6;
  RatFunc c4 = b2 * b2 - RatFunc::constant(24) * b4;
  RatFunc c6 = -(b2 * b2 * b2) + RatFunc::constant(36) * b2 * b4 -
               RatFunc::constant(216) * b6;
  RatFunc A = RatFunc::constant(-27) * c4;
  RatFunc B = RatFunc::constant(-54) * c6;
  // Clear denominators with the weight-(4, 6) rescaling x -> x/D^2, y -> y/D^3.
  MultiPoly D = divide_exact(A.den() * B.den(),
                             gcd_univariate(A.den(), B.den(), Var::t));
  MultiPoly A_poly = A.num() * divide_exact(pow(D, 4), A.den());
  MultiPoly B_poly = B.num() * divide_exact(pow(D, 6), B.den());
  return WeierstrassModel::short_form(std::move(A_poly), std::move(B_poly));
}

}  // namespace

WeierstrassModel quartic_to_weierstrass(const GenusOneQuartic& q,
                                        const QuarticPoint& pt) {
  std::array<RatFunc, 5> s = quartic_coefficients(q);

  MultiPoly R = q.c * q.b.substitute(Var::x2, MultiPoly::constant(1));
  if (R.degree(Var::x0) < 3)
    fail(errc::singular_quartic, "quartic degenerates to degree < 3");
  if (gcd_in_main(R, R.derivative(Var::x0), Var::x0, Var::t).degree(Var::x0) > 0)
    fail(errc::singular_quartic, "quartic has a repeated root");

  if (!(pt.w * pt.w == evaluate_at(s, pt.u)))
    fail(errc::no_section_given, "point does not lie on w^2 = c(t) b(u, 1, t)");

  if (pt.w.is_zero()) {
    // u0 is a simple root: u = u0 + 1/v turns the quartic into a cubic
    // W^2 = R'(u0) v^3 + R''(u0)/2 v^2 + R'''(u0)/6 v + s4.
    std::array<RatFunc, 5> d1, d2;
    for (int k = 0; k <= 3; k++)
      d1[static_cast<std::size_t>(k)] =
          s[static_cast<std::size_t>(k + 1)] * RatFunc::constant(k + 1);
    d1[4] = RatFunc();
    for (int k = 0; k <= 2; k++)
      d2[static_cast<std::size_t>(k)] =
          d1[static_cast<std::size_t>(k + 1)] * RatFunc::constant(k + 1);
    d2[3] = d2[4] = RatFunc();
    RatFunc c3 = evaluate_at(d1, pt.u);
    RatFunc c2 = evaluate_at(d2, pt.u) / RatFunc::constant(2);
    RatFunc c1 = (d2[1] + RatFunc::constant(2) * d2[2] * pt.u) / RatFunc::constant(6);
    RatFunc c0 = s[4];
    // Multiply through by c3^2: X = c3 v, Y = c3 W.
    return long_to_short({RatFunc(), c2, RatFunc(), c1 * c3, c0 * c3 * c3});
  }

  // Point with w0 != 0: translate it to u = 0, then apply the classical
  // degree-2 map for w^2 = s4 u^4 + s3 u^3 + s2 u^2 + s1 u + w0^2.
  std::array<RatFunc, 5> sh;  // coefficients of R(u + u0)
  for (int k = 0; k <= 4; k++) {
    RatFunc acc;
    static const int binom[5][5] = {{1, 0, 0, 0, 0},
                                    {1, 1, 0, 0, 0},
                                    {1, 2, 1, 0, 0},
                                    {1, 3, 3, 1, 0},
                                    {1, 4, 6, 4, 1}};
    for (int j = k; j <= 4; j++)
      acc = acc + s[static_cast<std::size_t>(j)] *
                      RatFunc::constant(binom[j][k]) * pow(pt.u, j - k);
    sh[static_cast<std::size_t>(k)] = acc;
  }
  const RatFunc& w0 = pt.w;
  RatFunc four_q2 = RatFunc::constant(4) * w0 * w0;
  RatFunc a1 = sh[1] / w0;
  RatFunc a2 = sh[2] - sh[1] * sh[1] / four_q2;
  RatFunc a3 = RatFunc::constant(2) * w0 * sh[3];
  RatFunc a4 = -four_q2 * sh[4];
  RatFunc a6 = a2 * a4;
  return long_to_short({a1, a2, a3, a4, a6});
}

Place Place::at(const MultiPoly& p) {
  require_t_only(p, "place");
  if (p.degree(Var::t) < 1)
    fail(errc::inconsistent_input, "finite place must be non-constant in t");
  MultiPoly monic = p * Rational(1 / p.leading_coefficient());
  return Place(std::move(monic));
}

const MultiPoly& Place::polynomial() const {
  if (is_infinity()) fail(errc::inconsistent_input, "infinite place");
  return *finite_;
}

std::string Place::str() const {
  return is_infinity() ? "infinity" : finite_->str();
}

namespace {

int ceil_div(int a, int b) { return (a + b - 1) / b; }

struct ValTriple {
  int v4 = 0, v6 = 0, vd = 0;
};

void minimalize(ValTriple& v) {
  while (v.v4 >= 4 && v.v6 >= 6 && v.vd >= 12) {
    if (v.v4 < kInfiniteValuation) v.v4 -= 4;
    if (v.v6 < kInfiniteValuation) v.v6 -= 6;
    v.vd -= 12;
  }
}

KodairaType classify_valuations(ValTriple v) {
  minimalize(v);
  if (v.vd == 0) return KodairaType::I(0);
  if (v.v4 == 0) return KodairaType::I(v.vd);
  if (v.v6 == 1 && v.vd == 2) return KodairaType::additive(FiberKind::II);
  if (v.v4 == 1 && v.v6 >= 2 && v.vd == 3) return KodairaType::additive(FiberKind::III);
  if (v.v4 >= 2 && v.v6 == 2 && v.vd == 4) return KodairaType::additive(FiberKind::IV);
  if (v.v4 >= 2 && v.v6 >= 3 && v.vd == 6) return KodairaType::IStar(0);
  if (v.v4 == 2 && v.v6 == 3 && v.vd > 6) return KodairaType::IStar(v.vd - 6);
  if (v.v4 >= 3 && v.v6 == 4 && v.vd == 8) return KodairaType::additive(FiberKind::IVStar);
  if (v.v4 == 3 && v.v6 >= 5 && v.vd == 9) return KodairaType::additive(FiberKind::IIIStar);
  if (v.v4 >= 4 && v.v6 == 5 && v.vd == 10) return KodairaType::additive(FiberKind::IIStar);
  fail(errc::ambiguous_valuations,
       "no Kodaira row for valuations (" + std::to_string(v.v4) + ", " +
           std::to_string(v.v6) + ", " + std::to_string(v.vd) + ")");
}

ValTriple valuations_at_infinity(const MultiPoly& c4, const MultiPoly& c6,
                                 const MultiPoly& delta) {
  int m = ceil_div(delta.degree(Var::t), 12);
  if (!c4.is_zero()) m = std::max(m, ceil_div(c4.degree(Var::t), 4));
  if (!c6.is_zero()) m = std::max(m, ceil_div(c6.degree(Var::t), 6));
  m = std::max(m, 0);
  ValTriple v;
  v.v4 = c4.is_zero() ? kInfiniteValuation : 4 * m - c4.degree(Var::t);
  v.v6 = c6.is_zero() ? kInfiniteValuation : 6 * m - c6.degree(Var::t);
  v.vd = 12 * m - delta.degree(Var::t);
  return v;
}

}  // namespace

std::pair<KodairaType, PlaceValuations> kodaira_type_at_place(
    const WeierstrassModel& w, const Place& place) {
  MultiPoly c4 = w.c4(), c6 = w.c6(), delta = w.discriminant();
  ValTriple v;
  if (place.is_infinity()) {
    v = valuations_at_infinity(c4, c6, delta);
  } else {
    const MultiPoly& p = place.polynomial();
    v.v4 = c4.is_zero() ? kInfiniteValuation : valuation(c4, p);
    v.v6 = c6.is_zero() ? kInfiniteValuation : valuation(c6, p);
    v.vd = valuation(delta, p);
  }
  minimalize(v);
  KodairaType type = classify_valuations(v);
  return {type, PlaceValuations{place, v.v4, v.v6, v.vd}};
}

FiberConfiguration fiber_configuration_of(const WeierstrassModel& w) {
  MultiPoly c4 = w.c4(), c6 = w.c6(), delta = w.discriminant();
  FiberConfiguration config;

  for (const auto& [layer, vd] : squarefree_decomposition(delta, Var::t)) {
    if (layer.degree(Var::t) < 1) continue;
    std::vector<std::pair<MultiPoly, int>> by_c4;
    if (c4.is_zero())
      by_c4.emplace_back(layer, kInfiniteValuation);
    else
      by_c4 = split_by_valuation(layer, c4, Var::t);
    for (const auto& [group4, v4] : by_c4) {
      std::vector<std::pair<MultiPoly, int>> by_c6;
      if (c6.is_zero())
        by_c6.emplace_back(group4, kInfiniteValuation);
      else
        by_c6 = split_by_valuation(group4, c6, Var::t);
      for (const auto& [group, v6] : by_c6) {
        KodairaType type = classify_valuations({v4, v6, vd});
        if (!type.is_smooth()) config.add(type, group.degree(Var::t));
      }
    }
  }

  KodairaType at_inf = classify_valuations(valuations_at_infinity(c4, c6, delta));
  if (!at_inf.is_smooth()) config.add(at_inf);
  return config;
}

int total_discriminant_degree(const WeierstrassModel& w) {
  MultiPoly c4 = w.c4(), c6 = w.c6(), delta = w.discriminant();
  int total = 0;
  for (const auto& [layer, vd] : squarefree_decomposition(delta, Var::t)) {
    if (layer.degree(Var::t) < 1) continue;
    std::vector<std::pair<MultiPoly, int>> by_c4;
    if (c4.is_zero())
      by_c4.emplace_back(layer, kInfiniteValuation);
    else
      by_c4 = split_by_valuation(layer, c4, Var::t);
    for (const auto& [group4, v4] : by_c4) {
      std::vector<std::pair<MultiPoly, int>> by_c6;
      if (c6.is_zero())
        by_c6.emplace_back(group4, kInfiniteValuation);
      else
        by_c6 = split_by_valuation(group4, c6, Var::t);
      for (const auto& [group, v6] : by_c6) {
        ValTriple v{v4, v6, vd};
        minimalize(v);
        total += v.vd * group.degree(Var::t);
      }
    }
  }
  ValTriple vinf = valuations_at_infinity(c4, c6, delta);
  minimalize(vinf);
  return total + vinf.vd;
}

}  // namespace k3fib
