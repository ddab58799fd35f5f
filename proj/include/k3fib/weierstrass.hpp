#pragma once

#include <optional>
#include <utility>

#include "k3fib/configuration.hpp"
#include "k3fib/factor.hpp"
#include "k3fib/poly.hpp"
#include "k3fib/ratfunc.hpp"

namespace k3fib {

// w^2 = f3 * g3 with f3, g3 homogeneous cubics in (x0, x1, x2) without a
// common factor: the double-plane model of a K3 branched over two cubics.
struct DoubleCoverModel {
  DoubleCoverModel(MultiPoly f3_, MultiPoly g3_);
  MultiPoly f3, g3;
};

// A pencil of plane curves h(x0:x1:x2, t) = 0, homogeneous of degree e <= 3
// in the coordinates and linear in t, already normalized so the projection
// point is (0:1:0), i.e. h has positive degree in x1.
struct PencilModel {
  explicit PencilModel(MultiPoly h_);
  MultiPoly h;
  int e = 0;
};

// w^2 = c(t) * b(x0:x2, t) with b homogeneous of degree 4: the genus 1
// fibration cut out on the double cover by a conic-bundle pencil.
struct GenusOneQuartic {
  GenusOneQuartic(MultiPoly c_, MultiPoly b_);
  MultiPoly c;  // depends only on t
  MultiPoly b;  // quartic in (x0, x2) with t coefficients
};

struct ExtractionResult {
  MultiPoly a;  // square part removed by w -> w*a
  GenusOneQuartic quartic;
};

// Steps 1-3 of the e <= 3 pipeline: eliminate x1 by a resultant against the
// pencil, split off the square part, and keep the residual quartic. Raises
// NotAConicBundlePencil when the residual is not a quartic.
ExtractionResult extract_genus_one_fibration(const DoubleCoverModel& cover,
                                             const PencilModel& pencil);

/* Weierstrass data over Q(t).  Either the short form
     y^2 = x^3 + A(t) x + B(t)
       c4 = -48A, c6 = -864B, delta = -16(4A^3 + 27B^2)
   or the 2-torsion form
     y^2 = x(x^2 + a(t) x + b(t))
       c4 = 16a^2 - 48b, c6 = -64a^3 + 288ab, delta = 16 b^2 (a^2 - 4b)
   with c4^3 - c6^2 = 1728 delta in both cases. */
class WeierstrassModel {
 public:
  static WeierstrassModel short_form(MultiPoly A, MultiPoly B);
  static WeierstrassModel two_torsion_form(MultiPoly a, MultiPoly b);

  bool has_two_torsion_form() const { return two_torsion_; }
  const MultiPoly& A() const;  // short form only
  const MultiPoly& B() const;
  const MultiPoly& a() const;  // 2-torsion form only
  const MultiPoly& b() const;

  MultiPoly c4() const;
  MultiPoly c6() const;
  MultiPoly discriminant() const;
  RatFunc j_invariant() const;  // c4^3 / delta

  std::string str() const;

 private:
  WeierstrassModel(bool two_torsion, MultiPoly p, MultiPoly q);
  bool two_torsion_;
  MultiPoly p_, q_;  // (A, B) or (a, b)
};

// Quotient by translation by the 2-torsion section (0, 0):
// y^2 = x(x^2 + ax + b)  ->  y^2 = x(x^2 - 2ax + (a^2 - 4b)).
WeierstrassModel two_isogeny_quotient(const WeierstrassModel& w);

// Rational point on the dehomogenized quartic w^2 = c(t) b(u, 1, t);
// coordinates may be rational functions of t.
struct QuarticPoint {
  RatFunc u, w;
};

// Step 4: a Weierstrass model birationally equivalent to the genus 1 quartic,
// via the classical transformations at a given section: shift-and-invert at a
// root (w = 0), or the degree-2 map at a point with w != 0 translated to
// u = 0. The j-invariant equals that of the Jacobian of the binary quartic.
WeierstrassModel quartic_to_weierstrass(const GenusOneQuartic& q,
                                        const QuarticPoint& pt);

// Place of Q(t): a monic irreducible polynomial in t, or infinity.
class Place {
 public:
  Place() : finite_(std::nullopt) {}  // infinity
  static Place at(const MultiPoly& p);  // normalized monic
  static Place infinity() { return Place(std::nullopt); }

  bool is_infinity() const { return !finite_.has_value(); }
  const MultiPoly& polynomial() const;  // finite places only
  std::string str() const;

 private:
  explicit Place(std::optional<MultiPoly> p) : finite_(std::move(p)) {}
  std::optional<MultiPoly> finite_;
};

// Valuation sentinel for identically zero c4 or c6.
inline constexpr int kInfiniteValuation = 1'000'000;

struct PlaceValuations {
  Place place;
  int v_c4 = 0, v_c6 = 0, v_delta = 0;  // after minimalization at the place
};

// Reduction type of the model at one place, by the characteristic-zero
// valuation table after dividing out u^4/u^6/u^12 rescalings:
//   v(delta)=0 -> I0;  v(c4)=0 -> I_{v(delta)};
//   (>=1,1,2) II; (1,>=2,3) III; (>=2,2,4) IV; (>=2,>=3,6) I0*;
//   (2,3,6+n) In*; (>=3,4,8) IV*; (3,>=5,9) III*; (>=4,5,10) II*.
std::pair<KodairaType, PlaceValuations> kodaira_type_at_place(
    const WeierstrassModel& w, const Place& place);

// Singular-fiber configuration of the model: every place dividing the
// discriminant plus infinity. Places are grouped by valuation profile, so an
// irreducible factor of degree d contributes d fibers of its type.
FiberConfiguration fiber_configuration_of(const WeierstrassModel& w);

// Sum of the minimalized v(delta) over all places (finite and infinite);
// equals the Euler characteristic of the configuration.
int total_discriminant_degree(const WeierstrassModel& w);

}  // namespace k3fib
