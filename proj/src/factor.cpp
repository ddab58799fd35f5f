#include "k3fib/factor.hpp"

#include <algorithm>

namespace k3fib {

std::optional<MultiPoly> try_divide(const MultiPoly& p, const MultiPoly& d) {
  if (d.is_zero()) return std::nullopt;
  MultiPoly rem = p, quot;
  const Exponents de = d.leading_exponents();
  const Rational& dc = d.leading_coefficient();
  while (!rem.is_zero()) {
    const Exponents re = rem.leading_exponents();
    if (!de.divides(re)) return std::nullopt;
    Exponents qe;
    for (int i = 0; i < 4; i++) qe.e[i] = re.e[i] - de.e[i];
    Rational qc = rem.leading_coefficient() / dc;
    MultiPoly term = MultiPoly::monomial(qe, qc);
    quot += term;
    rem -= term * d;
  }
  return quot;
}

int valuation(const MultiPoly& f, const MultiPoly& p) {
  if (f.is_zero())
    fail(errc::inexact_factorization, "valuation of the zero polynomial");
  if (p.is_constant())
    fail(errc::inexact_factorization, "valuation at a constant");
  int k = 0;
  MultiPoly cur = f;
  while (true) {
    auto q = try_divide(cur, p);
    if (!q) return k;
    cur = std::move(*q);
    k++;
  }
}

MultiPoly primitive_part(const MultiPoly& p, Rational* content) {
  if (p.is_zero()) {
    if (content) *content = 1;
    return p;
  }
  Integer num_gcd = 0, den_lcm = 1;
  for (const auto& [e, c] : p.terms()) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
  }
  Rational scale(num_gcd, den_lcm);
  scale.canonicalize();
  if (p.leading_coefficient() < 0) scale = -scale;
  if (content) *content = scale;
  return p * Rational(1 / scale);
}

MultiPoly pseudo_remainder(const MultiPoly& a, const MultiPoly& b, Var v) {
  int da = a.degree(v), db = b.degree(v);
  if (db < 0) fail(errc::inexact_factorization, "pseudo-division by zero");
  if (da < db) return a;
  MultiPoly lc = b.leading_coefficient_in(v);
  MultiPoly rem = a;
  // Multiply stepwise instead of up front; same result, smaller intermediates.
  int steps = da - db + 1;
  for (int i = 0; i < steps; i++) {
    int dr = rem.degree(v);
    if (dr < db) {
      rem = rem * pow(lc, steps - i);
      break;
    }
    MultiPoly coeff = rem.coefficient_of(v, dr);
    rem = rem * lc - coeff * MultiPoly::variable(v, dr - db) * b;
  }
  return rem;
}

MultiPoly gcd_univariate(const MultiPoly& p, const MultiPoly& q, Var v) {
  MultiPoly a = primitive_part(p), b = primitive_part(q);
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.degree(v) < b.degree(v)) std::swap(a, b);
  // Primitive PRS; cheap and robust for the univariate sizes seen here.
  while (true) {
    if (b.degree(v) <= 0) {
      if (b.is_zero()) return primitive_part(a);
      return MultiPoly::constant(1);
    }
    MultiPoly r = pseudo_remainder(a, b, v);
    a = std::move(b);
    b = primitive_part(r);
  }
}

MultiPoly content_in_main(const MultiPoly& p, Var main, Var param) {
  MultiPoly content;
  for (int k = 0; k <= p.degree(main); k++) {
    MultiPoly coeff = p.coefficient_of(main, k);
    if (coeff.is_zero()) continue;
    content = gcd_univariate(content, coeff, param);
    if (content.is_constant()) break;
  }
  return content.is_zero() ? MultiPoly() : content;
}

namespace {

MultiPoly primitive_in_main(const MultiPoly& p, Var main, Var param) {
  if (p.is_zero()) return p;
  MultiPoly content = content_in_main(p, main, param);
  MultiPoly pp = content.is_constant() ? p : divide_exact(p, content);
  return primitive_part(pp);
}

}  // namespace

MultiPoly gcd_in_main(const MultiPoly& p, const MultiPoly& q, Var main, Var param) {
  MultiPoly a = primitive_in_main(p, main, param);
  MultiPoly b = primitive_in_main(q, main, param);
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.degree(main) < b.degree(main)) std::swap(a, b);
  if (b.degree(main) == 0) return MultiPoly::constant(1);

  // Subresultant PRS (Collins); the g*h^delta divisions are exact.
  MultiPoly g = MultiPoly::constant(1), h = MultiPoly::constant(1);
  while (true) {
    int delta = a.degree(main) - b.degree(main);
    MultiPoly r = pseudo_remainder(a, b, main);
    if (r.is_zero()) return primitive_in_main(b, main, param);
    if (r.degree(main) == 0) return MultiPoly::constant(1);
    a = b;
    b = divide_exact(r, g * pow(h, delta));
    g = a.leading_coefficient_in(main);
    // h = g^delta * h^(1-delta), kept polynomial by exact division.
    MultiPoly gd = pow(g, delta);
    h = delta == 0 ? h : (delta == 1 ? gd : divide_exact(gd, pow(h, delta - 1)));
  }
}

namespace {

using Factors = std::vector<std::pair<MultiPoly, int>>;

// Yun's algorithm; gcd_fn must compute gcds in F[main] for the coefficient
// field F in use, returning primitive representatives.
template <typename GcdFn>
Factors yun(const MultiPoly& p, Var main, GcdFn gcd_fn) {
  Factors factors;
  if (p.degree(main) <= 0) return factors;
  MultiPoly dp = p.derivative(main);
  MultiPoly g = gcd_fn(p, dp);
  MultiPoly w = divide_exact(p, g);
  MultiPoly y = divide_exact(dp, g);
  int i = 1;
  while (w.degree(main) > 0) {
    MultiPoly z = y - w.derivative(main);
    if (z.is_zero()) {
      factors.emplace_back(primitive_part(w), i);
      break;
    }
    MultiPoly f = gcd_fn(w, z);
    if (f.degree(main) > 0) factors.emplace_back(primitive_part(f), i);
    w = divide_exact(w, f);
    y = divide_exact(z, f);
    i++;
  }
  return factors;
}

}  // namespace

std::vector<std::pair<MultiPoly, int>> squarefree_decomposition(
    const MultiPoly& p, Var v) {
  MultiPoly pp = primitive_part(p);
  return yun(pp, v, [v](const MultiPoly& a, const MultiPoly& b) {
    return gcd_univariate(a, b, v);
  });
}

std::vector<std::pair<MultiPoly, int>> squarefree_decomposition(
    const MultiPoly& p, Var main, Var param) {
  MultiPoly pp = primitive_in_main(p, main, param);
  return yun(pp, main, [main, param](const MultiPoly& a, const MultiPoly& b) {
    return gcd_in_main(a, b, main, param);
  });
}

std::vector<std::pair<MultiPoly, int>> split_by_valuation(
    const MultiPoly& d, const MultiPoly& f, Var v) {
  if (f.is_zero())
    fail(errc::inexact_factorization, "cannot split by the zero polynomial");
  std::vector<std::pair<MultiPoly, int>> groups;
  MultiPoly g = gcd_univariate(d, f, v);          // places with valuation >= 1
  MultiPoly rest = divide_exact(primitive_part(d), g);
  if (rest.degree(v) > 0) groups.emplace_back(primitive_part(rest), 0);
  MultiPoly remaining_f = f;
  int k = 1;
  while (g.degree(v) > 0) {
    remaining_f = divide_exact(remaining_f, g);
    MultiPoly next = gcd_univariate(g, remaining_f, v);  // valuation >= k+1
    MultiPoly exact = divide_exact(g, next);
    if (exact.degree(v) > 0) groups.emplace_back(primitive_part(exact), k);
    g = std::move(next);
    k++;
  }
  return groups;
}

SquarePartDecomposition square_part_decompose(const MultiPoly& r) {
  if (r.is_zero())
    fail(errc::not_homogeneous, "cannot decompose the zero polynomial");
  if (r.degree(Var::x1) > 0)
    fail(errc::not_homogeneous, "input must be free of x1");
  if (!r.is_homogeneous_in(Var::x0, Var::x2))
    fail(errc::not_homogeneous, "input must be homogeneous in (x0, x2)");

  const int n = r.leading_exponents()[Var::x0] + r.leading_exponents()[Var::x2];
  MultiPoly dehom = r.substitute(Var::x2, MultiPoly::constant(1));
  const int d = std::max(dehom.degree(Var::x0), 0);
  const int x2_mult = n - d;

  MultiPoly content = content_in_main(dehom, Var::x0, Var::t);
  MultiPoly primitive = content.is_constant() ? dehom : divide_exact(dehom, content);

  Factors factors = squarefree_decomposition(primitive, Var::x0, Var::t);

  auto rehomogenize = [](const MultiPoly& p) {
    int deg = p.degree(Var::x0);
    MultiPoly out;
    for (const auto& [e, c] : p.terms()) {
      Exponents shifted = e;
      shifted[Var::x2] = deg - e[Var::x0];
      out += MultiPoly::monomial(shifted, c);
    }
    return out;
  };

  MultiPoly a_affine = MultiPoly::constant(1);
  MultiPoly b_affine = MultiPoly::constant(1);
  for (const auto& [factor, mult] : factors) {
    if (mult / 2 > 0) a_affine *= pow(factor, mult / 2);
    if (mult % 2 == 1) b_affine *= factor;
  }

  SquarePartDecomposition out;
  out.a = primitive_part(MultiPoly::variable(Var::x2, x2_mult / 2) *
                         rehomogenize(a_affine));
  out.b = primitive_part(MultiPoly::variable(Var::x2, x2_mult % 2) *
                         rehomogenize(b_affine));
  auto c = try_divide(r, out.a * out.a * out.b);
  if (!c || c->degree(Var::x0) > 0 || c->degree(Var::x2) > 0)
    fail(errc::inexact_factorization,
         "square-part decomposition failed to reproduce the input");
  out.c = std::move(*c);
  return out;
}

}  // namespace k3fib
