#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "k3fib/poly.hpp"

namespace k3fib {

// Quotient if d divides p exactly, nullopt otherwise.
std::optional<MultiPoly> try_divide(const MultiPoly& p, const MultiPoly& d);

// Largest k with p^k dividing f; f must be nonzero.
int valuation(const MultiPoly& f, const MultiPoly& p);

// Writes p = content * pp with pp having coprime integer coefficients and a
// positive leading (graded-lex) coefficient. pp(0) = 0 with content 1.
MultiPoly primitive_part(const MultiPoly& p, Rational* content = nullptr);

// Pseudo-remainder: lc_v(b)^(deg a - deg b + 1) * a mod b, eliminating v.
MultiPoly pseudo_remainder(const MultiPoly& a, const MultiPoly& b, Var v);

// Gcd of polynomials univariate in v, normalized primitive with positive
// leading coefficient. gcd(0, 0) = 0.
MultiPoly gcd_univariate(const MultiPoly& p, const MultiPoly& q, Var v);

// Gcd of the main-variable parts of two polynomials in {main, param} via the
// subresultant PRS, i.e. the gcd over the fraction field Q(param) normalized
// primitive over Z[param]. Contents in param are ignored.
MultiPoly gcd_in_main(const MultiPoly& p, const MultiPoly& q, Var main, Var param);

// Content of p seen as a polynomial in main with coefficients in Q[param].
MultiPoly content_in_main(const MultiPoly& p, Var main, Var param);

// Squarefree decomposition p ~ prod f_i^i (Yun); factors primitive, returned
// as (factor, multiplicity) with multiplicity ascending. Univariate flavor
// works over Q, the main/param flavor over Q(param).
std::vector<std::pair<MultiPoly, int>> squarefree_decomposition(
    const MultiPoly& p, Var v);
std::vector<std::pair<MultiPoly, int>> squarefree_decomposition(
    const MultiPoly& p, Var main, Var param);

// Splits a squarefree d into groups of irreducible places sharing the same
// valuation of f: returns (g, k) with g | d collecting every place p | d
// with v_p(f) = k. f nonzero.
std::vector<std::pair<MultiPoly, int>> split_by_valuation(
    const MultiPoly& d, const MultiPoly& f, Var v);

// r = a^2 * b * c with r homogeneous in (x0, x2) and free of x1: c depends
// only on t, b is primitive and squarefree in (x0, x2) over Q(t), a is the
// maximal square part.
struct SquarePartDecomposition {
  MultiPoly a, b, c;
};
SquarePartDecomposition square_part_decompose(const MultiPoly& r);

}  // namespace k3fib
