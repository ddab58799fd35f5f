#pragma once

#include <vector>

#include "k3fib/poly.hpp"

namespace k3fib {

enum class Exec { Auto, Serial, Parallel };

// Sylvester resultant of p and q with respect to v, with the convention
//   res(p, q, v) = lc_v(q)^deg_v(p) * prod over roots s of q of p(s),
// so for monic linear q = v - s it equals p with s substituted for v.
// Degenerate when both inputs have degree 0 in v. Linear q (or p) takes the
// direct evaluation path; larger inputs run fraction-free Bareiss elimination
// on the Sylvester matrix. Exec::Parallel updates elimination rows with
// OpenMP; Exec::Serial is the reference path the tests compare against.
MultiPoly resultant(const MultiPoly& p, const MultiPoly& q, Var v,
                    Exec exec = Exec::Auto);

// Bareiss determinant of a square polynomial matrix (used by resultant;
// exposed for the benchmark and the serial/parallel equivalence tests).
MultiPoly bareiss_determinant(std::vector<std::vector<MultiPoly>> m,
                              Exec exec = Exec::Auto);

}  // namespace k3fib
