// Times the Bareiss resultant kernel, serial reference vs OpenMP rows, on
// random inputs shaped like the elimination step of the extraction pipeline:
// polynomials in x1 whose coefficients are dense in t. Both paths must agree
// exactly; the serial one is the reference the test suite checks against.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <random>

#include "k3fib/resultant.hpp"

using namespace k3fib;

namespace {

MultiPoly random_poly(std::mt19937& rng, int deg_x1, int deg_t) {
  std::uniform_int_distribution<int> coeff(-9, 9);
  MultiPoly p;
  for (int k = 0; k <= deg_x1; k++) {
    for (int j = 0; j <= deg_t; j++) {
      Exponents e;
      e[Var::x1] = k;
      e[Var::t] = j;
      int c = coeff(rng);
      if (k == deg_x1 && j == 0 && c == 0) c = 1;
      p += MultiPoly::monomial(e, rational(c));
    }
  }
  return p;
}

double time_ms(Exec exec, const MultiPoly& p, const MultiPoly& q) {
  auto start = std::chrono::steady_clock::now();
  MultiPoly r = resultant(p, q, Var::x1, exec);
  auto stop = std::chrono::steady_clock::now();
  if (r.is_zero()) std::cerr << "(degenerate sample)\n";
  return std::chrono::duration<double, std::milli>(stop - start).count();
}

}  // namespace

int main(int argc, char** argv) {
  int max_degree = argc > 1 ? std::atoi(argv[1]) : 12;
  int deg_t = argc > 2 ? std::atoi(argv[2]) : 4;
  std::mt19937 rng(20240811);
  std::printf("deg_x1  deg_t  serial_ms  parallel_ms  speedup\n");
  for (int d = 6; d <= max_degree; d += 2) {
    MultiPoly p = random_poly(rng, d, deg_t);
    MultiPoly q = random_poly(rng, d - 1, deg_t);
    MultiPoly serial = resultant(p, q, Var::x1, Exec::Serial);
    MultiPoly parallel = resultant(p, q, Var::x1, Exec::Parallel);
    if (!(serial == parallel)) {
      std::fprintf(stderr, "MISMATCH at degree %d\n", d);
      return 1;
    }
    double ts = time_ms(Exec::Serial, p, q);
    double tp = time_ms(Exec::Parallel, p, q);
    std::printf("%6d  %5d  %9.2f  %11.2f  %7.2fx\n", d, deg_t, ts, tp, ts / tp);
    std::fflush(stdout);
  }
  return 0;
}
