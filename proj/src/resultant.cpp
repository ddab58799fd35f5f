#include "k3fib/resultant.hpp"

#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace k3fib {

namespace {

bool run_parallel(Exec exec, std::size_t n) {
#ifdef _OPENMP
  if (exec == Exec::Parallel) return true;
  if (exec == Exec::Auto) return n >= 8 && omp_get_max_threads() > 1;
#else
  (void)exec;
  (void)n;
#endif
  return false;
}

// res(p, q) for q linear in v: lc^deg(p) * p(-q0/lc), evaluated without
// leaving the polynomial ring.
MultiPoly linear_resultant(const MultiPoly& p, const MultiPoly& q, Var v) {
  MultiPoly lc = q.coefficient_of(v, 1);
  MultiPoly root_num = -q.coefficient_of(v, 0);
  int d = p.degree(v);
  MultiPoly result;
  for (int k = 0; k <= d; k++) {
    MultiPoly coeff = p.coefficient_of(v, k);
    if (coeff.is_zero()) continue;
    result += coeff * pow(root_num, k) * pow(lc, d - k);
  }
  return result;
}

}  // namespace

MultiPoly bareiss_determinant(std::vector<std::vector<MultiPoly>> m, Exec exec) {
  const std::size_t n = m.size();
  if (n == 0) return MultiPoly::constant(1);
  bool parallel = run_parallel(exec, n);
  int sign = 1;
  MultiPoly prev = MultiPoly::constant(1);
  for (std::size_t k = 0; k + 1 < n; k++) {
    if (m[k][k].is_zero()) {
      std::size_t pivot = k + 1;
      while (pivot < n && m[pivot][k].is_zero()) pivot++;
      if (pivot == n) return MultiPoly();  // singular
      std::swap(m[k], m[pivot]);
      sign = -sign;
    }
    const MultiPoly& pivot = m[k][k];
    if (parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
      for (std::size_t i = k + 1; i < n; i++) {
        for (std::size_t j = k + 1; j < n; j++)
          m[i][j] = divide_exact(pivot * m[i][j] - m[i][k] * m[k][j], prev);
        m[i][k] = MultiPoly();
      }
#endif
    } else {
      for (std::size_t i = k + 1; i < n; i++) {
        for (std::size_t j = k + 1; j < n; j++)
          m[i][j] = divide_exact(pivot * m[i][j] - m[i][k] * m[k][j], prev);
        m[i][k] = MultiPoly();
      }
    }
    prev = m[k][k];
  }
  MultiPoly det = m[n - 1][n - 1];
  return sign < 0 ? -det : det;
}

MultiPoly resultant(const MultiPoly& p, const MultiPoly& q, Var v, Exec exec) {
  const int dp = p.degree(v), dq = q.degree(v);
  if (dp <= 0 && dq <= 0)
    fail(errc::degenerate_resultant,
         "both polynomials are free of " + std::string(var_name(v)));
  if (dq <= 0) return pow(q, dp);
  if (dp <= 0) return pow(p, dq);
  if (dq == 1) return linear_resultant(p, q, v);
  if (dp == 1) {
    MultiPoly r = linear_resultant(q, p, v);
    return (dp * dq) % 2 == 1 ? -r : r;
  }

  // Sylvester matrix with q's coefficient rows first, matching the stated
  // root-product convention.
  const std::size_t n = static_cast<std::size_t>(dp + dq);
  std::vector<std::vector<MultiPoly>> m(n, std::vector<MultiPoly>(n));
  for (int row = 0; row < dp; row++)
    for (int k = 0; k <= dq; k++)
      m[static_cast<std::size_t>(row)][static_cast<std::size_t>(row + k)] =
          q.coefficient_of(v, dq - k);
  for (int row = 0; row < dq; row++)
    for (int k = 0; k <= dp; k++)
      m[static_cast<std::size_t>(dp + row)][static_cast<std::size_t>(row + k)] =
          p.coefficient_of(v, dp - k);
  return bareiss_determinant(std::move(m), exec);
}

}  // namespace k3fib
