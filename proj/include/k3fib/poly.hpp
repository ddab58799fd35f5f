#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>

#include "k3fib/errors.hpp"

namespace k3fib {

// Exact rational scalar. gmp keeps results of arithmetic canonical
// (denominator positive, gcd 1); construction goes through rational() /
// rational_from_string() which canonicalize explicitly.
using Rational = mpq_class;
using Integer = mpz_class;

Rational rational(long num, long den = 1);
Rational rational_from_string(std::string_view text);  // "3", "-3/4"
std::string rational_str(const Rational& q);

// The four supported variables, in canonical monomial order.
enum class Var : int { x0 = 0, x1 = 1, x2 = 2, t = 3 };
constexpr std::array<Var, 4> kAllVars = {Var::x0, Var::x1, Var::x2, Var::t};
const char* var_name(Var v);

struct Exponents {
  std::array<int, 4> e{0, 0, 0, 0};

  int operator[](Var v) const { return e[static_cast<int>(v)]; }
  int& operator[](Var v) { return e[static_cast<int>(v)]; }
  int total() const { return e[0] + e[1] + e[2] + e[3]; }

  Exponents operator+(const Exponents& o) const {
    Exponents r;
    for (int i = 0; i < 4; i++) r.e[i] = e[i] + o.e[i];
    return r;
  }
  bool divides(const Exponents& o) const {
    for (int i = 0; i < 4; i++)
      if (e[i] > o.e[i]) return false;
    return true;
  }
  friend bool operator==(const Exponents&, const Exponents&) = default;
};

// Graded lexicographic, higher terms first, so begin() is the leading term.
struct GradedLexDescending {
  bool operator()(const Exponents& a, const Exponents& b) const {
    if (a.total() != b.total()) return a.total() > b.total();
    return a.e > b.e;
  }
};

// Sparse multivariate polynomial over the rationals in x0, x1, x2, t.
// Terms are stored in descending graded-lex order with no zero coefficients.
class MultiPoly {
 public:
  using TermMap = std::map<Exponents, Rational, GradedLexDescending>;

  MultiPoly() = default;
  static MultiPoly constant(const Rational& value);
  static MultiPoly constant(long value) { return constant(rational(value)); }
  static MultiPoly variable(Var v, int exp = 1);
  static MultiPoly monomial(const Exponents& e, const Rational& coeff);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_one() const;
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  // -1 for the zero polynomial.
  int degree(Var v) const;
  int total_degree() const;
  bool depends_on(Var v) const { return degree(v) > 0; }
  // All terms have the same total degree in the given pair of variables.
  bool is_homogeneous_in(Var a, Var b) const;

  const Rational& leading_coefficient() const;
  Exponents leading_exponents() const;

  // Coefficient of v^k, a polynomial free of v.
  MultiPoly coefficient_of(Var v, int k) const;
  // Leading coefficient as a polynomial in the remaining variables.
  MultiPoly leading_coefficient_in(Var v) const;

  MultiPoly operator-() const;
  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
  MultiPoly operator*(const Rational& s) const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.terms_ == b.terms_;
  }

  // Replaces every occurrence of v by the given polynomial (Horner).
  MultiPoly substitute(Var v, const MultiPoly& value) const;
  // Full evaluation; every variable appearing in the polynomial must be set.
  Rational evaluate(const std::map<Var, Rational>& point) const;
  MultiPoly derivative(Var v) const;

  std::string str() const;
  // Grammar: signed terms [coef][*][var[^exp]]..., coef integer or
  // integer/integer, vars x0 x1 x2 t; whitespace ignored.
  static MultiPoly parse(std::string_view text);

 private:
  void insert_term(const Exponents& e, const Rational& coeff);
  TermMap terms_;
};

MultiPoly operator*(const Rational& s, const MultiPoly& p);
MultiPoly pow(const MultiPoly& base, int exp);

// Exact quotient p / d; throws InexactFactorization if d does not divide p.
MultiPoly divide_exact(const MultiPoly& p, const MultiPoly& d);

}  // namespace k3fib
