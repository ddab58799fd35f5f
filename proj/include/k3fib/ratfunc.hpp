#pragma once

#include "k3fib/poly.hpp"

namespace k3fib {

// Element of the rational-function field Q(t): num/den with den a nonzero
// polynomial in t, normalized so den is primitive with positive leading
// coefficient and gcd(num, den) = 1.
class RatFunc {
 public:
  RatFunc() : num_(), den_(MultiPoly::constant(1)) {}
  RatFunc(MultiPoly num, MultiPoly den);
  explicit RatFunc(MultiPoly num) : RatFunc(std::move(num), MultiPoly::constant(1)) {}
  static RatFunc constant(const Rational& q) { return RatFunc(MultiPoly::constant(q)); }

  const MultiPoly& num() const { return num_; }
  const MultiPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }

  RatFunc operator-() const;
  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator/(const RatFunc& o) const;

  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::string str() const;

 private:
  void normalize();
  MultiPoly num_, den_;
};

RatFunc pow(const RatFunc& base, int exp);

}  // namespace k3fib
