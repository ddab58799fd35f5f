#include "k3fib/ratfunc.hpp"

#include "k3fib/factor.hpp"

namespace k3fib {

RatFunc::RatFunc(MultiPoly num, MultiPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  for (Var v : {Var::x0, Var::x1, Var::x2})
    if (num_.degree(v) > 0 || den_.degree(v) > 0)
      fail(errc::inconsistent_input, "rational function must live in Q(t)");
  if (den_.is_zero()) fail(errc::inconsistent_input, "zero denominator");
  normalize();
}

void RatFunc::normalize() {
  if (num_.is_zero()) {
    den_ = MultiPoly::constant(1);
    return;
  }
  MultiPoly g = gcd_univariate(num_, den_, Var::t);
  if (!g.is_one()) {
    num_ = divide_exact(num_, g);
    den_ = divide_exact(den_, g);
  }
  Rational content;
  MultiPoly pp = primitive_part(den_, &content);
  den_ = pp;
  num_ = num_ * Rational(1 / content);
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
  return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const {
  return RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator*(const RatFunc& o) const {
  return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
  if (o.is_zero()) fail(errc::inconsistent_input, "division by zero");
  return RatFunc(num_ * o.den_, den_ * o.num_);
}

std::string RatFunc::str() const {
  if (is_polynomial()) return num_.str();
  return "(" + num_.str() + ") / (" + den_.str() + ")";
}

RatFunc pow(const RatFunc& base, int exp) {
  if (exp < 0) return RatFunc(MultiPoly::constant(1)) / pow(base, -exp);
  RatFunc out(MultiPoly::constant(1));
  for (int i = 0; i < exp; i++) out = out * base;
  return out;
}

}  // namespace k3fib
