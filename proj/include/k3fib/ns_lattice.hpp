#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "k3fib/errors.hpp"

namespace k3fib {

// Divisor class on a rational elliptic surface in the blow-up basis
// H, E1..E9 of NS(R), with the intersection form H^2 = 1, Ei^2 = -1.
// Coordinates (d; m1..m9) stand for the class d*H - sum mi*Ei, so the
// pairing is d1*d2 - sum m1i*m2i and the exceptional class Ei has -1 in
// slot i. Further coordinates E10, E11, ... may be appended to work on
// blow-ups of R (generalized conic bundles live there).
class DivisorClass {
 public:
  explicit DivisorClass(std::vector<long long> coords);

  static DivisorClass H(std::size_t rank = 10);
  static DivisorClass E(int i, std::size_t rank = 10);  // i in 1..rank-1

  const std::vector<long long>& coords() const { return coords_; }
  std::size_t rank() const { return coords_.size(); }

  DivisorClass operator+(const DivisorClass& other) const;
  DivisorClass operator-(const DivisorClass& other) const;
  DivisorClass operator*(long long k) const;

  std::string str() const;  // e.g. "2H-E1-E2-E3-E4"

  friend bool operator==(const DivisorClass&, const DivisorClass&);

 private:
  std::vector<long long> coords_;  // (d; m1, m2, ...)
};

// d1*d2 - sum mi*ni; classes of different rank are padded with zeros.
long long pairing(const DivisorClass& a, const DivisorClass& b);

// -K = 3H - sum Ei; coincides with the fiber class of the elliptic fibration.
DivisorClass anticanonical(std::size_t rank = 10);

// Numerical conic-class test: D^2 = 0 and D.(-K) = 2. Effectivity depends on
// the specific surface and is not decided here.
bool is_conic_class(const DivisorClass& d);

// Numerical section test: C^2 = -1 and C.(-K) = 1.
bool is_section(const DivisorClass& c);

// Sum of two sections meeting transversally in one point; the result is
// always a conic class.
DivisorClass conic_from_sections(const DivisorClass& c1, const DivisorClass& c2);

// k such that D = k*(-K) with k a positive integer, if any.
std::optional<long long> fiber_class_multiple(const DivisorClass& d);

bool is_fiber_class(const DivisorClass& d);

}  // namespace k3fib
