#include "k3fib/ns_lattice.hpp"

#include <algorithm>

namespace k3fib {

DivisorClass::DivisorClass(std::vector<long long> coords)
    : coords_(std::move(coords)) {
  if (coords_.size() < 10)
    fail(errc::inconsistent_input,
         "divisor class needs at least the 10 coordinates (d; m1..m9)");
}

DivisorClass DivisorClass::H(std::size_t rank) {
  std::vector<long long> c(rank, 0);
  c[0] = 1;
  return DivisorClass(std::move(c));
}

DivisorClass DivisorClass::E(int i, std::size_t rank) {
  if (i < 1 || static_cast<std::size_t>(i) >= rank)
    fail(errc::inconsistent_input, "exceptional index out of range");
  std::vector<long long> c(rank, 0);
  c[static_cast<std::size_t>(i)] = -1;
  return DivisorClass(std::move(c));
}

namespace {

std::vector<long long> padded(const std::vector<long long>& v, std::size_t n) {
  std::vector<long long> out = v;
  out.resize(n, 0);
  return out;
}

}  // namespace

DivisorClass DivisorClass::operator+(const DivisorClass& other) const {
  std::size_t n = std::max(rank(), other.rank());
  std::vector<long long> a = padded(coords_, n), b = padded(other.coords_, n);
  for (std::size_t i = 0; i < n; i++) a[i] += b[i];
  return DivisorClass(std::move(a));
}

DivisorClass DivisorClass::operator-(const DivisorClass& other) const {
  std::size_t n = std::max(rank(), other.rank());
  std::vector<long long> a = padded(coords_, n), b = padded(other.coords_, n);
  for (std::size_t i = 0; i < n; i++) a[i] -= b[i];
  return DivisorClass(std::move(a));
}

DivisorClass DivisorClass::operator*(long long k) const {
  std::vector<long long> a = coords_;
  for (auto& x : a) x *= k;
  return DivisorClass(std::move(a));
}

bool operator==(const DivisorClass& a, const DivisorClass& b) {
  std::size_t n = std::max(a.rank(), b.rank());
  return padded(a.coords_, n) == padded(b.coords_, n);
}

std::string DivisorClass::str() const {
  std::string out;
  auto append = [&](long long coeff, const std::string& sym) {
    if (coeff == 0) return;
    if (coeff > 0 && !out.empty()) out += '+';
    if (coeff == -1)
      out += '-';
    else if (coeff != 1)
      out += std::to_string(coeff);
    out += sym;
  };
  append(coords_[0], "H");
  for (std::size_t i = 1; i < coords_.size(); i++)
    append(-coords_[i], "E" + std::to_string(i));
  return out.empty() ? "0" : out;
}

long long pairing(const DivisorClass& a, const DivisorClass& b) {
  std::size_t n = std::max(a.rank(), b.rank());
  std::vector<long long> x = padded(a.coords(), n), y = padded(b.coords(), n);
  long long total = x[0] * y[0];
  for (std::size_t i = 1; i < n; i++) total -= x[i] * y[i];
  return total;
}

DivisorClass anticanonical(std::size_t rank) {
  std::vector<long long> c(rank, 1);
  c[0] = 3;
  return DivisorClass(std::move(c));
}

bool is_conic_class(const DivisorClass& d) {
  return pairing(d, d) == 0 && pairing(d, anticanonical(d.rank())) == 2;
}

bool is_section(const DivisorClass& c) {
  return pairing(c, c) == -1 && pairing(c, anticanonical(c.rank())) == 1;
}

DivisorClass conic_from_sections(const DivisorClass& c1, const DivisorClass& c2) {
  if (!is_section(c1))
    fail(errc::not_a_section, c1.str() + " is not a section class");
  if (!is_section(c2))
    fail(errc::not_a_section, c2.str() + " is not a section class");
  if (pairing(c1, c2) != 1)
    fail(errc::wrong_intersection,
         "sections must meet transversally in one point, got " +
             std::to_string(pairing(c1, c2)));
  return c1 + c2;
}

std::optional<long long> fiber_class_multiple(const DivisorClass& d) {
  const auto& c = d.coords();
  if (c[0] <= 0 || c[0] % 3 != 0) return std::nullopt;
  long long k = c[0] / 3;
  for (std::size_t i = 1; i < c.size(); i++)
    if (c[i] != k) return std::nullopt;
  return k;
}

bool is_fiber_class(const DivisorClass& d) {
  return fiber_class_multiple(d).has_value();
}

}  // namespace k3fib
