#include "k3fib/poly.hpp"

#include <cctype>

namespace k3fib {

Rational rational(long num, long den) {
  if (den == 0) fail(errc::syntax_error, "zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational rational_from_string(std::string_view text) {
  std::string s(text);
  if (s.empty()) fail(errc::syntax_error, "empty rational literal");
  Rational q;
  if (q.set_str(s, 10) != 0)
    fail(errc::syntax_error, "bad rational literal '" + s + "'");
  if (q.get_den() == 0) fail(errc::syntax_error, "zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

std::string rational_str(const Rational& q) { return q.get_str(); }

const char* var_name(Var v) {
  switch (v) {
    case Var::x0: return "x0";
    case Var::x1: return "x1";
    case Var::x2: return "x2";
    case Var::t: return "t";
  }
  return "?";
}

void MultiPoly::insert_term(const Exponents& e, const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(e, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly MultiPoly::constant(const Rational& value) {
  MultiPoly p;
  p.insert_term(Exponents{}, value);
  return p;
}

MultiPoly MultiPoly::variable(Var v, int exp) {
  if (exp < 0) fail(errc::syntax_error, "negative exponent");
  MultiPoly p;
  Exponents e;
  e[v] = exp;
  p.insert_term(e, rational(1));
  return p;
}

MultiPoly MultiPoly::monomial(const Exponents& e, const Rational& coeff) {
  MultiPoly p;
  p.insert_term(e, coeff);
  return p;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponents{});
}

bool MultiPoly::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == Exponents{} &&
         terms_.begin()->second == 1;
}

int MultiPoly::degree(Var v) const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e[v]);
  return d;
}

int MultiPoly::total_degree() const {
  return terms_.empty() ? -1 : terms_.begin()->first.total();
}

bool MultiPoly::is_homogeneous_in(Var a, Var b) const {
  if (terms_.empty()) return true;
  int d = terms_.begin()->first[a] + terms_.begin()->first[b];
  for (const auto& [e, c] : terms_)
    if (e[a] + e[b] != d) return false;
  return true;
}

const Rational& MultiPoly::leading_coefficient() const {
  static const Rational zero(0);
  return terms_.empty() ? zero : terms_.begin()->second;
}

Exponents MultiPoly::leading_exponents() const {
  return terms_.empty() ? Exponents{} : terms_.begin()->first;
}

MultiPoly MultiPoly::coefficient_of(Var v, int k) const {
  MultiPoly out;
  for (const auto& [e, c] : terms_) {
    if (e[v] != k) continue;
    Exponents r = e;
    r[v] = 0;
    out.insert_term(r, c);
  }
  return out;
}

MultiPoly MultiPoly::leading_coefficient_in(Var v) const {
  return coefficient_of(v, degree(v));
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  MultiPoly out = *this;
  out += o;
  return out;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
  MultiPoly out = *this;
  out -= o;
  return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  for (const auto& [e, c] : o.terms_) insert_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  for (const auto& [e, c] : o.terms_) insert_term(e, -c);
  return *this;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  MultiPoly out;
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      Rational c = ca * cb;
      out.insert_term(ea + eb, c);
    }
  }
  return out;
}

MultiPoly MultiPoly::operator*(const Rational& s) const {
  if (s == 0) return {};
  MultiPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, c * s);
  return out;
}

MultiPoly operator*(const Rational& s, const MultiPoly& p) { return p * s; }

MultiPoly pow(const MultiPoly& base, int exp) {
  if (exp < 0) fail(errc::syntax_error, "negative polynomial power");
  MultiPoly result = MultiPoly::constant(1);
  MultiPoly b = base;
  int k = exp;
  while (k > 0) {
    if (k & 1) result *= b;
    k >>= 1;
    if (k > 0) b *= b;
  }
  return result;
}

MultiPoly MultiPoly::substitute(Var v, const MultiPoly& value) const {
  int d = degree(v);
  if (d <= 0 && !depends_on(v)) return *this;
  // Horner in v over the coefficient polynomials.
  MultiPoly result = coefficient_of(v, d);
  for (int k = d - 1; k >= 0; k--) {
    result = result * value + coefficient_of(v, k);
  }
  return result;
}

Rational MultiPoly::evaluate(const std::map<Var, Rational>& point) const {
  Rational total(0);
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (Var v : kAllVars) {
      if (e[v] == 0) continue;
      auto it = point.find(v);
      if (it == point.end())
        fail(errc::syntax_error,
             std::string("evaluate: no value for ") + var_name(v));
      Rational p = it->second;
      for (int k = 0; k < e[v]; k++) term *= p;
    }
    total += term;
  }
  return total;
}

MultiPoly MultiPoly::derivative(Var v) const {
  MultiPoly out;
  for (const auto& [e, c] : terms_) {
    if (e[v] == 0) continue;
    Exponents r = e;
    r[v] -= 1;
    Rational coeff = c * e[v];
    out.insert_term(r, coeff);
  }
  return out;
}

MultiPoly divide_exact(const MultiPoly& p, const MultiPoly& d) {
  if (d.is_zero()) fail(errc::inexact_factorization, "division by zero polynomial");
  MultiPoly rem = p, quot;
  const Exponents de = d.leading_exponents();
  const Rational& dc = d.leading_coefficient();
  while (!rem.is_zero()) {
    const Exponents re = rem.leading_exponents();
    if (!de.divides(re))
      fail(errc::inexact_factorization, "inexact polynomial division");
    Exponents qe;
    for (int i = 0; i < 4; i++) qe.e[i] = re.e[i] - de.e[i];
    Rational qc = rem.leading_coefficient() / dc;
    MultiPoly term = MultiPoly::monomial(qe, qc);
    quot += term;
    rem -= term * d;
  }
  return quot;
}

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational coeff = c;
    if (first) {
      if (coeff < 0) {
        out += "-";
        coeff = -coeff;
      }
    } else {
      out += coeff < 0 ? " - " : " + ";
      if (coeff < 0) coeff = -coeff;
    }
    bool has_vars = e.total() > 0;
    bool coeff_shown = !has_vars || coeff != 1;
    if (coeff_shown) out += rational_str(coeff);
    bool need_star = coeff_shown;
    for (Var v : kAllVars) {
      if (e[v] == 0) continue;
      if (need_star) out += "*";
      out += var_name(v);
      if (e[v] > 1) out += "^" + std::to_string(e[v]);
      need_star = true;
    }
    first = false;
  }
  return out;
}

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  MultiPoly parse() {
    MultiPoly result;
    skip_ws();
    if (at_end()) fail(errc::syntax_error, "empty polynomial");
    bool expect_term = true;
    while (!at_end()) {
      int sign = 1;
      while (!at_end() && (peek() == '+' || peek() == '-')) {
        if (peek() == '-') sign = -sign;
        advance();
        skip_ws();
        expect_term = true;
      }
      if (at_end()) {
        if (expect_term) syntax("dangling sign");
        break;
      }
      result += parse_term(sign);
      expect_term = false;
      skip_ws();
      if (!at_end() && peek() != '+' && peek() != '-')
        syntax(std::string("expected '+' or '-' before '") + peek() + "'");
    }
    if (expect_term) syntax("missing term");
    return result;
  }

 private:
  [[noreturn]] void syntax(const std::string& what) {
    fail(errc::syntax_error,
         what + " at position " + std::to_string(pos_));
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void advance() { pos_++; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) advance();
  }

  std::string read_digits() {
    std::string out;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      out += peek();
      advance();
    }
    return out;
  }

  MultiPoly parse_term(int sign) {
    Rational coeff = rational(sign);
    Exponents expo;
    bool saw_factor = false;
    bool allow_star = false;
    while (true) {
      skip_ws();
      if (!at_end() && peek() == '*') {
        if (!allow_star) syntax("unexpected '*'");
        advance();
        skip_ws();
        allow_star = false;
      }
      if (at_end()) break;
      char ch = peek();
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        if (saw_factor && allow_star) break;  // next term handles it
        std::string num = read_digits();
        std::string lit = num;
        skip_ws();
        if (!at_end() && peek() == '/') {
          advance();
          skip_ws();
          std::string den = read_digits();
          if (den.empty()) syntax("expected denominator digits");
          lit += "/" + den;
        }
        coeff *= rational_from_string(lit);
        saw_factor = true;
        allow_star = true;
        continue;
      }
      if (std::isalpha(static_cast<unsigned char>(ch))) {
        std::size_t start = pos_;
        std::string ident;
        while (!at_end() && std::isalnum(static_cast<unsigned char>(peek()))) {
          ident += peek();
          advance();
        }
        Var v;
        if (ident == "x0") v = Var::x0;
        else if (ident == "x1") v = Var::x1;
        else if (ident == "x2") v = Var::x2;
        else if (ident == "t") v = Var::t;
        else
          fail(errc::unknown_variable, "unknown variable '" + ident +
                                           "' at position " + std::to_string(start));
        int exp = 1;
        skip_ws();
        if (!at_end() && peek() == '^') {
          advance();
          skip_ws();
          std::string digits = read_digits();
          if (digits.empty()) syntax("expected exponent digits");
          if (digits.size() > 6) syntax("exponent too large");
          exp = std::stoi(digits);
        }
        expo[v] += exp;
        saw_factor = true;
        allow_star = true;
        continue;
      }
      break;
    }
    if (!saw_factor) syntax("expected a term");
    return MultiPoly::monomial(expo, coeff);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

MultiPoly MultiPoly::parse(std::string_view text) {
  return PolyParser(text).parse();
}

}  // namespace k3fib
