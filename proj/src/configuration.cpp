#include "k3fib/configuration.hpp"

#include <cctype>

namespace k3fib {

FiberConfiguration::FiberConfiguration(
    std::initializer_list<std::pair<KodairaType, int>> entries) {
  for (const auto& [f, c] : entries) add(f, c);
}

void FiberConfiguration::add(KodairaType f, int count) {
  if (count <= 0) fail(errc::inconsistent_input, "fiber count must be positive");
  if (f.is_smooth()) return;
  entries_[f] += count;
}

void FiberConfiguration::remove(KodairaType f, int count) {
  auto it = entries_.find(f);
  int have = it == entries_.end() ? 0 : it->second;
  if (have < count)
    fail(errc::unavailable_branch,
         "configuration has " + std::to_string(have) + " fiber(s) of type " +
             f.str() + ", needs " + std::to_string(count));
  it->second -= count;
  if (it->second == 0) entries_.erase(it);
}

int FiberConfiguration::count(KodairaType f) const {
  auto it = entries_.find(f);
  return it == entries_.end() ? 0 : it->second;
}

int FiberConfiguration::total_fibers() const {
  int total = 0;
  for (const auto& [f, c] : entries_) total += c;
  return total;
}

int FiberConfiguration::euler_characteristic() const {
  int total = 0;
  for (const auto& [f, c] : entries_) total += c * f.euler_number();
  return total;
}

int FiberConfiguration::trivial_lattice_rank() const {
  int total = 0;
  for (const auto& [f, c] : entries_) total += c * f.root_rank();
  return total;
}

std::string FiberConfiguration::str() const {
  if (entries_.empty()) return "-";
  std::string out;
  for (const auto& [f, c] : entries_) {
    if (!out.empty()) out += '+';
    if (c > 1) out += std::to_string(c);
    out += f.str();
  }
  return out;
}

FiberConfiguration FiberConfiguration::parse(std::string_view text) {
  FiberConfiguration config;
  std::string token;
  std::size_t pos = 0;
  auto flush = [&]() {
    if (token.empty())
      fail(errc::syntax_error, "empty fiber term at position " + std::to_string(pos));
    std::size_t i = 0;
    while (i < token.size() && std::isdigit(static_cast<unsigned char>(token[i]))) i++;
    int count = 1;
    if (i > 0) {
      if (i > 6) fail(errc::syntax_error, "fiber count too large in '" + token + "'");
      count = std::stoi(token.substr(0, i));
      if (count <= 0) fail(errc::syntax_error, "fiber count must be positive in '" + token + "'");
    }
    std::string sym = token.substr(i);
    if (sym.empty())
      fail(errc::syntax_error, "missing fiber symbol in '" + token + "'");
    config.add(KodairaType::parse(sym), count);
    token.clear();
  };
  for (; pos < text.size(); pos++) {
    char ch = text[pos];
    if (std::isspace(static_cast<unsigned char>(ch)) || ch == '_') continue;
    if (ch == '+') {
      flush();
      continue;
    }
    token += ch;
  }
  flush();
  return config;
}

int max_picard(SurfaceClass sc) {
  return sc == SurfaceClass::RationalElliptic ? 10 : 20;
}

int mw_rank(int picard, const FiberConfiguration& c) {
  int trivial = c.trivial_lattice_rank();
  if (picard < 2 + trivial)
    fail(errc::rank_underflow,
         "picard " + std::to_string(picard) + " < 2 + trivial rank " +
             std::to_string(trivial));
  return picard - 2 - trivial;
}

bool is_extremal(SurfaceClass sc, int picard, const FiberConfiguration& c) {
  if (picard != max_picard(sc)) return false;
  return picard == 2 + c.trivial_lattice_rank();
}

QuotientKind quotient_surface_kind(bool symplectic, bool fixed_locus_empty) {
  if (symplectic && fixed_locus_empty)
    fail(errc::inconsistent_input,
         "a symplectic involution fixes 8 points, never an empty locus");
  if (symplectic) return QuotientKind::K3;
  return fixed_locus_empty ? QuotientKind::Enriques : QuotientKind::Rational;
}

namespace {

bool admissible_unpaired(KodairaType f) {
  // Possible branch fibers of a quadratic base change.
  switch (f.kind()) {
    case FiberKind::In: return f.n() % 2 == 0;
    case FiberKind::IV:
    case FiberKind::IVStar: return true;
    case FiberKind::InStar: return f.n() == 0;
    default: return false;
  }
}

}  // namespace

Type2Report type2_candidate(const FiberConfiguration& c) {
  Type2Report report;
  for (const auto& [f, count] : c.entries()) {
    if (count / 2 > 0) report.pairs[f] = count / 2;
    if (count % 2 == 1) report.unpaired.push_back(f);
  }
  report.is_candidate = report.unpaired.size() <= 2;
  for (KodairaType f : report.unpaired)
    if (!admissible_unpaired(f)) report.is_candidate = false;
  return report;
}

bool type1_symplectic_admissible(const FiberConfiguration& c) {
  for (const auto& [f, count] : c.entries())
    if (f.kind() == FiberKind::IIStar || f.kind() == FiberKind::IVStar)
      return false;
  return true;
}

bool type1_nonsymplectic_admissible(const FiberConfiguration& c) {
  int irreducible = 0;
  for (const auto& [f, count] : c.entries()) {
    if (f.component_count() == 1) irreducible += count;
    switch (f.kind()) {
      case FiberKind::II:
      case FiberKind::III:
      case FiberKind::IV:
      case FiberKind::IIStar:
      case FiberKind::IVStar:
        return false;
      case FiberKind::In:
        if (f.n() % 2 == 1 && f.n() > 7) return false;
        break;
      case FiberKind::InStar:
        if (f.n() % 2 == 1 && f.n() > 5) return false;
        if (f.n() % 2 == 0 && f.n() > 12) return false;
        break;
      default:
        break;
    }
  }
  return irreducible <= 6;
}

}  // namespace k3fib
