#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "k3fib/fiber.hpp"

namespace k3fib {

// Multiset of singular-fiber types of one elliptic fibration. Smooth slots
// (I_0) carry no data and are never stored; entries are kept in canonical
// order so printing and serialization are deterministic.
class FiberConfiguration {
 public:
  FiberConfiguration() = default;
  FiberConfiguration(std::initializer_list<std::pair<KodairaType, int>> entries);

  void add(KodairaType f, int count = 1);
  // Removes `count` fibers of the given type; throws UnavailableBranch if the
  // configuration does not contain that many.
  void remove(KodairaType f, int count = 1);

  int count(KodairaType f) const;
  bool contains(KodairaType f) const { return count(f) > 0; }
  int total_fibers() const;
  bool empty() const { return entries_.empty(); }

  const std::map<KodairaType, int>& entries() const { return entries_; }

  int euler_characteristic() const;
  int trivial_lattice_rank() const;

  // Additive-notation string, e.g. "2III*+2I2+2I1" (canonical order).
  std::string str() const;
  // Parses '+'-separated [count]Symbol tokens; underscores and whitespace are
  // ignored, so "I_9+3I_1" and "I9 + 3I1" both work.
  static FiberConfiguration parse(std::string_view text);

  friend bool operator==(const FiberConfiguration&, const FiberConfiguration&) = default;
  friend auto operator<=>(const FiberConfiguration& a, const FiberConfiguration& b) {
    return a.entries_ <=> b.entries_;
  }

 private:
  std::map<KodairaType, int> entries_;
};

enum class SurfaceClass { RationalElliptic, K3 };

// Largest Picard number of the surface class (h^{1,1}): 10 resp. 20.
int max_picard(SurfaceClass sc);

// Shioda-Tate: rank MW = picard - 2 - sum of (fiber components - 1).
// Throws RankUnderflow when picard < 2 + trivial rank (inconsistent input).
// Torsion is not computed; note that a type-1 fibration on a K3 whose
// involution acts trivially on NS has MW contained in (Z/2Z)^2.
int mw_rank(int picard, const FiberConfiguration& c);

bool is_extremal(SurfaceClass sc, int picard, const FiberConfiguration& c);

// Quotient trichotomy for an involution on a K3 surface. On an Enriques
// quotient both fibers over the branch points of the base map are multiple
// fibers, which is why quotient fibrations with a section never land there.
enum class QuotientKind { K3, Enriques, Rational };
QuotientKind quotient_surface_kind(bool symplectic, bool fixed_locus_empty);

// Pair-up test for fibrations that can be of type 2 with respect to some
// involution: fiber types occur in pairs except for at most two branch-fiber
// types, which must lie in {I_even, IV, I_0*, IV*}.
struct Type2Report {
  bool is_candidate = false;
  std::vector<KodairaType> unpaired;   // types with odd multiplicity
  std::map<KodairaType, int> pairs;    // type -> number of pairs
};
Type2Report type2_candidate(const FiberConfiguration& c);

// A fibration with a 2-torsion section admits no II* or IV* fiber.
bool type1_symplectic_admissible(const FiberConfiguration& c);

// Fiber bounds for a type-1 fibration w.r.t. a non-symplectic involution
// fixing two smooth genus 1 curves (hypothesis asserted by the caller):
// at most 6 irreducible singular fibers; no II*, IV*, II, III, IV; no I_n for
// n odd, n > 7; no I_m* for m odd, m > 5 or m even, m > 12.
bool type1_nonsymplectic_admissible(const FiberConfiguration& c);

}  // namespace k3fib
