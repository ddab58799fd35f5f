#pragma once

#include <compare>
#include <string>
#include <string_view>

#include "k3fib/errors.hpp"

namespace k3fib {

// Kodaira symbols of singular fibers of an elliptic fibration.
// I_0 stands for a smooth fiber slot, I_0* for the star fiber with n = 0.
enum class FiberKind { In, InStar, II, III, IV, IVStar, IIIStar, IIStar };

class KodairaType {
 public:
  static KodairaType I(int n);
  static KodairaType IStar(int n);
  static KodairaType additive(FiberKind kind);  // II, III, IV, II*, III*, IV*

  FiberKind kind() const { return kind_; }
  // Index of I_n / I_n*; zero for the six unindexed additive symbols.
  int n() const { return n_; }

  bool is_smooth() const { return kind_ == FiberKind::In && n_ == 0; }

  int euler_number() const;
  int component_count() const;
  // Rank of the root lattice spanned by the non-identity components.
  int root_rank() const { return component_count() - 1; }
  bool is_reduced() const;

  // Compact symbol: "I0", "I12", "I4*", "II", "III", "IV", "II*", "III*", "IV*".
  std::string str() const;
  static KodairaType parse(std::string_view text);

  // Canonical order: unindexed additive symbols (by Euler number), then I_n
  // ascending, then I_n* ascending.
  friend std::strong_ordering operator<=>(KodairaType a, KodairaType b) {
    if (auto c = a.order_class() <=> b.order_class(); c != 0) return c;
    return a.order_key() <=> b.order_key();
  }
  friend bool operator==(KodairaType a, KodairaType b) {
    return a.kind_ == b.kind_ && a.n_ == b.n_;
  }

 private:
  KodairaType(FiberKind kind, int n) : kind_(kind), n_(n) {}
  int order_class() const;
  int order_key() const;

  FiberKind kind_;
  int n_;
};

// Which fiber component the 2-torsion section meets; needed to apply the
// quotient rule on I_2n and I_2n* fibers (the two rows are distinguished by
// T.Theta_0 = 1 vs T.Theta_n = 1, resp. "near" vs "far").
enum class TorsionMarking { MeetsTheta0, MeetsThetaN, MeetsNear, MeetsFar, None };

const char* marking_name(TorsionMarking m);

bool marking_legal_for(KodairaType f, TorsionMarking m);

// Image of a branch fiber under a ramified quadratic base change:
// I_n -> I_2n, II -> IV, III -> I_0*, IV -> IV*. Requires a reduced fiber.
KodairaType ramified_transform(KodairaType f);

// Image of a fiber under the quotient by translation by a 2-torsion section:
//   III* -> III*,  I_{2n+1} -> I_{4n+2},
//   I_{2n}  -> I_{4n} (meets Theta_0)  | I_n   (meets Theta_n),
//   I*_{2n+1} -> I*_{4n+2},
//   I*_{2n} -> I*_{4n} (meets near)    | I*_n  (meets far).
// II, IV, II*, IV* are incompatible with a 2-torsion section; III has no row.
KodairaType isogeny_transform(KodairaType f, TorsionMarking m);

}  // namespace k3fib
