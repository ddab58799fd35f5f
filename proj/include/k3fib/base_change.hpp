#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "k3fib/configuration.hpp"

namespace k3fib {

// One slot of the branch locus of a quadratic base change: a singular reduced
// fiber type taken from the source configuration, or a smooth fiber (nullopt).
using BranchSlot = std::optional<KodairaType>;

// Unordered pair of branch slots, normalized so smooth slots (I0 counts as
// smooth) come first and singular types are in canonical order.
struct BranchSelection {
  BranchSelection(BranchSlot a, BranchSlot b);
  static BranchSelection smooth() { return {std::nullopt, std::nullopt}; }

  BranchSlot first, second;

  int singular_count() const;
  std::string str() const;  // e.g. "I5+I5", "smooth+I1", "smooth+smooth"

  friend bool operator==(const BranchSelection&, const BranchSelection&) = default;
};

// Pulls a fiber configuration back along a degree-2 base map: the two branch
// slots are replaced by their ramified transforms, every other fiber doubles.
FiberConfiguration apply_quadratic_base_change(const FiberConfiguration& c,
                                               const BranchSelection& branch);

struct ExtremalRES {
  std::string id;
  FiberConfiguration config;
  bool eligible;  // has at least two singular reduced fibers (with multiplicity)
};

// The 16 extremal rational elliptic surfaces; 12 are eligible as sources of
// an extremal K3 quadratic base change. Composing two quadratic base changes
// gives 4:1 covers with group (Z/2Z)^2 or Z/4Z; those are out of scope here.
const std::vector<ExtremalRES>& builtin_extremal_res();

struct ExtremalRow {
  int index = 0;  // 1-based row number
  std::string res_id;
  FiberConfiguration res_config;
  BranchSelection branch{std::nullopt, std::nullopt};
  FiberConfiguration k3_config;
  std::array<int, 3> t_x{};  // transcendental lattice Gram [[a,b],[b,c]] as (a,b,c)
};

// All 25 extremal elliptic K3 fibrations arising as quadratic base changes of
// extremal RES: for each eligible surface, every unordered multiset of two
// singular reduced fiber types with sufficient multiplicity. Deterministic
// order: catalogue order, then branch pairs ascending.
std::vector<ExtremalRow> enumerate_extremal_k3();

struct DedupDivergence {
  std::array<int, 3> t_x{};
  std::vector<int> rows;                     // rows sharing this T_X
  std::vector<std::vector<int>> paper_split; // how the stated grouping splits them
};

struct DedupReport {
  std::vector<std::vector<int>> paper_classes;  // stated coincidence groups
  std::vector<std::vector<int>> tx_classes;     // grouping by exact T_X equality
  std::vector<DedupDivergence> divergences;
  // Rows the stated grouping keeps alone although their T_X matches others.
  std::vector<int> flagged_rows;
};

DedupReport deduplicate_by_transcendental(const std::vector<ExtremalRow>& rows);

// True iff the base change of res_config branched as given yields an extremal
// elliptic K3: the source must be an extremal RES and both branch slots must
// be singular reduced fibers. Branch types absent from the configuration
// raise UnavailableBranch.
bool is_extremal_k3_base_change(const FiberConfiguration& res_config,
                                const BranchSelection& branch);

}  // namespace k3fib
