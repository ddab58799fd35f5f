#include "k3fib/base_change.hpp"

#include <algorithm>
#include <map>

namespace k3fib {

namespace {

bool slot_less(const BranchSlot& a, const BranchSlot& b) {
  if (!a) return static_cast<bool>(b);
  if (!b) return false;
  return *a < *b;
}

}  // namespace

BranchSelection::BranchSelection(BranchSlot a, BranchSlot b)
    : first(std::move(a)), second(std::move(b)) {
  if (first && first->is_smooth()) first = std::nullopt;
  if (second && second->is_smooth()) second = std::nullopt;
  if (slot_less(second, first)) std::swap(first, second);
}

int BranchSelection::singular_count() const {
  return (first.has_value() ? 1 : 0) + (second.has_value() ? 1 : 0);
}

std::string BranchSelection::str() const {
  auto name = [](const BranchSlot& s) { return s ? s->str() : std::string("smooth"); };
  return name(first) + "+" + name(second);
}

FiberConfiguration apply_quadratic_base_change(const FiberConfiguration& c,
                                               const BranchSelection& branch) {
  for (const BranchSlot& slot : {branch.first, branch.second})
    if (slot && !slot->is_reduced())
      fail(errc::non_reduced_branch,
           "branch fiber " + slot->str() + " is not reduced");

  FiberConfiguration rest = c;
  for (const BranchSlot& slot : {branch.first, branch.second})
    if (slot) rest.remove(*slot);

  FiberConfiguration out;
  for (const auto& [f, count] : rest.entries()) out.add(f, 2 * count);
  for (const BranchSlot& slot : {branch.first, branch.second}) {
    KodairaType image = ramified_transform(slot.value_or(KodairaType::I(0)));
    if (!image.is_smooth()) out.add(image);
  }
  return out;
}

namespace {

int reduced_singular_fibers(const FiberConfiguration& c) {
  int total = 0;
  for (const auto& [f, count] : c.entries())
    if (f.is_reduced()) total += count;
  return total;
}

}  // namespace

const std::vector<ExtremalRES>& builtin_extremal_res() {
  static const std::vector<ExtremalRES> catalogue = [] {
    std::vector<ExtremalRES> v;
    auto put = [&](const char* id, const char* config) {
      FiberConfiguration c = FiberConfiguration::parse(config);
      bool eligible = reduced_singular_fibers(c) >= 2;
      v.push_back({id, std::move(c), eligible});
    };
    // Surfaces with base-change rows first, in enumeration order.
    put("X_211", "II*+2I1");
    put("X_411", "I4*+2I1");
    put("X_9111", "I9+3I1");
    put("X_321", "III*+I2+I1");
    put("X_8211", "I8+I2+2I1");
    put("X_431", "IV*+I3+I1");
    put("X_222", "I2*+2I2");
    put("X_141", "I1*+I4+I1");
    put("X_6321", "I6+I3+I2+I1");
    put("X_5511", "2I5+2I1");
    put("X_4422", "2I4+2I2");
    put("X_3333", "4I3");
    // At most one singular reduced fiber: no extremal K3 base change.
    put("X_22", "II*+II");
    put("X_33", "III*+III");
    put("X_44", "IV*+IV");
    put("X_11", "2I0*");
    return v;
  }();
  return catalogue;
}

namespace {

// Transcendental lattices of the 25 base-change K3s, keyed by surface and
// branch pair. Reference data; the artifact does not derive these.
const std::map<std::pair<std::string, std::string>, std::array<int, 3>>&
transcendental_table() {
  static const std::map<std::pair<std::string, std::string>, std::array<int, 3>>
      table = {
          {{"X_211", "I1+I1"}, {2, 0, 2}},
          {{"X_411", "I1+I1"}, {2, 0, 2}},
          {{"X_9111", "I1+I1"}, {4, 2, 10}},
          {{"X_9111", "I1+I9"}, {2, 0, 2}},
          {{"X_321", "I1+I2"}, {2, 0, 4}},
          {{"X_8211", "I1+I1"}, {4, 0, 4}},
          {{"X_8211", "I1+I2"}, {2, 0, 4}},
          {{"X_8211", "I1+I8"}, {2, 0, 4}},
          {{"X_8211", "I2+I8"}, {2, 0, 2}},
          {{"X_431", "I1+I3"}, {2, 0, 6}},
          {{"X_222", "I2+I2"}, {4, 0, 4}},
          {{"X_141", "I1+I4"}, {2, 0, 8}},
          {{"X_6321", "I1+I2"}, {6, 0, 12}},
          {{"X_6321", "I1+I3"}, {2, 0, 6}},
          {{"X_6321", "I1+I6"}, {2, 0, 12}},
          {{"X_6321", "I2+I3"}, {4, 0, 6}},
          {{"X_6321", "I2+I6"}, {4, 2, 4}},
          {{"X_6321", "I3+I6"}, {2, 0, 4}},
          {{"X_5511", "I1+I1"}, {10, 0, 10}},
          {{"X_5511", "I1+I5"}, {2, 0, 10}},
          {{"X_5511", "I5+I5"}, {2, 0, 2}},
          {{"X_4422", "I2+I2"}, {4, 0, 4}},
          {{"X_4422", "I2+I4"}, {4, 0, 8}},
          {{"X_4422", "I4+I4"}, {4, 0, 4}},
          {{"X_3333", "I3+I3"}, {6, 0, 6}},
      };
  return table;
}

// The coincidence groups among the 25 rows as stated alongside the table.
const std::vector<std::vector<int>>& stated_coincidences() {
  static const std::vector<std::vector<int>> groups = {
      {1, 2, 4, 9, 21}, {5, 7, 8}, {6, 11, 22, 24}, {10, 14}};
  return groups;
}

}  // namespace

std::vector<ExtremalRow> enumerate_extremal_k3() {
  std::vector<ExtremalRow> rows;
  for (const ExtremalRES& res : builtin_extremal_res()) {
    if (!res.eligible) continue;
    std::vector<KodairaType> reduced;
    for (const auto& [f, count] : res.config.entries())
      if (f.is_reduced()) reduced.push_back(f);
    for (std::size_t i = 0; i < reduced.size(); i++) {
      for (std::size_t j = i; j < reduced.size(); j++) {
        if (i == j && res.config.count(reduced[i]) < 2) continue;
        BranchSelection branch(reduced[i], reduced[j]);
        ExtremalRow row;
        row.index = static_cast<int>(rows.size()) + 1;
        row.res_id = res.id;
        row.res_config = res.config;
        row.branch = branch;
        row.k3_config = apply_quadratic_base_change(res.config, branch);
        auto it = transcendental_table().find({res.id, branch.str()});
        if (it == transcendental_table().end())
          fail(errc::inconsistent_input,
               "no transcendental lattice on record for " + res.id + " / " +
                   branch.str());
        row.t_x = it->second;
        rows.push_back(std::move(row));
      }
    }
  }
  return rows;
}

DedupReport deduplicate_by_transcendental(const std::vector<ExtremalRow>& rows) {
  DedupReport report;

  std::map<int, std::vector<int>> paper_class_of;  // row -> its class
  std::vector<bool> grouped(rows.size() + 1, false);
  for (const auto& group : stated_coincidences()) {
    report.paper_classes.push_back(group);
    for (int r : group) grouped[r] = true;
  }
  for (const ExtremalRow& row : rows)
    if (!grouped[row.index]) report.paper_classes.push_back({row.index});
  std::sort(report.paper_classes.begin(), report.paper_classes.end());
  for (const auto& cls : report.paper_classes)
    for (int r : cls) paper_class_of[r] = cls;

  std::map<std::array<int, 3>, std::vector<int>> by_tx;
  for (const ExtremalRow& row : rows) by_tx[row.t_x].push_back(row.index);
  for (auto& [tx, members] : by_tx) report.tx_classes.push_back(members);
  std::sort(report.tx_classes.begin(), report.tx_classes.end());

  for (const auto& [tx, members] : by_tx) {
    std::vector<std::vector<int>> split;
    for (int r : members) {
      std::vector<int> part;
      for (int s : paper_class_of[r])
        if (std::find(members.begin(), members.end(), s) != members.end())
          part.push_back(s);
      if (std::find(split.begin(), split.end(), part) == split.end())
        split.push_back(part);
    }
    if (split.size() <= 1) continue;
    report.divergences.push_back({tx, members, split});
    for (const auto& part : split)
      if (part.size() == 1) report.flagged_rows.push_back(part[0]);
  }
  std::sort(report.flagged_rows.begin(), report.flagged_rows.end());
  return report;
}

bool is_extremal_k3_base_change(const FiberConfiguration& res_config,
                                const BranchSelection& branch) {
  FiberConfiguration rest = res_config;
  for (const BranchSlot& slot : {branch.first, branch.second})
    if (slot) rest.remove(*slot);  // UnavailableBranch if absent

  if (res_config.euler_characteristic() != 12) return false;
  if (res_config.trivial_lattice_rank() != 8) return false;
  for (const BranchSlot& slot : {branch.first, branch.second}) {
    if (!slot) return false;                 // smooth branch fiber
    if (!slot->is_reduced()) return false;   // would not give a K3
    if (slot->is_smooth()) return false;
  }
  return true;
}

}  // namespace k3fib
