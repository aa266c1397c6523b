#include "qss/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "qss/states.hpp"

namespace qss {

BipartiteSplit make_split(const SystemLayout& layout, std::span<const std::string> side0) {
  std::set<std::string> chosen;
  for (const auto& l : side0) {
    layout.position(l);  // throws on unknown label
    if (!chosen.insert(l).second)
      throw std::invalid_argument("make_split: label '" + l + "' repeated");
  }
  BipartiteSplit split;
  for (const auto& l : layout.labels())
    (chosen.contains(l) ? split.side0 : split.side1).push_back(l);
  if (split.side0.empty() || split.side1.empty())
    throw std::invalid_argument("make_split: both sides must be nonempty");
  return split;
}

void require_party_respecting(const BipartiteSplit& split, const PartyMap& parties) {
  auto party_of = [&](const std::string& label) -> const std::string& {
    const auto it = parties.find(label);
    if (it == parties.end() || it->second.empty())
      throw std::invalid_argument("split: label '" + label + "' has no party assignment");
    return it->second;
  };
  std::map<std::string, int> side_of_party;
  for (int side = 0; side < 2; ++side)
    for (const auto& l : (side == 0 ? split.side0 : split.side1)) {
      const auto [it, inserted] = side_of_party.emplace(party_of(l), side);
      if (!inserted && it->second != side)
        throw std::invalid_argument("split separates party '" + it->first +
                                    "' from one of its subsystems");
    }
}

std::vector<BipartiteSplit> enumerate_splits(const SystemLayout& layout, const PartyMap& parties) {
  // Parties ordered by first appearance in the layout.
  std::vector<std::string> order;
  for (const auto& l : layout.labels()) {
    const auto it = parties.find(l);
    if (it == parties.end() || it->second.empty())
      throw std::invalid_argument("enumerate_splits: label '" + l + "' has no party assignment");
    if (std::find(order.begin(), order.end(), it->second) == order.end())
      order.push_back(it->second);
  }
  const std::size_t p = order.size();
  if (p < 2) throw std::invalid_argument("enumerate_splits: need at least two parties");

  std::vector<BipartiteSplit> splits;
  // Party 0 stays on side0, so each unordered bipartition appears once.
  for (std::size_t mask = 1; mask < (std::size_t(1) << p); mask += 2) {
    if (mask == (std::size_t(1) << p) - 1) continue;  // side1 empty
    std::set<std::string> side0_parties;
    for (std::size_t b = 0; b < p; ++b)
      if (mask & (std::size_t(1) << b)) side0_parties.insert(order[b]);
    std::vector<std::string> side0_labels;
    for (const auto& l : layout.labels())
      if (side0_parties.contains(parties.at(l))) side0_labels.push_back(l);
    splits.push_back(make_split(layout, side0_labels));
  }
  return splits;
}

NegativityReport negativity_report(const DensityMatrix& rho, const BipartiteSplit& split) {
  const auto all = rho.layout().labels();
  std::set<std::string> seen(split.side0.begin(), split.side0.end());
  for (const auto& l : split.side1)
    if (!seen.insert(l).second)
      throw std::invalid_argument("negativity_report: split sides overlap");
  if (seen.size() != all.size())
    throw std::invalid_argument("negativity_report: split does not cover the layout");

  const Matrix pt = partial_transpose(rho.matrix(), rho.layout(), split.side0);
  const RealVector values = eigh_values(pt);
  const double tn = values.cwiseAbs().sum();
  return {tn, (tn - 1.0) / 2.0, std::log2(tn), values.minCoeff()};
}

bool is_npt(const DensityMatrix& rho, const BipartiteSplit& split, double tol) {
  return negativity_report(rho, split).min_eigenvalue < -tol;
}

std::vector<WernerSweepRow> werner_example_sweep(std::span<const Index> d_values,
                                                 std::span<const double> a1_values) {
  for (const double a1 : a1_values)
    if (!(a1 > 0.0) || !(a1 < 0.5))
      throw std::invalid_argument("werner_example_sweep: a1 must lie in (0, 1/2)");

  std::vector<WernerSweepRow> rows;
  for (const Index d : d_values) {
    for (const double a1 : a1_values) {
      const DensityMatrix rho = make_example_state(a1, 0.5 - a1, d);
      const auto split = make_split(rho.layout(), std::vector<std::string>{"A", "A'"});
      const auto report = negativity_report(rho, split);
      rows.push_back({d, a1, report.trace_norm_pt,
                      static_cast<double>(d + 2) / static_cast<double>(d),
                      report.log_negativity});
    }
  }
  return rows;
}

}  // namespace qss
