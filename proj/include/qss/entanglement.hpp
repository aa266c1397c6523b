#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "qss/density.hpp"

namespace qss {

/// Assignment of every layout label to a party name.
using PartyMap = std::map<std::string, std::string>;

/// A bipartition of the layout labels. Party-respecting splits keep each
/// party's register qubit together with its primed ancillas.
struct BipartiteSplit {
  std::vector<std::string> side0;
  std::vector<std::string> side1;
};

/// Builds the split with the given side0 labels; side1 is the complement.
/// Both sides must be nonempty.
BipartiteSplit make_split(const SystemLayout& layout, std::span<const std::string> side0);

/// Throws unless every label is assigned a party and no party straddles the
/// split.
void require_party_respecting(const BipartiteSplit& split, const PartyMap& parties);

/// All 2^{n-1}-1 unordered party-respecting bipartitions.
std::vector<BipartiteSplit> enumerate_splits(const SystemLayout& layout, const PartyMap& parties);

struct NegativityReport {
  double trace_norm_pt;    // ||rho^{T_side0}||_1
  double negativity;       // (trace_norm_pt - 1)/2
  double log_negativity;   // log2(trace_norm_pt)
  double min_eigenvalue;   // of the partial transpose
};

/// Spectral diagnostics of the partial transpose over side0. The PT side does
/// not affect any reported quantity.
NegativityReport negativity_report(const DensityMatrix& rho, const BipartiteSplit& split);

/// True iff the partial transpose has an eigenvalue below -tol.
bool is_npt(const DensityMatrix& rho, const BipartiteSplit& split, double tol = kScalarTol);

struct WernerSweepRow {
  Index d;
  double a1;
  double trace_norm_pt;
  double expected;  // (d+2)/d
  double log_negativity;
};

/// Trace norm of the T_{AA'} partial transpose of the example family over a
/// grid of (d, a1), with the (d+2)/d reference column. Rows ordered by (d, a1).
std::vector<WernerSweepRow> werner_example_sweep(std::span<const Index> d_values,
                                                 std::span<const double> a1_values);

}  // namespace qss
