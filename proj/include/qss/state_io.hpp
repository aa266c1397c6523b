#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "qss/density.hpp"
#include "qss/entanglement.hpp"

namespace qss {

/// Filesystem-level failure (open/read/write), distinct from malformed content.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Versioned on-disk state: layout with party assignments, complex entries as
/// [re, im] pairs, and free-form metadata. Decimal serialization round-trips
/// 64-bit floats bit-exactly.
struct StateFile {
  static constexpr int kFormatVersion = 1;

  DensityMatrix state;
  PartyMap parties;  // label -> party name ("" = unassigned)
  double tolerance = kDefaultVerifyTol;
  nlohmann::json metadata = nlohmann::json::object();

  StateFile(DensityMatrix s, PartyMap p, double tol = kDefaultVerifyTol)
      : state(std::move(s)), parties(std::move(p)), tolerance(tol) {}

  /// Register qubits in layout order: the first qubit label of each party.
  std::vector<std::string> register_labels() const;
};

/// Parses and validates; throws std::invalid_argument on malformed content and
/// IoError on filesystem failure. The density-matrix invariants are enforced
/// at the file-declared tolerance.
StateFile read_state_file(const std::filesystem::path& path);

void write_state_file(const std::filesystem::path& path, const StateFile& file);

}  // namespace qss
