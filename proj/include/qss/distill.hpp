#pragma once

#include <span>
#include <string>
#include <vector>

#include "qss/density.hpp"

namespace qss {

/// One branch of a computational-basis measurement; the measured qubit is
/// removed from the post-state's layout.
struct MeasurementOutcome {
  int result;
  double probability;
  DensityMatrix post_state;
};

/// Conjugation by the CNOT embedded at the two qubit positions.
DensityMatrix apply_cnot(const DensityMatrix& rho, const std::string& control,
                         const std::string& target);

/// Projective measurement of one qubit in the standard basis. Outcomes of
/// probability <= 1e-12 are omitted; post-states are renormalized with the
/// measured qubit removed.
std::vector<MeasurementOutcome> measure_computational(const DensityMatrix& rho,
                                                      const std::string& system);

/// Theorem-3 step: CNOT between the two player qubits of a 3-party register
/// (dealer, player1, player2), then measure player1. For a secret-sharing
/// input each branch is a private state on (dealer, player2).
std::vector<MeasurementOutcome> reduce_to_private(const DensityMatrix& rho,
                                                  std::span<const std::string> register_labels);

/// Induction step: CNOT from register qubit `control` to `target`, measure
/// `control` and drop it. For an n-party secret-sharing input (n >= 4) each
/// branch is an (n-1)-party secret-sharing state.
std::vector<MeasurementOutcome> reduce_n_party(const DensityMatrix& rho,
                                               std::span<const std::string> register_labels,
                                               const std::string& control,
                                               const std::string& target);

/// Block form of Eq.-(9)-type private states on the two key qubits: the four
/// key blocks have trace norm 1/2 and every other register block vanishes.
bool check_private_state_form(const DensityMatrix& rho, const std::string& key1,
                              const std::string& key2, double norm_tol = kPipelineTol,
                              double support_tol = kStructuralTol);

}  // namespace qss
