#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "qss/density.hpp"

namespace qss {

/// (1/2^{n-1}) sum_{I,J even} |I><J| (x) U_I inner U_J^dag on register qubits
/// A1..An with the joint primed system kept as a single trailing "inner"
/// subsystem. The map must hold exactly the 2^{n-1} even-parity keys.
DensityMatrix make_secret_sharing_state(const DensityMatrix& inner,
                                        const std::map<ParityIndex, Matrix>& unitaries,
                                        int n);

/// Splits the single subsystem `label` of `rho` into consecutive factors with
/// the given labels and dimensions (a pure relabeling; the product of the new
/// dims must equal the old dimension).
DensityMatrix split_label(const DensityMatrix& rho, const std::string& label,
                          std::span<const std::pair<std::string, Index>> parts);

/// The even-parity three-qubit basis vector psi_j on labels A,B,C:
/// psi_0 = (|000>+|011>+|101>+|110>)/2 and sign patterns ++--, +-+-, +--+
/// on those four kets for j = 1,2,3.
PureState make_even_parity_state(int j);

/// (1/2) sum_{i,j} |ii><jj| (x) u_i inner u_j^dag on key qubits A,C and a
/// trailing "inner" subsystem.
DensityMatrix make_private_state(const DensityMatrix& inner, const Matrix& u0, const Matrix& u1);

/// Flip (swap) operator sum_ij |ij><ji| on a d (x) d system.
Matrix make_flip(Index d);

enum class WernerKind { symmetric, antisymmetric };

/// Extreme d (x) d Werner state (I +/- F)/(d^2 +/- d) on labels A,B.
DensityMatrix make_werner(Index d, WernerKind kind);

/// The example family rho = sum_j a_j |psi_j><psi_j| (x) sigma_j with
/// a_0=a_1=a1, a_2=a_3=a2 (a1+a2=1/2), sigma_j built from the two extreme
/// Werner states and a flag qubit. Layout (A,B,C,A',B',C') with A' the first
/// Werner factor.
DensityMatrix make_example_state(double a1, double a2, Index d);

/// General form sum_j a_j |psi_j><psi_j| (x) sigma_j; the sigma_j must have
/// pairwise orthogonal supports and the weights must be a distribution.
DensityMatrix make_general_example(std::span<const double> a,
                                   std::span<const DensityMatrix> sigmas);

/// Canonical purification |Psi> = sum_l sqrt(lambda_l) |psi_l> |l>_E with E
/// spanning the eigenvectors of nonnegligible weight (descending order).
/// Tracing out E recovers the input.
PureState purify(const DensityMatrix& rho);

}  // namespace qss
