#pragma once

#include <Eigen/Dense>
#include <complex>

namespace qss {

using Index = Eigen::Index;
using cplx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

// Tolerance hierarchy: structural checks (Hermiticity, unitarity) at 1e-10,
// derived scalars (norms, fidelities) at 1e-9, end-to-end pipelines at 1e-8.
inline constexpr double kStructuralTol = 1e-10;
inline constexpr double kScalarTol = 1e-9;
inline constexpr double kPipelineTol = 1e-8;
inline constexpr double kRankCutoff = 1e-12;
inline constexpr double kDefaultVerifyTol = 1e-7;

}  // namespace qss
