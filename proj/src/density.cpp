#include "qss/density.hpp"

#include <cmath>
#include <stdexcept>

namespace qss {

DensityMatrix::DensityMatrix(Matrix m, SystemLayout layout, double tol)
    : mat_(std::move(m)), layout_(std::move(layout)) {
  if (mat_.rows() != mat_.cols())
    throw std::invalid_argument("DensityMatrix: matrix must be square");
  if (mat_.rows() != layout_.total_dim())
    throw std::invalid_argument("DensityMatrix: matrix dimension does not match layout");
  if (!mat_.allFinite())
    throw std::invalid_argument("DensityMatrix: entries must be finite");
  if ((mat_ - mat_.adjoint()).cwiseAbs().maxCoeff() > tol)
    throw std::invalid_argument("DensityMatrix: not Hermitian within tolerance");
  if (std::abs(mat_.trace().real() - 1.0) > tol || std::abs(mat_.trace().imag()) > tol)
    throw std::invalid_argument("DensityMatrix: trace is not 1 within tolerance");
  Eigen::SelfAdjointEigenSolver<Matrix> solver(((mat_ + mat_.adjoint()) / 2.0).eval(),
                                               Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success || solver.eigenvalues().minCoeff() < -tol)
    throw std::invalid_argument("DensityMatrix: not positive semidefinite within tolerance");
}

DensityMatrix DensityMatrix::permuted(std::span<const std::string> order) const {
  auto [m, lay] = permute_systems(mat_, layout_, order);
  return DensityMatrix(std::move(m), std::move(lay));
}

DensityMatrix DensityMatrix::traced(std::span<const std::string> keep) const {
  auto [m, lay] = partial_trace(mat_, layout_, keep);
  return DensityMatrix(std::move(m), std::move(lay));
}

PureState::PureState(Vector amplitudes, SystemLayout layout, double tol)
    : amp_(std::move(amplitudes)), layout_(std::move(layout)) {
  if (amp_.size() != layout_.total_dim())
    throw std::invalid_argument("PureState: vector dimension does not match layout");
  if (!amp_.allFinite()) throw std::invalid_argument("PureState: amplitudes must be finite");
  if (std::abs(amp_.norm() - 1.0) > tol)
    throw std::invalid_argument("PureState: vector is not normalized within tolerance");
}

DensityMatrix to_density(const PureState& psi) {
  return DensityMatrix(psi.amplitudes() * psi.amplitudes().adjoint(), psi.layout());
}

double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma) {
  return fidelity(rho.matrix(), sigma.matrix());
}

}  // namespace qss
