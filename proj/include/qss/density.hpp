#pragma once

#include <span>
#include <string>

#include "qss/layout.hpp"
#include "qss/linalg.hpp"
#include "qss/types.hpp"

namespace qss {

/// A density operator paired with the subsystem layout giving its tensor-index
/// semantics. Construction validates Hermiticity, positivity and unit trace.
class DensityMatrix {
 public:
  /// Throws std::invalid_argument unless `m` is Hermitian, has eigenvalues
  /// >= -tol and trace 1 within tol, and matches the layout dimension.
  DensityMatrix(Matrix m, SystemLayout layout, double tol = kStructuralTol);

  const Matrix& matrix() const { return mat_; }
  const SystemLayout& layout() const { return layout_; }
  Index dim() const { return mat_.rows(); }

  DensityMatrix permuted(std::span<const std::string> order) const;
  DensityMatrix traced(std::span<const std::string> keep) const;

 private:
  Matrix mat_;
  SystemLayout layout_;
};

/// A state vector paired with a layout; unit 2-norm within 1e-10.
class PureState {
 public:
  PureState(Vector amplitudes, SystemLayout layout, double tol = kStructuralTol);

  const Vector& amplitudes() const { return amp_; }
  const SystemLayout& layout() const { return layout_; }
  Index dim() const { return amp_.size(); }

 private:
  Vector amp_;
  SystemLayout layout_;
};

/// |psi><psi| as a DensityMatrix on the same layout.
DensityMatrix to_density(const PureState& psi);

double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma);

}  // namespace qss
