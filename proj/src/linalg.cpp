#include "qss/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace qss {

namespace detail {

std::vector<Index> index_part(const SystemLayout& layout, std::span<const std::size_t> subset) {
  const auto strides = layout.strides();
  const Index dim = layout.total_dim();
  std::vector<Index> part(static_cast<std::size_t>(dim), 0);
  for (Index g = 0; g < dim; ++g) {
    Index acc = 0;
    for (const auto p : subset) acc += ((g / strides[p]) % layout.dim(p)) * strides[p];
    part[static_cast<std::size_t>(g)] = acc;
  }
  return part;
}

std::vector<Index> embedding_offsets(const SystemLayout& layout,
                                     std::span<const std::size_t> positions) {
  const auto strides = layout.strides();
  std::vector<Index> offsets{0};
  for (const auto p : positions) {
    std::vector<Index> next;
    next.reserve(offsets.size() * static_cast<std::size_t>(layout.dim(p)));
    for (const Index base : offsets)
      for (Index x = 0; x < layout.dim(p); ++x) next.push_back(base + x * strides[p]);
    offsets = std::move(next);
  }
  return offsets;
}

std::vector<std::size_t> sorted_unique_positions(const SystemLayout& layout,
                                                 std::span<const std::string> labels) {
  auto positions = layout.positions(labels);
  std::sort(positions.begin(), positions.end());
  if (std::adjacent_find(positions.begin(), positions.end()) != positions.end())
    throw std::invalid_argument("label set contains duplicates");
  return positions;
}

}  // namespace detail

namespace {

void require_square(const Matrix& m, const char* who) {
  if (m.rows() != m.cols())
    throw std::invalid_argument(std::string(who) + ": matrix must be square");
}

void require_hermitian(const Matrix& m, const char* who) {
  require_square(m, who);
  if ((m - m.adjoint()).cwiseAbs().maxCoeff() > kStructuralTol)
    throw std::invalid_argument(std::string(who) + ": matrix is not Hermitian within 1e-10");
}

}  // namespace

HermitianEigen eigh(const Matrix& m) {
  require_hermitian(m, "eigh");
  Eigen::SelfAdjointEigenSolver<Matrix> solver(((m + m.adjoint()) / 2.0).eval());
  if (solver.info() != Eigen::Success) throw std::runtime_error("eigh: eigensolver failed");
  return {solver.eigenvalues(), solver.eigenvectors()};
}

RealVector eigh_values(const Matrix& m) {
  require_hermitian(m, "eigh");
  Eigen::SelfAdjointEigenSolver<Matrix> solver(((m + m.adjoint()) / 2.0).eval(),
                                               Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw std::runtime_error("eigh: eigensolver failed");
  return solver.eigenvalues();
}

Matrix sqrt_psd(const Matrix& m) {
  auto [values, vectors] = eigh(m);
  if (values.size() > 0 && values.minCoeff() < -kStructuralTol)
    throw std::invalid_argument("sqrt_psd: eigenvalue below -1e-10, input is not PSD");
  const RealVector roots = values.cwiseMax(0.0).cwiseSqrt();
  return vectors * roots.asDiagonal() * vectors.adjoint();
}

double trace_norm(const Matrix& m) {
  require_square(m, "trace_norm");
  if (m.rows() == 0) return 0.0;
  return Eigen::BDCSVD<Matrix>(m).singularValues().sum();
}

double fidelity(const Matrix& rho, const Matrix& sigma) {
  if (rho.rows() != sigma.rows() || rho.cols() != sigma.cols())
    throw std::invalid_argument("fidelity: dimension mismatch");
  return trace_norm(sqrt_psd(rho) * sqrt_psd(sigma));
}

namespace {

// Standard complex normal sample; hand-rolled Box-Muller keeps the stream
// identical across standard libraries.
cplx complex_normal(std::mt19937_64& rng) {
  const double u1 = (static_cast<double>(rng()) + 1.0) / 18446744073709551616.0;  // (0,1]
  const double u2 = static_cast<double>(rng()) / 18446744073709551616.0;          // [0,1)
  const double r = std::sqrt(-std::log(u1));
  return {r * std::cos(2.0 * std::numbers::pi * u2), r * std::sin(2.0 * std::numbers::pi * u2)};
}

}  // namespace

Matrix complex_ginibre(Index dim, std::mt19937_64& rng) {
  if (dim < 1) throw std::invalid_argument("complex_ginibre: dimension must be positive");
  Matrix g(dim, dim);
  for (Index i = 0; i < dim; ++i)
    for (Index j = 0; j < dim; ++j) g(i, j) = complex_normal(rng);
  return g;
}

Matrix haar_unitary(Index dim, std::mt19937_64& rng) {
  const Matrix g = complex_ginibre(dim, rng);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Index j = 0; j < dim; ++j) {
    const cplx d = r(j, j);
    q.col(j) *= d / std::abs(d);
  }
  return q;
}

Matrix haar_unitary(Index dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return haar_unitary(dim, rng);
}

Matrix random_density(Index dim, std::mt19937_64& rng) {
  const Matrix g = complex_ginibre(dim, rng);
  Matrix m = g * g.adjoint();
  m /= m.trace().real();
  return (m + m.adjoint()) / 2.0;
}

}  // namespace qss
