#pragma once

#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qss/layout.hpp"
#include "qss/types.hpp"

namespace qss {

namespace detail {

/// Per-position contribution of a composite index to the flat index, restricted
/// to the subsystem positions in `subset`: part[g] = sum_{p in subset} x_p(g) * stride_p.
std::vector<Index> index_part(const SystemLayout& layout, std::span<const std::size_t> subset);

/// Flat offsets of every composite index of `sub` embedded into the full index
/// space at the given positions.
std::vector<Index> embedding_offsets(const SystemLayout& layout,
                                     std::span<const std::size_t> positions);

std::vector<std::size_t> sorted_unique_positions(const SystemLayout& layout,
                                                 std::span<const std::string> labels);

}  // namespace detail

/// Kronecker product with `a` as the slow (left) factor.
template <class DA, class DB>
Eigen::Matrix<typename DA::Scalar, Eigen::Dynamic, Eigen::Dynamic> tensor(
    const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b) {
  static_assert(std::is_same_v<typename DA::Scalar, typename DB::Scalar>,
                "tensor: operands must have the same scalar type");
  using Out = Eigen::Matrix<typename DA::Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  const auto& ae = a.derived();
  Out be = b.derived();
  Out out(ae.rows() * be.rows(), ae.cols() * be.cols());
  for (Index i = 0; i < ae.rows(); ++i)
    for (Index j = 0; j < ae.cols(); ++j)
      out.block(i * be.rows(), j * be.cols(), be.rows(), be.cols()) = ae(i, j) * be;
  return out;
}

template <class D, class... Rest>
auto tensor(const Eigen::MatrixBase<D>& first, const Rest&... rest)
  requires(sizeof...(Rest) >= 2)
{
  return tensor(first, tensor(rest...));
}

/// Conjugation by the permutation of tensor indices putting subsystems in the
/// requested label order. Returns the permuted matrix and the new layout.
template <class D>
std::pair<Eigen::Matrix<typename D::Scalar, Eigen::Dynamic, Eigen::Dynamic>, SystemLayout>
permute_systems(const Eigen::MatrixBase<D>& m, const SystemLayout& layout,
                std::span<const std::string> order) {
  const Index dim = layout.total_dim();
  if (m.rows() != dim || m.cols() != dim)
    throw std::invalid_argument("permute_systems: matrix dimension does not match layout");
  if (order.size() != layout.size())
    throw std::invalid_argument("permute_systems: order must list every label exactly once");
  std::vector<std::size_t> src = layout.positions(order);
  std::vector<bool> seen(layout.size(), false);
  for (auto p : src) {
    if (seen[p]) throw std::invalid_argument("permute_systems: order repeats a label");
    seen[p] = true;
  }

  SystemLayout new_layout = layout.selected(src);
  const auto old_strides = layout.strides();
  const auto new_strides = new_layout.strides();

  // pi[g_old] = g_new with coordinates rearranged per `order`.
  std::vector<Index> pi(static_cast<std::size_t>(dim));
  for (Index g = 0; g < dim; ++g) {
    Index out = 0;
    for (std::size_t q = 0; q < src.size(); ++q) {
      const auto p = src[q];
      out += ((g / old_strides[p]) % layout.dim(p)) * new_strides[q];
    }
    pi[static_cast<std::size_t>(g)] = out;
  }

  Eigen::Matrix<typename D::Scalar, Eigen::Dynamic, Eigen::Dynamic> out(dim, dim);
  const auto& me = m.derived();
  for (Index r = 0; r < dim; ++r)
    for (Index c = 0; c < dim; ++c)
      out(pi[static_cast<std::size_t>(r)], pi[static_cast<std::size_t>(c)]) = me(r, c);
  return {std::move(out), std::move(new_layout)};
}

/// Trace over the complement of `keep`. Kept subsystems retain their original
/// relative order. Preserves the trace.
template <class D>
std::pair<Eigen::Matrix<typename D::Scalar, Eigen::Dynamic, Eigen::Dynamic>, SystemLayout>
partial_trace(const Eigen::MatrixBase<D>& m, const SystemLayout& layout,
              std::span<const std::string> keep) {
  const Index dim = layout.total_dim();
  if (m.rows() != dim || m.cols() != dim)
    throw std::invalid_argument("partial_trace: matrix dimension does not match layout");
  if (keep.empty()) throw std::invalid_argument("partial_trace: keep set must be nonempty");
  const auto kept = detail::sorted_unique_positions(layout, keep);

  std::vector<std::size_t> traced;
  for (std::size_t p = 0; p < layout.size(); ++p)
    if (!std::binary_search(kept.begin(), kept.end(), p)) traced.push_back(p);

  SystemLayout new_layout = layout.selected(kept);
  const auto kept_offsets = detail::embedding_offsets(layout, kept);
  const auto traced_offsets = detail::embedding_offsets(layout, traced);

  const Index dk = new_layout.total_dim();
  Eigen::Matrix<typename D::Scalar, Eigen::Dynamic, Eigen::Dynamic> out =
      Eigen::Matrix<typename D::Scalar, Eigen::Dynamic, Eigen::Dynamic>::Zero(dk, dk);
  const auto& me = m.derived();
  for (Index u = 0; u < dk; ++u)
    for (Index v = 0; v < dk; ++v) {
      typename D::Scalar acc{};
      for (const Index t : traced_offsets)
        acc += me(kept_offsets[static_cast<std::size_t>(u)] + t,
                  kept_offsets[static_cast<std::size_t>(v)] + t);
      out(u, v) = acc;
    }
  return {std::move(out), std::move(new_layout)};
}

/// Transpose on the tensor indices of `subset` only; involutive, preserves
/// trace and Hermiticity. The layout is unchanged.
template <class D>
Eigen::Matrix<typename D::Scalar, Eigen::Dynamic, Eigen::Dynamic> partial_transpose(
    const Eigen::MatrixBase<D>& m, const SystemLayout& layout,
    std::span<const std::string> subset) {
  const Index dim = layout.total_dim();
  if (m.rows() != dim || m.cols() != dim)
    throw std::invalid_argument("partial_transpose: matrix dimension does not match layout");
  const auto positions = detail::sorted_unique_positions(layout, subset);
  const auto part = detail::index_part(layout, positions);

  Eigen::Matrix<typename D::Scalar, Eigen::Dynamic, Eigen::Dynamic> out(dim, dim);
  const auto& me = m.derived();
  for (Index r = 0; r < dim; ++r) {
    const Index r_rest = r - part[static_cast<std::size_t>(r)];
    for (Index c = 0; c < dim; ++c) {
      const Index c_rest = c - part[static_cast<std::size_t>(c)];
      out(r_rest + part[static_cast<std::size_t>(c)],
          c_rest + part[static_cast<std::size_t>(r)]) = me(r, c);
    }
  }
  return out;
}

/// Spectral decomposition of a Hermitian matrix.
struct HermitianEigen {
  RealVector eigenvalues;  // ascending
  Matrix eigenvectors;     // orthonormal columns, matching order
};

/// Hermitian eigendecomposition; throws if `m` deviates from Hermiticity by
/// more than 1e-10 in max-abs norm.
HermitianEigen eigh(const Matrix& m);

/// Eigenvalues only (ascending), same Hermiticity contract as eigh.
RealVector eigh_values(const Matrix& m);

/// PSD square root. Eigenvalues in [-1e-10, 0) are clamped to 0; anything
/// below -1e-10 is an error.
Matrix sqrt_psd(const Matrix& m);

/// Sum of singular values.
double trace_norm(const Matrix& m);

/// Uhlmann fidelity tr|sqrt(rho) sqrt(sigma)| of two PSD matrices.
double fidelity(const Matrix& rho, const Matrix& sigma);

/// Standard complex Gaussian matrix (Box-Muller over a pinned 64-bit stream,
/// so a seed identifies the same matrix on every platform).
Matrix complex_ginibre(Index dim, std::mt19937_64& rng);

/// Haar-distributed unitary via QR of a complex Gaussian with the R diagonal
/// phase-normalized.
Matrix haar_unitary(Index dim, std::mt19937_64& rng);
Matrix haar_unitary(Index dim, std::uint64_t seed);

/// Random full-rank density matrix G G^dag / tr(G G^dag).
Matrix random_density(Index dim, std::mt19937_64& rng);

}  // namespace qss
