#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qss/density.hpp"
#include "qss/states.hpp"

namespace qss {

/// All 2^n x 2^n operator blocks <I| rho |J> of the dealer/player register,
/// each acting on the remaining (inner) systems.
class BlockTable {
 public:
  BlockTable(int n, Index block_dim, std::vector<Matrix> blocks);

  int register_size() const { return n_; }
  Index block_dim() const { return block_dim_; }
  const Matrix& block(const ParityIndex& row, const ParityIndex& col) const;
  const Matrix& block(unsigned row, unsigned col) const;

 private:
  int n_;
  Index block_dim_;
  std::vector<Matrix> blocks_;  // (row, col) at row * 2^n + col
};

/// Ordered list of 2^{n-1}-1 even-parity index pairs forming a path that
/// visits every even-parity index exactly once.
class NormChain {
 public:
  NormChain(int n, std::vector<std::pair<ParityIndex, ParityIndex>> pairs);

  int register_size() const { return n_; }
  const std::vector<std::pair<ParityIndex, ParityIndex>>& pairs() const { return pairs_; }

 private:
  int n_;
  std::vector<std::pair<ParityIndex, ParityIndex>> pairs_;
};

/// The paper's chain for n = 3; consecutive pairs of the lexicographically
/// ordered even-parity strings in general.
NormChain default_chain(int n);

struct BlockNormEntry {
  ParityIndex row, col;
  double norm;
  double violation;  // |norm - 1/2^{n-1}|
};

struct EveFidelityEntry {
  ParityIndex row, col;
  double fidelity;
};

struct VerificationReport {
  bool accepted = false;
  double tolerance = kDefaultVerifyTol;
  int register_size = 0;
  /// Diagonal block traces p_I for every register index.
  std::map<ParityIndex, double> statistics;
  /// Max abs entry over blocks whose row or column index has odd parity.
  double support_violation = 0.0;
  /// Chain block trace norms (block criterion) with their violations.
  std::vector<BlockNormEntry> block_norm_violations;
  /// Pairwise fidelities of Eve's conditional states (semantic check).
  std::vector<EveFidelityEntry> eve_fidelities;
  bool statistics_ok = false;
  bool support_ok = false;
  /// Set by the mode that ran: chain-norm verdict / Eve verdict.
  std::optional<bool> block_norms_ok;
  std::optional<bool> eve_ok;
  /// Filled by verify_secret_sharing with the fast criterion's verdict.
  std::optional<bool> block_criterion_accepted;
};

/// Permutes the n register qubits to the front (in the given order) and cuts
/// rho into its 2^n x 2^n operator blocks.
BlockTable extract_blocks(const DensityMatrix& rho, std::span<const std::string> register_labels);

/// Diagonal block traces p_I over the register, for every index I.
std::map<ParityIndex, double> check_statistics(const DensityMatrix& rho,
                                               std::span<const std::string> register_labels);

/// Pairwise fidelities F(rho_I^E, rho_J^E) of the eavesdropper's conditional
/// states over the canonical purification, for all even-parity pairs I < J.
/// Throws if some even-parity outcome has vanishing probability (which a
/// statistics check would already have rejected).
std::vector<EveFidelityEntry> check_eve_blindness(const DensityMatrix& rho,
                                                  std::span<const std::string> register_labels);

/// Fast criterion: even-parity support plus chain blocks of trace norm
/// 1/2^{n-1}.
VerificationReport check_block_criterion(const DensityMatrix& rho,
                                         std::span<const std::string> register_labels,
                                         const NormChain& chain,
                                         double tol = kDefaultVerifyTol);
VerificationReport check_block_criterion(const DensityMatrix& rho,
                                         std::span<const std::string> register_labels,
                                         double tol = kDefaultVerifyTol);

/// Semantic check: unbiased perfectly correlated statistics, even-parity
/// support, and eavesdropper blindness; also records the fast criterion's
/// verdict for cross-checking.
VerificationReport verify_secret_sharing(const DensityMatrix& rho,
                                         std::span<const std::string> register_labels,
                                         double tol = kDefaultVerifyTol);

}  // namespace qss
