#include "qss/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace qss {

namespace {

void require_qubit_register(const DensityMatrix& rho, std::span<const std::string> labels) {
  if (labels.size() < 2)
    throw std::invalid_argument("register must contain at least two qubit labels");
  std::set<std::string> seen;
  for (const auto& l : labels) {
    if (rho.layout().dim_of(l) != 2)
      throw std::invalid_argument("register label '" + l + "' is not a qubit subsystem");
    if (!seen.insert(l).second)
      throw std::invalid_argument("register label '" + l + "' repeated");
  }
}

double register_target(int n) { return 1.0 / static_cast<double>(Index(1) << (n - 1)); }

}  // namespace

BlockTable::BlockTable(int n, Index block_dim, std::vector<Matrix> blocks)
    : n_(n), block_dim_(block_dim), blocks_(std::move(blocks)) {
  const std::size_t reg = std::size_t(1) << n;
  if (blocks_.size() != reg * reg)
    throw std::invalid_argument("BlockTable: block count must cover every register index pair");
  for (const auto& b : blocks_)
    if (b.rows() != block_dim_ || b.cols() != block_dim_)
      throw std::invalid_argument("BlockTable: inconsistent block dimensions");
}

const Matrix& BlockTable::block(unsigned row, unsigned col) const {
  const unsigned reg = 1u << n_;
  if (row >= reg || col >= reg) throw std::invalid_argument("BlockTable: index out of range");
  return blocks_[std::size_t(row) * reg + col];
}

const Matrix& BlockTable::block(const ParityIndex& row, const ParityIndex& col) const {
  if (row.size() != n_ || col.size() != n_)
    throw std::invalid_argument("BlockTable: index size mismatch");
  return block(row.value(), col.value());
}

NormChain::NormChain(int n, std::vector<std::pair<ParityIndex, ParityIndex>> pairs)
    : n_(n), pairs_(std::move(pairs)) {
  const std::size_t expected = (std::size_t(1) << (n - 1)) - 1;
  if (n < 2 || pairs_.size() != expected)
    throw std::invalid_argument("NormChain: need 2^{n-1}-1 pairs");
  std::set<unsigned> visited;
  for (std::size_t t = 0; t < pairs_.size(); ++t) {
    const auto& [a, b] = pairs_[t];
    if (a.size() != n || b.size() != n || !a.even() || !b.even())
      throw std::invalid_argument("NormChain: pairs must be even-parity indices of the register");
    if (t == 0)
      visited.insert(a.value());
    else if (pairs_[t - 1].second != a)
      throw std::invalid_argument("NormChain: pairs must form a connected chain");
    if (!visited.insert(b.value()).second)
      throw std::invalid_argument("NormChain: chain revisits an index");
  }
}

NormChain default_chain(int n) {
  const auto even = ParityIndex::all_even(n);
  std::vector<std::pair<ParityIndex, ParityIndex>> pairs;
  pairs.reserve(even.size() - 1);
  for (std::size_t i = 0; i + 1 < even.size(); ++i) pairs.emplace_back(even[i], even[i + 1]);
  return NormChain(n, std::move(pairs));
}

BlockTable extract_blocks(const DensityMatrix& rho, std::span<const std::string> register_labels) {
  require_qubit_register(rho, register_labels);
  const int n = static_cast<int>(register_labels.size());

  std::vector<std::string> order(register_labels.begin(), register_labels.end());
  for (const auto& l : rho.layout().labels())
    if (std::find(order.begin(), order.end(), l) == order.end()) order.push_back(l);
  auto [front, lay] = permute_systems(rho.matrix(), rho.layout(), order);

  const Index reg = Index(1) << n;
  const Index bd = front.rows() / reg;
  std::vector<Matrix> blocks;
  blocks.reserve(std::size_t(reg) * std::size_t(reg));
  for (Index i = 0; i < reg; ++i)
    for (Index j = 0; j < reg; ++j) blocks.push_back(front.block(i * bd, j * bd, bd, bd));
  return BlockTable(n, bd, std::move(blocks));
}

std::map<ParityIndex, double> check_statistics(const DensityMatrix& rho,
                                               std::span<const std::string> register_labels) {
  const auto table = extract_blocks(rho, register_labels);
  std::map<ParityIndex, double> stats;
  for (const auto& idx : ParityIndex::all(table.register_size()))
    stats.emplace(idx, table.block(idx, idx).trace().real());
  return stats;
}

std::vector<EveFidelityEntry> check_eve_blindness(const DensityMatrix& rho,
                                                  std::span<const std::string> register_labels) {
  require_qubit_register(rho, register_labels);
  const int n = static_cast<int>(register_labels.size());
  const PureState psi = purify(rho);
  const SystemLayout& lay = psi.layout();

  // Coordinates of the purified vector: register qubits, all other original
  // systems, and the purifying system E appended last by purify().
  const auto strides = lay.strides();
  const auto reg_pos = lay.positions(register_labels);
  const std::size_t e_pos = lay.size() - 1;
  std::vector<std::size_t> other_pos;
  for (std::size_t p = 0; p + 1 < lay.size(); ++p)
    if (std::find(reg_pos.begin(), reg_pos.end(), p) == reg_pos.end()) other_pos.push_back(p);

  const auto reg_offsets = detail::embedding_offsets(lay, reg_pos);
  const auto other_offsets = detail::embedding_offsets(lay, other_pos);
  const Index edim = lay.dim(e_pos);
  const Index estride = strides[e_pos];

  const auto even = ParityIndex::all_even(n);
  std::vector<Matrix> eve_states;
  for (const auto& I : even) {
    Matrix m(static_cast<Index>(other_offsets.size()), edim);  // (traced systems) x E
    const Index base = reg_offsets[I.value()];
    for (std::size_t o = 0; o < other_offsets.size(); ++o)
      for (Index e = 0; e < edim; ++e)
        m(static_cast<Index>(o), e) = psi.amplitudes()(base + other_offsets[o] + e * estride);
    const double p = m.squaredNorm();
    if (p <= kRankCutoff)
      throw std::runtime_error("check_eve_blindness: outcome " + I.str() +
                               " has vanishing probability; statistics check failed");
    Matrix cond = (m.transpose() * m.conjugate()) / p;
    eve_states.push_back(((cond + cond.adjoint()) / 2.0).eval());
  }

  std::vector<EveFidelityEntry> out;
  for (std::size_t i = 0; i < even.size(); ++i)
    for (std::size_t j = i + 1; j < even.size(); ++j)
      out.push_back({even[i], even[j], fidelity(eve_states[i], eve_states[j])});
  return out;
}

namespace {

// Shared support/statistics scan over an extracted block table.
void fill_support_and_statistics(const BlockTable& table, VerificationReport& report) {
  const int n = table.register_size();
  const double target = register_target(n);
  const unsigned reg = 1u << n;
  double support = 0.0;
  double stats_violation = 0.0;
  for (unsigned i = 0; i < reg; ++i) {
    for (unsigned j = 0; j < reg; ++j) {
      const ParityIndex I(n, i), J(n, j);
      if (!I.even() || !J.even()) {
        support = std::max(support, table.block(i, j).cwiseAbs().maxCoeff());
      }
      if (i == j) {
        const double p = table.block(i, j).trace().real();
        report.statistics.emplace(I, p);
        stats_violation = std::max(stats_violation, I.even() ? std::abs(p - target) : p);
      }
    }
  }
  report.support_violation = support;
  report.support_ok = support <= report.tolerance;
  report.statistics_ok = stats_violation <= report.tolerance;
}

}  // namespace

VerificationReport check_block_criterion(const DensityMatrix& rho,
                                         std::span<const std::string> register_labels,
                                         const NormChain& chain, double tol) {
  const auto table = extract_blocks(rho, register_labels);
  const int n = table.register_size();
  if (chain.register_size() != n)
    throw std::invalid_argument("check_block_criterion: chain register size mismatch");

  VerificationReport report;
  report.tolerance = tol;
  report.register_size = n;
  fill_support_and_statistics(table, report);

  const double target = register_target(n);
  bool norms_ok = true;
  for (const auto& [I, J] : chain.pairs()) {
    const double norm = trace_norm(table.block(I, J));
    const double violation = std::abs(norm - target);
    report.block_norm_violations.push_back({I, J, norm, violation});
    norms_ok = norms_ok && violation <= tol;
  }
  report.block_norms_ok = norms_ok;
  report.accepted = report.support_ok && norms_ok;
  return report;
}

VerificationReport check_block_criterion(const DensityMatrix& rho,
                                         std::span<const std::string> register_labels,
                                         double tol) {
  return check_block_criterion(rho, register_labels,
                               default_chain(static_cast<int>(register_labels.size())), tol);
}

VerificationReport verify_secret_sharing(const DensityMatrix& rho,
                                         std::span<const std::string> register_labels,
                                         double tol) {
  const auto table = extract_blocks(rho, register_labels);
  VerificationReport report;
  report.tolerance = tol;
  report.register_size = table.register_size();
  fill_support_and_statistics(table, report);

  if (report.statistics_ok && report.support_ok) {
    report.eve_fidelities = check_eve_blindness(rho, register_labels);
    bool eve_ok = true;
    for (const auto& entry : report.eve_fidelities)
      eve_ok = eve_ok && entry.fidelity >= 1.0 - tol;
    report.eve_ok = eve_ok;
  }
  report.accepted =
      report.statistics_ok && report.support_ok && report.eve_ok.value_or(false);
  report.block_criterion_accepted =
      check_block_criterion(rho, register_labels, tol).accepted;
  return report;
}

}  // namespace qss
