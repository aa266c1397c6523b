#include "qss/distill.hpp"

#include <cmath>
#include <stdexcept>

#include "qss/verifier.hpp"

namespace qss {

namespace {

std::size_t qubit_position(const DensityMatrix& rho, const std::string& label, const char* who) {
  const auto pos = rho.layout().position(label);
  if (rho.layout().dim(pos) != 2)
    throw std::invalid_argument(std::string(who) + ": '" + label + "' is not a qubit subsystem");
  return pos;
}

}  // namespace

DensityMatrix apply_cnot(const DensityMatrix& rho, const std::string& control,
                         const std::string& target) {
  if (control == target)
    throw std::invalid_argument("apply_cnot: control and target must differ");
  const auto cpos = qubit_position(rho, control, "apply_cnot");
  const auto tpos = qubit_position(rho, target, "apply_cnot");

  const auto strides = rho.layout().strides();
  const Index dim = rho.dim();
  // pi flips the target coordinate wherever the control coordinate is set.
  std::vector<Index> pi(static_cast<std::size_t>(dim));
  for (Index g = 0; g < dim; ++g) {
    if ((g / strides[cpos]) % 2 == 0) {
      pi[static_cast<std::size_t>(g)] = g;
    } else {
      const Index t = (g / strides[tpos]) % 2;
      pi[static_cast<std::size_t>(g)] = t == 0 ? g + strides[tpos] : g - strides[tpos];
    }
  }
  Matrix out(dim, dim);
  for (Index r = 0; r < dim; ++r)
    for (Index c = 0; c < dim; ++c)
      out(pi[static_cast<std::size_t>(r)], pi[static_cast<std::size_t>(c)]) = rho.matrix()(r, c);
  return DensityMatrix(std::move(out), rho.layout());
}

std::vector<MeasurementOutcome> measure_computational(const DensityMatrix& rho,
                                                      const std::string& system) {
  const auto pos = qubit_position(rho, system, "measure_computational");
  const auto strides = rho.layout().strides();
  const Index dim = rho.dim();
  const SystemLayout post_layout = rho.layout().erased(pos);

  std::vector<MeasurementOutcome> outcomes;
  for (Index r = 0; r < 2; ++r) {
    std::vector<Index> sel;
    sel.reserve(static_cast<std::size_t>(dim / 2));
    for (Index g = 0; g < dim; ++g)
      if ((g / strides[pos]) % 2 == r) sel.push_back(g);

    Matrix sub(dim / 2, dim / 2);
    for (Index i = 0; i < dim / 2; ++i)
      for (Index j = 0; j < dim / 2; ++j)
        sub(i, j) = rho.matrix()(sel[static_cast<std::size_t>(i)],
                                 sel[static_cast<std::size_t>(j)]);
    const double p = sub.trace().real();
    if (p <= 1e-12) continue;
    outcomes.push_back({static_cast<int>(r), p,
                        DensityMatrix((sub / p).eval(), post_layout)});
  }
  return outcomes;
}

std::vector<MeasurementOutcome> reduce_to_private(const DensityMatrix& rho,
                                                  std::span<const std::string> register_labels) {
  if (register_labels.size() != 3)
    throw std::invalid_argument("reduce_to_private: need a 3-party register (dealer, player, player)");
  for (const auto& l : register_labels) qubit_position(rho, l, "reduce_to_private");
  const DensityMatrix after = apply_cnot(rho, register_labels[1], register_labels[2]);
  return measure_computational(after, register_labels[1]);
}

std::vector<MeasurementOutcome> reduce_n_party(const DensityMatrix& rho,
                                               std::span<const std::string> register_labels,
                                               const std::string& control,
                                               const std::string& target) {
  if (register_labels.size() < 4)
    throw std::invalid_argument("reduce_n_party: need n >= 4 parties (use reduce_to_private for n = 3)");
  bool has_control = false, has_target = false;
  for (const auto& l : register_labels) {
    qubit_position(rho, l, "reduce_n_party");
    has_control = has_control || l == control;
    has_target = has_target || l == target;
  }
  if (!has_control || !has_target || control == target)
    throw std::invalid_argument("reduce_n_party: control and target must be distinct register qubits");
  const DensityMatrix after = apply_cnot(rho, control, target);
  return measure_computational(after, control);
}

bool check_private_state_form(const DensityMatrix& rho, const std::string& key1,
                              const std::string& key2, double norm_tol, double support_tol) {
  const std::vector<std::string> reg{key1, key2};
  const auto table = extract_blocks(rho, reg);
  for (unsigned i = 0; i < 4; ++i)
    for (unsigned j = 0; j < 4; ++j) {
      const bool key_block = (i == 0 || i == 3) && (j == 0 || j == 3);
      if (key_block) {
        if (std::abs(trace_norm(table.block(i, j)) - 0.5) > norm_tol) return false;
      } else if (table.block(i, j).cwiseAbs().maxCoeff() > support_tol) {
        return false;
      }
    }
  return true;
}

}  // namespace qss
