#include "qss/layout.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>

namespace qss {

SystemLayout::SystemLayout(std::initializer_list<std::pair<std::string, Index>> subsystems)
    : subs_(subsystems) {
  check_unique();
}

SystemLayout::SystemLayout(std::vector<std::pair<std::string, Index>> subsystems)
    : subs_(std::move(subsystems)) {
  check_unique();
}

SystemLayout SystemLayout::qubits(int n, const std::string& prefix) {
  SystemLayout lay;
  for (int i = 1; i <= n; ++i) lay.append(prefix + std::to_string(i), 2);
  return lay;
}

void SystemLayout::append(std::string label, Index dim) {
  if (dim < 1) throw std::invalid_argument("SystemLayout: dimension must be positive");
  if (contains(label)) throw std::invalid_argument("SystemLayout: duplicate label '" + label + "'");
  subs_.emplace_back(std::move(label), dim);
}

Index SystemLayout::total_dim() const {
  Index d = 1;
  for (const auto& [label, dim] : subs_) d *= dim;
  return d;
}

bool SystemLayout::contains(const std::string& label) const {
  return std::any_of(subs_.begin(), subs_.end(),
                     [&](const auto& s) { return s.first == label; });
}

std::size_t SystemLayout::position(const std::string& label) const {
  for (std::size_t i = 0; i < subs_.size(); ++i)
    if (subs_[i].first == label) return i;
  throw std::invalid_argument("SystemLayout: unknown label '" + label + "'");
}

std::vector<std::size_t> SystemLayout::positions(std::span<const std::string> labels) const {
  std::vector<std::size_t> out;
  out.reserve(labels.size());
  for (const auto& l : labels) out.push_back(position(l));
  return out;
}

std::vector<std::string> SystemLayout::labels() const {
  std::vector<std::string> out;
  out.reserve(subs_.size());
  for (const auto& [label, dim] : subs_) out.push_back(label);
  return out;
}

std::vector<Index> SystemLayout::strides() const {
  std::vector<Index> s(subs_.size());
  Index acc = 1;
  for (std::size_t i = subs_.size(); i-- > 0;) {
    s[i] = acc;
    acc *= subs_[i].second;
  }
  return s;
}

SystemLayout SystemLayout::selected(std::span<const std::size_t> positions) const {
  SystemLayout lay;
  for (auto p : positions) {
    if (p >= subs_.size()) throw std::invalid_argument("SystemLayout: position out of range");
    lay.append(subs_[p].first, subs_[p].second);
  }
  return lay;
}

SystemLayout SystemLayout::erased(std::size_t pos) const {
  if (pos >= subs_.size()) throw std::invalid_argument("SystemLayout: position out of range");
  SystemLayout lay;
  for (std::size_t i = 0; i < subs_.size(); ++i)
    if (i != pos) lay.append(subs_[i].first, subs_[i].second);
  return lay;
}

void SystemLayout::check_unique() const {
  std::set<std::string> seen;
  for (const auto& [label, dim] : subs_) {
    if (dim < 1) throw std::invalid_argument("SystemLayout: dimension must be positive");
    if (!seen.insert(label).second)
      throw std::invalid_argument("SystemLayout: duplicate label '" + label + "'");
  }
}

ParityIndex::ParityIndex(int n, unsigned value) : n_(n), value_(value) {
  if (n < 1 || n > 31) throw std::invalid_argument("ParityIndex: register size out of range");
  if (value >= (1u << n)) throw std::invalid_argument("ParityIndex: value exceeds register size");
}

int ParityIndex::parity() const { return std::popcount(value_) & 1; }

std::string ParityIndex::str() const {
  std::string s(static_cast<std::size_t>(n_), '0');
  for (int i = 0; i < n_; ++i) s[static_cast<std::size_t>(i)] = bit(i) ? '1' : '0';
  return s;
}

ParityIndex ParityIndex::from_string(const std::string& bits) {
  unsigned v = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') throw std::invalid_argument("ParityIndex: bit string must be over {0,1}");
    v = (v << 1) | static_cast<unsigned>(c - '0');
  }
  return ParityIndex(static_cast<int>(bits.size()), v);
}

std::vector<ParityIndex> ParityIndex::all(int n) {
  std::vector<ParityIndex> out;
  out.reserve(1u << n);
  for (unsigned v = 0; v < (1u << n); ++v) out.emplace_back(n, v);
  return out;
}

std::vector<ParityIndex> ParityIndex::all_even(int n) {
  std::vector<ParityIndex> out;
  out.reserve(1u << (n - 1));
  for (unsigned v = 0; v < (1u << n); ++v)
    if ((std::popcount(v) & 1) == 0) out.emplace_back(n, v);
  return out;
}

}  // namespace qss
