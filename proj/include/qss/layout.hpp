#pragma once

#include <compare>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qss/types.hpp"

namespace qss {

/// Ordered list of labeled subsystem dimensions. The order is authoritative:
/// subsystem 0 is the slowest (most significant) tensor index, the last
/// subsystem the fastest, matching row-major composite indexing.
class SystemLayout {
 public:
  SystemLayout() = default;
  SystemLayout(std::initializer_list<std::pair<std::string, Index>> subsystems);
  explicit SystemLayout(std::vector<std::pair<std::string, Index>> subsystems);

  /// n qubit subsystems named `prefix`1 .. `prefix`n.
  static SystemLayout qubits(int n, const std::string& prefix = "A");

  void append(std::string label, Index dim);

  std::size_t size() const { return subs_.size(); }
  Index total_dim() const;
  const std::string& label(std::size_t pos) const { return subs_[pos].first; }
  Index dim(std::size_t pos) const { return subs_[pos].second; }

  bool contains(const std::string& label) const;
  /// Position of `label`; throws std::invalid_argument if unknown.
  std::size_t position(const std::string& label) const;
  std::vector<std::size_t> positions(std::span<const std::string> labels) const;

  std::vector<std::string> labels() const;
  Index dim_of(const std::string& label) const { return subs_[position(label)].second; }

  /// stride(p) = product of dims of subsystems after p; a composite index g
  /// decomposes as x_p = (g / stride(p)) % dim(p).
  std::vector<Index> strides() const;

  /// Layout restricted to the given positions, preserving the given order.
  SystemLayout selected(std::span<const std::size_t> positions) const;
  /// Layout with the subsystem at `pos` removed.
  SystemLayout erased(std::size_t pos) const;

  bool operator==(const SystemLayout&) const = default;

 private:
  void check_unique() const;
  std::vector<std::pair<std::string, Index>> subs_;
};

/// Fixed-length bit string indexing the dealer/player qubit register.
/// Bit 0 is the leftmost (slowest) register qubit, so the integer value read
/// in binary MSB-first equals the label string, e.g. "011" <-> value 3, n=3.
class ParityIndex {
 public:
  ParityIndex(int n, unsigned value);

  int size() const { return n_; }
  unsigned value() const { return value_; }
  /// Bit at position i counted from the left (register order).
  int bit(int i) const { return static_cast<int>((value_ >> (n_ - 1 - i)) & 1u); }
  int parity() const;
  bool even() const { return parity() == 0; }
  std::string str() const;

  static ParityIndex from_string(const std::string& bits);
  static std::vector<ParityIndex> all(int n);
  static std::vector<ParityIndex> all_even(int n);

  friend auto operator<=>(const ParityIndex&, const ParityIndex&) = default;

 private:
  int n_;
  unsigned value_;
};

}  // namespace qss
