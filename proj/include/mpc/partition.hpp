#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "mpc/semantics.hpp"

namespace mpc {

/// Disjoint blocks covering the states 0..n-1. Blocks are ordered by their
/// smallest member and list members in increasing order.
class Partition {
 public:
  Partition() = default;
  /// Builds from an arbitrary labelling state -> label.
  explicit Partition(const std::vector<std::size_t>& labels);

  std::size_t num_blocks() const { return blocks_.size(); }
  std::size_t num_states() const { return block_of_.size(); }
  const std::vector<std::vector<StateId>>& blocks() const { return blocks_; }
  const std::vector<StateId>& block(std::size_t b) const { return blocks_.at(b); }
  std::size_t block_of(StateId s) const { return block_of_.at(s); }
  bool related(StateId a, StateId b) const { return block_of(a) == block_of(b); }
  StateSet block_set(std::size_t b) const;

  bool operator==(const Partition&) const = default;

 private:
  std::vector<std::vector<StateId>> blocks_;
  std::vector<std::size_t> block_of_;
};

/// Signature of a state relative to the current partition.
using SignatureFn = std::function<std::string(StateId, const Partition&)>;

/// Splits blocks of `initial` by signature until the partition is stable.
Partition refine(const Partition& initial, const SignatureFn& signature);

}  // namespace mpc
