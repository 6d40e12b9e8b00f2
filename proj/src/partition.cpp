#include "mpc/partition.hpp"

#include <map>
#include <utility>

namespace mpc {

Partition::Partition(const std::vector<std::size_t>& labels) {
  block_of_.resize(labels.size());
  std::map<std::size_t, std::size_t> renumber;  // label -> block, in first-member order
  for (StateId s = 0; s < labels.size(); ++s) {
    auto [it, fresh] = renumber.emplace(labels[s], blocks_.size());
    if (fresh) blocks_.emplace_back();
    blocks_[it->second].push_back(s);
    block_of_[s] = it->second;
  }
}

StateSet Partition::block_set(std::size_t b) const {
  const auto& members = block(b);
  return StateSet(members.begin(), members.end());
}

Partition refine(const Partition& initial, const SignatureFn& signature) {
  Partition current = initial;
  while (true) {
    std::map<std::pair<std::size_t, std::string>, std::size_t> ids;
    std::vector<std::size_t> labels(current.num_states());
    for (StateId s = 0; s < current.num_states(); ++s) {
      auto key = std::make_pair(current.block_of(s), signature(s, current));
      auto [it, fresh] = ids.emplace(std::move(key), ids.size());
      labels[s] = it->second;
    }
    Partition next(labels);
    if (next.num_blocks() == current.num_blocks()) return next;
    current = std::move(next);
  }
}

}  // namespace mpc
