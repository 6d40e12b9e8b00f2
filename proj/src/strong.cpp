#include "mpc/strong.hpp"

#include <map>
#include <tuple>

namespace mpc {

std::string rate_signature(const Lmts& l, StateId s, const Partition& p, bool include_tau,
                           bool include_visible) {
  std::map<std::pair<ActionName, std::size_t>, Rational> rates;
  for (auto i : l.outgoing(s)) {
    const auto& tr = l.transitions()[i];
    if (tr.action.is_tau() ? !include_tau : !include_visible) continue;
    rates[{tr.action, p.block_of(tr.target)}] += tr.total_rate();
  }
  std::string sig;
  for (const auto& [key, rate] : rates) {
    sig += key.first.str() + "@" + std::to_string(key.second) + "=" + to_string(rate) + ";";
  }
  return sig;
}

Partition strong_bisim(const Lmts& l) {
  Partition all(std::vector<std::size_t>(l.size(), 0));
  return refine(all, [&](StateId s, const Partition& p) { return rate_signature(l, s, p, true); });
}

Lmts quotient_strong(const Lmts& l, const Partition& p) {
  std::vector<Term> states;
  std::vector<Transition> trs;
  for (std::size_t b = 0; b < p.num_blocks(); ++b) {
    StateId rep = p.block(b).front();
    states.push_back(l.state(rep));
    // Loci of the representative are kept so that families survive.
    using Key = std::tuple<ActionName, std::size_t, std::string>;
    std::map<Key, Rational> rates;
    std::map<Key, bool> synced;
    for (auto i : l.outgoing(rep)) {
      const auto& tr = l.transitions()[i];
      Key key{tr.action, p.block_of(tr.target), tr.locus};
      rates[key] += tr.total_rate();
      synced[key] = synced[key] || tr.synchronized;
    }
    for (const auto& [key, rate] : rates) {
      const auto& [action, target, locus] = key;
      trs.push_back({b, action, rate, target, 1, synced[key], locus});
    }
  }
  return Lmts(std::move(states), std::move(trs), p.block_of(l.root()), l.sync_op());
}

}  // namespace mpc
