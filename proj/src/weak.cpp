#include "mpc/weak.hpp"

#include <functional>
#include <unordered_map>

#include "mpc/error.hpp"
#include "mpc/strong.hpp"

namespace mpc {

std::string to_string(const PbtmMap& m) {
  std::string out = "{";
  for (const auto& [t, v] : m) {
    if (out.size() > 1) out += ", ";
    out += to_string(t) + " -> " + to_string(v);
  }
  return out + "}";
}

ProbTime probtime(const Lmts& l, const ReducibleComputation& c) {
  if (c.steps.empty() || c.states.size() != c.steps.size() + 1) {
    throw MpcError("a reducible computation needs at least one step");
  }
  ProbTime pt{1, 0, 0};
  for (std::size_t i = 0; i < c.steps.size(); ++i) {
    StateId s = c.states[i];
    if (!is_fully_unstable(l, s)) {
      throw MpcError("computation is not reducible: state " + std::to_string(s) +
                     " is not fully unstable");
    }
    const auto& tr = l.transitions().at(c.steps[i]);
    if (tr.source != s || tr.target != c.states[i + 1] || !tr.action.is_tau()) {
      throw MpcError("computation step " + std::to_string(i) + " is not a tau-transition from " +
                     std::to_string(s) + " to " + std::to_string(c.states[i + 1]));
    }
    Rational den = exit_rate(l, s, ActionName::tau());
    pt.prob *= tr.rate / den;
    pt.duration += 1 / den;
  }
  pt.measure = pt.prob * pt.duration;
  return pt;
}

std::vector<ReducibleComputation> reducible_computations(const Lmts& l, StateId s) {
  std::vector<ReducibleComputation> out;
  if (!is_fully_unstable(l, s)) return out;
  ReducibleComputation path{{s}, {}};
  std::vector<bool> on_path(l.size(), false);
  on_path[s] = true;
  std::function<void(StateId)> walk = [&](StateId u) {
    for (auto i : l.outgoing(u)) {
      const auto& tr = l.transitions()[i];
      if (on_path[tr.target]) {
        throw DivergenceError("tau-cycle through state " + std::to_string(tr.target));
      }
      path.states.push_back(tr.target);
      path.steps.push_back(i);
      if (is_fully_unstable(l, tr.target)) {
        on_path[tr.target] = true;
        walk(tr.target);
        on_path[tr.target] = false;
      } else {
        out.push_back(path);
      }
      path.states.pop_back();
      path.steps.pop_back();
    }
  };
  walk(s);
  return out;
}

namespace {

// Final state -> pbtm restricted to that state.
using PbtmByTarget = std::map<StateId, PbtmMap>;

PbtmByTarget pbtm_by_target(const Lmts& l, StateId s) {
  PbtmByTarget out;
  for (const auto& c : reducible_computations(l, s)) {
    auto pt = probtime(l, c);
    Rational weight = 1;
    for (auto i : c.steps) weight *= l.transitions()[i].multiplicity;
    out[c.states.back()][pt.duration] += weight * pt.measure;
  }
  return out;
}

void add_into(PbtmMap& acc, const PbtmMap& m) {
  for (const auto& [t, v] : m) acc[t] += v;
}

}  // namespace

PbtmMap pbtm(const Lmts& l, StateId s, const StateSet& dest) {
  PbtmMap out;
  for (const auto& [target, m] : pbtm_by_target(l, s)) {
    if (dest.count(target)) add_into(out, m);
  }
  return out;
}

Partition weak_bisim(const Lmts& l) {
  if (is_divergent(l)) throw DivergenceError("weak bisimilarity requires a non-divergent system");

  std::vector<std::size_t> fu(l.size());
  std::unordered_map<StateId, PbtmByTarget> cache;
  for (StateId s = 0; s < l.size(); ++s) {
    fu[s] = is_fully_unstable(l, s) ? 1 : 0;
    if (fu[s]) cache.emplace(s, pbtm_by_target(l, s));
  }

  return refine(Partition(fu), [&](StateId s, const Partition& p) {
    if (!fu[s]) return rate_signature(l, s, p, true);
    std::map<std::size_t, PbtmMap> by_block;
    for (const auto& [target, m] : cache.at(s)) add_into(by_block[p.block_of(target)], m);
    std::string sig;
    for (const auto& [b, m] : by_block) sig += std::to_string(b) + ":" + to_string(m) + ";";
    return sig;
  });
}

bool weak_congruence_check(const Lmts& l, const Partition& weak, StateId s1, StateId s2) {
  return s1 == s2 || rate_signature(l, s1, weak, true) == rate_signature(l, s2, weak, true);
}

Partition weak_congruence(const Lmts& l, const Partition& weak) {
  std::map<std::string, std::size_t> ids;
  std::vector<std::size_t> labels(l.size());
  for (StateId s = 0; s < l.size(); ++s) {
    auto [it, fresh] = ids.emplace(rate_signature(l, s, weak, true), ids.size());
    labels[s] = it->second;
  }
  return Partition(labels);
}

}  // namespace mpc
