#pragma once

#include <map>
#include <string>
#include <vector>

#include "mpc/partition.hpp"
#include "mpc/semantics.hpp"

namespace mpc {

/// A tau-computation through fully unstable states. `steps` index
/// Lmts::transitions(); states has one more entry than steps.
struct ReducibleComputation {
  std::vector<StateId> states;
  std::vector<std::size_t> steps;
};

struct ProbTime {
  Rational prob;
  Rational duration;
  Rational measure;
};

/// Duration -> summed measure. Equality is exact map equality.
using PbtmMap = std::map<Rational, Rational>;

std::string to_string(const PbtmMap& m);

/// Execution probability, average duration and their product for a single
/// computation (one derivation of each step). Throws MpcError naming the
/// first state that is not fully unstable or a step that does not chain.
ProbTime probtime(const Lmts& l, const ReducibleComputation& c);

/// Computations from s ending at their first not-fully-unstable state.
/// Each Lmts transition appears once regardless of multiplicity.
/// Throws DivergenceError when a tau-cycle is met.
std::vector<ReducibleComputation> reducible_computations(const Lmts& l, StateId s);

/// pbtm(s, D): sums multiplicity-weighted probtime measures by duration over
/// reducible computations from fully unstable s into D. Empty for states
/// that are not fully unstable.
PbtmMap pbtm(const Lmts& l, StateId s, const StateSet& dest);

/// Weak Markovian bisimilarity. Throws DivergenceError on divergent input.
Partition weak_bisim(const Lmts& l);

/// Rooted check: equal exit rates for every action toward every block of
/// `weak` (which must be weak_bisim(l)).
bool weak_congruence_check(const Lmts& l, const Partition& weak, StateId s1, StateId s2);

/// Partition induced by the rooted relation over the classes of `weak`.
Partition weak_congruence(const Lmts& l, const Partition& weak);

}  // namespace mpc
