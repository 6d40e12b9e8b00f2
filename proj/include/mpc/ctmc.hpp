#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "mpc/gweak.hpp"
#include "mpc/semantics.hpp"

namespace mpc {

/// Action-erased chain. rates[i] maps j != i to the total rate i -> j.
struct Ctmc {
  std::size_t size = 0;
  StateId root = 0;
  std::vector<std::map<StateId, Rational>> rates;

  /// Generator entry; the diagonal is the negated row sum.
  Rational generator(StateId i, StateId j) const;
};

/// Self-loops are dropped, actions and multiplicities are summed.
Ctmc to_ctmc(const Lmts& l);

struct SteadyState {
  std::vector<Rational> pi;
};

/// Exact solution of pi Q = 0, sum pi = 1. Throws ReducibleChainError naming
/// the states that cannot return to the root.
SteadyState steady_state(const Ctmc& c);

struct GuardReport {
  bool satisfied = true;
  /// Family initial states entered by a synchronizing transition.
  std::vector<StateId> offending_states;
};

/// No initial state of a multi-row family (or of a single-row family that
/// avoids fully unstable states) may be the target of a synchronization.
GuardReport synchronization_guard(const Lmts& l, const FamilyIndex& index);
GuardReport synchronization_guard(const Lmts& l, std::size_t budget = kDefaultSearchBudget);

struct ClassRow {
  std::vector<StateId> original_states;
  std::vector<StateId> reduced_states;  // ids of the reduced Lmts
  Rational sum_original;
  Rational sum_reduced;
};

struct ExactnessResult {
  bool exact = false;
  std::vector<ClassRow> class_table;
  SteadyState original;
  SteadyState reduced;
  GuardReport guard_original;
  GuardReport guard_reduced;
};

/// Compares macrostate probabilities of the g-weak aggregation on both sides.
/// States strictly inside a family tree are charged to the class of the
/// tree's initial state. Throws NotRelatedError when the roots are not
/// g-weakly bisimilar and ReducibleChainError on a reducible chain.
ExactnessResult exactness_check(const Lmts& original, const Lmts& reduced,
                                std::size_t budget = kDefaultSearchBudget);
ExactnessResult exactness_check(const Term& original, const Term& reduced, SyncOp sync,
                                std::size_t budget = kDefaultSearchBudget);

}  // namespace mpc
