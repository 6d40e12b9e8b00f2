#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "mpc/rational.hpp"
#include "mpc/term.hpp"

namespace mpc {

using StateId = std::size_t;
using StateSet = std::set<StateId>;

enum class SyncOp { Product, Min, Max };

Rational apply_sync(SyncOp op, const Rational& a, const Rational& b);
std::string to_string(SyncOp op);
/// Accepts "product", "min", "max". Throws std::invalid_argument otherwise.
SyncOp parse_sync_op(std::string_view text);

/// One SOS derivation proof of a transition of a term.
struct Derivation {
  ActionName action;
  Rational rate;
  Term target;
  bool synchronized = false;
  /// Position of the acting component: the 'L'/'R' path through parallel
  /// operators. For a synchronization it is the path to the synchronizing
  /// operator, so it is a prefix of the loci of both participants.
  std::string locus;
};

/// All derivation proofs of outgoing transitions, in rule order
/// (Alt1 before Alt2, Par1 before Par2 before Syn).
std::vector<Derivation> derive(const Term& t, SyncOp sync);

struct Transition {
  StateId source = 0;
  ActionName action;
  Rational rate;
  StateId target = 0;
  unsigned multiplicity = 1;
  /// True when some derivation of the transition applies the Syn rule.
  bool synchronized = false;
  std::string locus;

  Rational total_rate() const { return rate * multiplicity; }
};

enum class Stability { Stable, FullyUnstable, UnstableNotFully };
std::string to_string(Stability s);

/// Labeled multitransition system. Immutable after construction; state ids
/// are assigned in breadth-first discovery order from the root.
class Lmts {
 public:
  Lmts() = default;
  Lmts(std::vector<Term> states, std::vector<Transition> transitions, StateId root, SyncOp sync);

  StateId root() const { return root_; }
  std::size_t size() const { return states_.size(); }
  const Term& state(StateId s) const { return states_.at(s); }
  const std::vector<Term>& states() const { return states_; }
  const std::vector<Transition>& transitions() const { return transitions_; }
  SyncOp sync_op() const { return sync_; }

  /// Indices into transitions() of the outgoing transitions of s.
  const std::vector<std::size_t>& outgoing(StateId s) const { return out_.at(s); }

 private:
  std::vector<Term> states_;
  std::vector<Transition> transitions_;
  std::vector<std::vector<std::size_t>> out_;
  StateId root_ = 0;
  SyncOp sync_ = SyncOp::Product;
};

constexpr std::size_t kDefaultStateBound = 100000;

/// Throws SemanticError on open/unguarded terms and StateBoundError when
/// more than `state_bound` states are reached.
Lmts build_lmts(const Term& t, SyncOp sync = SyncOp::Product,
                std::size_t state_bound = kDefaultStateBound);

/// Disjoint union; the states of `b` are renumbered after those of `a`.
struct UnionLmts {
  Lmts lmts;
  StateId root_a = 0;
  StateId root_b = 0;
  std::size_t split = 0;  // ids < split come from `a`
};
UnionLmts disjoint_union(const Lmts& a, const Lmts& b);

Rational exit_rate(const Lmts& l, StateId s, const ActionName& a, const StateSet& dest);
/// Exit rate toward every state.
Rational exit_rate(const Lmts& l, StateId s, const ActionName& a);
Rational total_exit_rate(const Lmts& l, StateId s);
Stability stability(const Lmts& l, StateId s);
bool is_fully_unstable(const Lmts& l, StateId s);
/// True iff the tau-labeled subgraph has a cycle (self-loops included).
bool is_divergent(const Lmts& l);

}  // namespace mpc
