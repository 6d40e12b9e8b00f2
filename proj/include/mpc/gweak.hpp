#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mpc/partition.hpp"
#include "mpc/semantics.hpp"
#include "mpc/weak.hpp"

namespace mpc {

/// How the replicas of one computation end.
enum class Termination {
  Deviating,    // a common continuation exists but breaks conditions 1-3
  NoCommonTau,  // no tau-rate is enabled at the final state of every replica
  LoopBack,     // every replica returns to one of its own earlier states
};

std::string to_string(Termination t);

/// A family of replicated trees of tau-computations.
///
/// Row k (0-based) is the replica tree rooted at initial[k]; grid[k][i] is
/// the state sequence of computation i in that row, with length(i) + 1
/// entries and grid[k][i][0] == initial[k]. Rates are shared by all rows.
struct GFamily {
  std::vector<StateId> initial;
  std::vector<std::vector<std::vector<StateId>>> grid;
  std::vector<std::vector<Rational>> rates;
  std::vector<Termination> termination;
  /// True for the single-row, fully-unstable variant.
  bool fully_unstable_variant = false;

  std::size_t rows() const { return initial.size(); }
  std::size_t computations() const { return rates.size(); }
  std::size_t length(std::size_t i) const { return rates.at(i).size(); }
  StateId final_state(std::size_t k, std::size_t i) const { return grid.at(k).at(i).back(); }
  StateSet finals() const;
  /// States of row k at stages 2 and beyond (finals included).
  StateSet row_states(std::size_t k) const;

  bool operator==(const GFamily&) const = default;
};

struct FamilyCheck {
  bool valid = false;
  /// "structure", "fully-unstable", "not-fully-unstable", "1", "2", "3" or "4".
  std::optional<std::string> violated_condition;
};

/// Checks the family literally against the Lmts. Throws MpcError when the
/// grid is not structurally well formed (sizes, initial states, rates).
FamilyCheck verify_gfamily(const Lmts& l, const GFamily& f);

constexpr std::size_t kDefaultSearchBudget = 1000000;

struct FamilyMembership {
  std::size_t family = 0;
  std::size_t row = 0;
};

/// All maximal g-reducible families of an Lmts, found once.
///
/// Candidates are grown per state and per acting component: the rows are the
/// states reachable through moves of the other components, the trees are the
/// tau-moves of that component. Each candidate is trimmed until conditions
/// 1-3 hold at every interior stage and then verified literally. Families
/// whose rows all reappear, with identical trees, in a family with more rows
/// are dropped.
class FamilyIndex {
 public:
  /// Throws BudgetError when more than `budget` computations are explored.
  explicit FamilyIndex(const Lmts& l, std::size_t budget = kDefaultSearchBudget);

  const std::vector<GFamily>& families() const { return families_; }
  const std::vector<FamilyMembership>& memberships(StateId s) const {
    return membership_.at(s);
  }
  bool is_initial(StateId s) const { return !membership_.at(s).empty(); }

 private:
  std::vector<GFamily> families_;
  std::vector<std::vector<FamilyMembership>> membership_;
};

/// Maximal families with s among their initial states.
std::vector<GFamily> find_gfamilies(const Lmts& l, StateId s,
                                    std::size_t budget = kDefaultSearchBudget);

/// Context-free measure of computation i in row k: denominators count only
/// tau-moves into the row's own stages.
ProbTime probtime_cf(const Lmts& l, const GFamily& f, std::size_t k, std::size_t i);

/// Multiplicity-weighted probtime_cf sums, by duration, over the row-k
/// computations whose final state lies in dest.
PbtmMap pbtm_cf(const Lmts& l, const GFamily& f, std::size_t k, const StateSet& dest);

/// G-weak Markovian bisimilarity. Divergent systems are accepted.
Partition gweak_bisim(const Lmts& l, const FamilyIndex& index);
Partition gweak_bisim(const Lmts& l, std::size_t budget = kDefaultSearchBudget);

/// Equal exit rates for every action (tau included) toward every block of
/// `gweak` (which must be gweak_bisim(l)).
bool gweak_congruence_check(const Lmts& l, const Partition& gweak, StateId s1, StateId s2);
Partition gweak_congruence(const Lmts& l, const Partition& gweak);

/// Text grid dump of a family.
std::string describe(const GFamily& f);

}  // namespace mpc
