#pragma once

#include <string>
#include <string_view>

#include "mpc/gweak.hpp"
#include "mpc/partition.hpp"
#include "mpc/semantics.hpp"

namespace mpc {

enum class Relation { Strong, Weak, GWeak, CongruentWeak, CongruentGWeak };

std::string to_string(Relation r);
/// Accepts "strong", "weak", "gweak", "congruent-weak", "congruent-gweak".
Relation parse_relation(std::string_view text);

struct Verdict {
  bool related = false;
  UnionLmts system;
  /// Partition of the union computed for the relation.
  Partition witness;
};

/// Decides the relation between the roots of two Lmts on their disjoint
/// union. Weak relations throw DivergenceError on divergent input.
Verdict bisimilar(const Lmts& a, const Lmts& b, Relation r,
                  std::size_t budget = kDefaultSearchBudget);
Verdict bisimilar(const Term& a, const Term& b, Relation r, SyncOp sync = SyncOp::Product,
                  std::size_t state_bound = kDefaultStateBound,
                  std::size_t budget = kDefaultSearchBudget);

}  // namespace mpc
