#include "mpc/equivalence.hpp"

#include <stdexcept>

#include "mpc/strong.hpp"
#include "mpc/weak.hpp"

namespace mpc {

std::string to_string(Relation r) {
  switch (r) {
    case Relation::Strong:
      return "strong";
    case Relation::Weak:
      return "weak";
    case Relation::GWeak:
      return "gweak";
    case Relation::CongruentWeak:
      return "congruent-weak";
    case Relation::CongruentGWeak:
      return "congruent-gweak";
  }
  return "strong";
}

Relation parse_relation(std::string_view text) {
  for (auto r : {Relation::Strong, Relation::Weak, Relation::GWeak, Relation::CongruentWeak,
                 Relation::CongruentGWeak}) {
    if (text == to_string(r)) return r;
  }
  throw std::invalid_argument("unknown relation '" + std::string(text) + "'");
}

Verdict bisimilar(const Lmts& a, const Lmts& b, Relation r, std::size_t budget) {
  Verdict v;
  v.system = disjoint_union(a, b);
  const Lmts& l = v.system.lmts;
  const StateId x = v.system.root_a;
  const StateId y = v.system.root_b;
  switch (r) {
    case Relation::Strong:
      v.witness = strong_bisim(l);
      v.related = v.witness.related(x, y);
      break;
    case Relation::Weak:
      v.witness = weak_bisim(l);
      v.related = v.witness.related(x, y);
      break;
    case Relation::CongruentWeak:
      v.witness = weak_bisim(l);
      v.related = weak_congruence_check(l, v.witness, x, y);
      break;
    case Relation::GWeak:
      v.witness = gweak_bisim(l, budget);
      v.related = v.witness.related(x, y);
      break;
    case Relation::CongruentGWeak:
      v.witness = gweak_bisim(l, budget);
      v.related = gweak_congruence_check(l, v.witness, x, y);
      break;
  }
  return v;
}

Verdict bisimilar(const Term& a, const Term& b, Relation r, SyncOp sync, std::size_t state_bound,
                  std::size_t budget) {
  return bisimilar(build_lmts(a, sync, state_bound), build_lmts(b, sync, state_bound), r, budget);
}

}  // namespace mpc
