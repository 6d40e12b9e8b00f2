#pragma once

#include "mpc/partition.hpp"
#include "mpc/semantics.hpp"

namespace mpc {

/// Coarsest partition whose blocks agree on exit_rate toward every
/// (action, block) pair: Markovian bisimilarity.
Partition strong_bisim(const Lmts& l);

/// One state per block; the rate of a toward block D is the exit rate of any
/// representative. The root is the block of the original root.
Lmts quotient_strong(const Lmts& l, const Partition& p);

/// "(action,block)=rate;..." in sorted order. Shared by the refinement loops.
std::string rate_signature(const Lmts& l, StateId s, const Partition& p, bool include_tau,
                           bool include_visible = true);

}  // namespace mpc
