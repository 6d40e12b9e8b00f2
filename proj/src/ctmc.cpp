#include "mpc/ctmc.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "mpc/error.hpp"

namespace mpc {

Rational Ctmc::generator(StateId i, StateId j) const {
  if (i != j) {
    auto it = rates.at(i).find(j);
    return it == rates.at(i).end() ? Rational(0) : it->second;
  }
  Rational sum = 0;
  for (const auto& [to, r] : rates.at(i)) sum += r;
  return -sum;
}

Ctmc to_ctmc(const Lmts& l) {
  Ctmc c;
  c.size = l.size();
  c.root = l.root();
  c.rates.resize(l.size());
  for (const auto& tr : l.transitions()) {
    if (tr.source != tr.target) c.rates[tr.source][tr.target] += tr.total_rate();
  }
  return c;
}

SteadyState steady_state(const Ctmc& c) {
  const std::size_t n = c.size;
  if (n == 0) throw MpcError("empty chain");

  // Every state must reach the root and be reached from it.
  std::vector<std::vector<StateId>> fwd(n), back(n);
  for (StateId i = 0; i < n; ++i) {
    for (const auto& [j, r] : c.rates[i]) {
      fwd[i].push_back(j);
      back[j].push_back(i);
    }
  }
  auto reach = [&](const std::vector<std::vector<StateId>>& adj) {
    std::vector<bool> seen(n, false);
    std::deque<StateId> queue{c.root};
    seen[c.root] = true;
    while (!queue.empty()) {
      StateId u = queue.front();
      queue.pop_front();
      for (auto v : adj[u]) {
        if (!seen[v]) {
          seen[v] = true;
          queue.push_back(v);
        }
      }
    }
    return seen;
  };
  auto from_root = reach(fwd);
  auto to_root = reach(back);
  std::string unreached, trapped;
  for (StateId i = 0; i < n; ++i) {
    if (!from_root[i]) unreached += " " + std::to_string(i);
    if (!to_root[i]) trapped += " " + std::to_string(i);
  }
  if (!unreached.empty() || !trapped.empty()) {
    std::string msg = "chain is not irreducible;";
    if (!trapped.empty()) msg += " states that cannot return to the root:" + trapped + ";";
    if (!unreached.empty()) msg += " states unreachable from the root:" + unreached + ";";
    msg.pop_back();
    throw ReducibleChainError(msg);
  }

  // Rows of Q^T, the last one replaced by the normalization row.
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n + 1, 0));
  for (StateId i = 0; i < n; ++i) {
    for (StateId j = 0; j < n; ++j) a[j][i] = c.generator(i, j);
  }
  for (std::size_t j = 0; j <= n; ++j) a[n - 1][j] = 1;

  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) throw MpcError("singular balance system");
    std::swap(a[piv], a[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rational f = a[r][col] / a[col][col];
      for (std::size_t k = col; k <= n; ++k) a[r][k] -= f * a[col][k];
    }
  }
  SteadyState out;
  out.pi.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.pi[i] = a[i][n] / a[i][i];
    out.pi[i].canonicalize();
  }
  return out;
}

GuardReport synchronization_guard(const Lmts& l, const FamilyIndex& index) {
  std::vector<bool> sync_target(l.size(), false);
  for (const auto& tr : l.transitions()) {
    if (tr.synchronized) sync_target[tr.target] = true;
  }
  std::set<StateId> offending;
  for (const auto& f : index.families()) {
    bool applies = f.rows() >= 2;
    if (!applies) {
      applies = true;
      for (std::size_t i = 0; i < f.computations(); ++i) {
        const auto& comp = f.grid[0][i];
        for (auto s : comp) applies = applies && !is_fully_unstable(l, s);
      }
    }
    if (!applies) continue;
    for (auto s : f.initial) {
      if (sync_target[s]) offending.insert(s);
    }
  }
  return {offending.empty(), {offending.begin(), offending.end()}};
}

GuardReport synchronization_guard(const Lmts& l, std::size_t budget) {
  return synchronization_guard(l, FamilyIndex(l, budget));
}

namespace {

// Charges each state to the initial state of a family tree it lies strictly
// inside, following such links until a state that is not interior.
std::vector<StateId> anchors(const Lmts& l, const FamilyIndex& index) {
  std::vector<std::optional<StateId>> link(l.size());
  for (const auto& f : index.families()) {
    for (std::size_t k = 0; k < f.rows(); ++k) {
      for (std::size_t i = 0; i < f.computations(); ++i) {
        for (std::size_t j = 1; j < f.length(i); ++j) {
          StateId s = f.grid[k][i][j];
          if (!link[s] && s != f.initial[k]) link[s] = f.initial[k];
        }
      }
    }
  }
  std::vector<StateId> out(l.size());
  for (StateId s = 0; s < l.size(); ++s) {
    std::set<StateId> seen{s};
    StateId cur = s;
    while (link[cur] && seen.insert(*link[cur]).second) cur = *link[cur];
    out[s] = cur;
  }
  return out;
}

}  // namespace

ExactnessResult exactness_check(const Lmts& original, const Lmts& reduced, std::size_t budget) {
  auto u = disjoint_union(original, reduced);
  FamilyIndex index(u.lmts, budget);
  Partition g = gweak_bisim(u.lmts, index);
  if (!g.related(u.root_a, u.root_b)) {
    throw NotRelatedError("the roots are not g-weakly bisimilar");
  }

  ExactnessResult res;
  res.original = steady_state(to_ctmc(original));
  res.reduced = steady_state(to_ctmc(reduced));
  res.guard_original = synchronization_guard(original, budget);
  res.guard_reduced = synchronization_guard(reduced, budget);

  auto anchor = anchors(u.lmts, index);
  std::map<std::size_t, ClassRow> rows;
  for (StateId s = 0; s < u.lmts.size(); ++s) {
    auto& row = rows[g.block_of(anchor[s])];
    if (s < u.split) {
      row.original_states.push_back(s);
      row.sum_original += res.original.pi[s];
    } else {
      row.reduced_states.push_back(s - u.split);
      row.sum_reduced += res.reduced.pi[s - u.split];
    }
  }
  res.exact = true;
  for (auto& [b, row] : rows) {
    if (row.original_states.empty() && row.reduced_states.empty()) continue;
    res.exact = res.exact && row.sum_original == row.sum_reduced;
    res.class_table.push_back(std::move(row));
  }
  return res;
}

ExactnessResult exactness_check(const Term& original, const Term& reduced, SyncOp sync,
                                std::size_t budget) {
  return exactness_check(build_lmts(original, sync), build_lmts(reduced, sync), budget);
}

}  // namespace mpc
