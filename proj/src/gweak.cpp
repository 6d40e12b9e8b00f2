#include "mpc/gweak.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

#include "mpc/error.hpp"
#include "mpc/strong.hpp"

namespace mpc {

std::string to_string(Termination t) {
  switch (t) {
    case Termination::Deviating:
      return "deviating";
    case Termination::NoCommonTau:
      return "no-common-tau";
    case Termination::LoopBack:
      return "loop-back";
  }
  return "deviating";
}

StateSet GFamily::finals() const {
  StateSet out;
  for (const auto& row : grid) {
    for (const auto& comp : row) out.insert(comp.back());
  }
  return out;
}

StateSet GFamily::row_states(std::size_t k) const {
  StateSet out;
  for (const auto& comp : grid.at(k)) out.insert(comp.begin() + 1, comp.end());
  return out;
}

namespace {

const Transition* find_transition(const Lmts& l, StateId src, const ActionName& a,
                                  const Rational& rate, StateId dst) {
  for (auto idx : l.outgoing(src)) {
    const auto& tr = l.transitions()[idx];
    if (tr.target == dst && tr.action == a && tr.rate == rate) return &tr;
  }
  return nullptr;
}

bool has_tau_step(const Lmts& l, StateId src, const Rational& rate, StateId dst) {
  return find_transition(l, src, ActionName::tau(), rate, dst) != nullptr;
}

// Condition 1 at stage j (0-based, j < length(i)) of computation i in row k.
bool deviation_ok(const Lmts& l, const GFamily& f, std::size_t k, std::size_t i, std::size_t j) {
  StateId here = f.grid[k][i][j];
  StateId next = f.grid[k][i][j + 1];
  for (auto idx : l.outgoing(here)) {
    const auto& tr = l.transitions()[idx];
    if (tr.target == next) continue;
    bool ok = false;
    for (std::size_t k2 = 0; k2 < f.rows() && !ok; ++k2) {
      ok = f.grid[k2][i][j] == tr.target;
    }
    if (!ok && tr.action.is_tau()) {
      for (std::size_t i2 = 0; i2 < f.computations() && !ok; ++i2) {
        if (i2 == i) continue;
        for (std::size_t jj = 1; jj <= f.length(i2) && !ok; ++jj) {
          ok = f.grid[k][i2][jj] == tr.target && f.rates[i2][jj - 1] == tr.rate;
        }
      }
    }
    if (!ok) return false;
  }
  return true;
}

using ContextSet = std::set<std::tuple<std::size_t, ActionName, Rational>>;

// Labels of the moves from stage j of row k toward stage j of each row k'.
ContextSet context_at(const Lmts& l, const GFamily& f, std::size_t k, std::size_t i,
                      std::size_t j) {
  ContextSet out;
  for (auto idx : l.outgoing(f.grid[k][i][j])) {
    const auto& tr = l.transitions()[idx];
    for (std::size_t k2 = 0; k2 < f.rows(); ++k2) {
      if (f.grid[k2][i][j] == tr.target) out.emplace(k2, tr.action, tr.rate);
    }
  }
  return out;
}

using StageSet = std::set<std::tuple<std::size_t, std::size_t, ActionName, Rational>>;

// Labels of the moves from stage j of computation i in row k toward stages
// 2.. of the other computations of the same row.
StageSet cross_moves_at(const Lmts& l, const GFamily& f, std::size_t k, std::size_t i,
                        std::size_t j) {
  StageSet out;
  for (auto idx : l.outgoing(f.grid[k][i][j])) {
    const auto& tr = l.transitions()[idx];
    for (std::size_t i2 = 0; i2 < f.computations(); ++i2) {
      if (i2 == i) continue;
      for (std::size_t jj = 1; jj <= f.length(i2); ++jj) {
        if (f.grid[k][i2][jj] == tr.target) out.emplace(i2, jj, tr.action, tr.rate);
      }
    }
  }
  return out;
}

// Conditions 1-3 at stage j of computation i, over all rows.
bool stage_ok(const Lmts& l, const GFamily& f, std::size_t i, std::size_t j) {
  auto cross0 = cross_moves_at(l, f, 0, i, j);
  for (std::size_t k = 0; k < f.rows(); ++k) {
    if (!deviation_ok(l, f, k, i, j)) return false;
    if (j > 0 && context_at(l, f, k, i, j) != context_at(l, f, k, i, 0)) return false;
    if (k > 0 && cross_moves_at(l, f, k, i, j) != cross0) return false;
  }
  return true;
}

bool loops_back(const GFamily& f, std::size_t i) {
  for (const auto& row : f.grid) {
    const auto& comp = row[i];
    if (std::find(comp.begin(), comp.end() - 1, comp.back()) == comp.end() - 1) return false;
  }
  return true;
}

// Rates with which every row's final state of computation i can move by tau.
std::set<Rational> common_tau_rates(const Lmts& l, const GFamily& f, std::size_t i) {
  std::set<Rational> common;
  for (std::size_t k = 0; k < f.rows(); ++k) {
    std::set<Rational> here;
    for (auto idx : l.outgoing(f.final_state(k, i))) {
      const auto& tr = l.transitions()[idx];
      if (tr.action.is_tau()) here.insert(tr.rate);
    }
    if (k == 0) {
      common = std::move(here);
    } else {
      std::set<Rational> both;
      std::set_intersection(common.begin(), common.end(), here.begin(), here.end(),
                            std::inserter(both, both.end()));
      common = std::move(both);
    }
  }
  return common;
}

constexpr std::size_t kMaxExtensionCombos = 4096;

// True when computation i can be extended by one common tau-step while
// keeping conditions 1-3 at its current final stage, i.e. it is not maximal.
bool extensible(const Lmts& l, const GFamily& f, std::size_t i) {
  for (const auto& rate : common_tau_rates(l, f, i)) {
    std::vector<std::vector<StateId>> choices(f.rows());
    std::size_t combos = 1;
    for (std::size_t k = 0; k < f.rows(); ++k) {
      for (auto idx : l.outgoing(f.final_state(k, i))) {
        const auto& tr = l.transitions()[idx];
        if (tr.action.is_tau() && tr.rate == rate) choices[k].push_back(tr.target);
      }
      combos *= choices[k].size();
      if (combos > kMaxExtensionCombos) {
        throw BudgetError("too many replica extensions to examine for maximality");
      }
    }
    std::vector<std::size_t> pick(f.rows(), 0);
    while (true) {
      GFamily ext = f;
      ext.rates[i].push_back(rate);
      for (std::size_t k = 0; k < f.rows(); ++k) ext.grid[k][i].push_back(choices[k][pick[k]]);
      if (stage_ok(l, ext, i, f.length(i))) return true;
      std::size_t k = 0;
      while (k < f.rows() && ++pick[k] == choices[k].size()) pick[k++] = 0;
      if (k == f.rows()) break;
    }
  }
  return false;
}

void check_structure(const Lmts& l, const GFamily& f) {
  auto bad = [](const std::string& why) { throw MpcError("ill-formed family grid: " + why); };
  if (f.rows() == 0 || f.computations() == 0) bad("empty family");
  if (f.grid.size() != f.rows()) bad("row count mismatch");
  if (f.termination.size() != f.computations()) bad("termination count mismatch");
  std::set<StateId> distinct(f.initial.begin(), f.initial.end());
  if (distinct.size() != f.rows()) bad("initial states are not distinct");
  for (std::size_t k = 0; k < f.rows(); ++k) {
    if (f.initial[k] >= l.size()) bad("unknown state");
    if (f.grid[k].size() != f.computations()) bad("computation count mismatch");
    for (std::size_t i = 0; i < f.computations(); ++i) {
      const auto& comp = f.grid[k][i];
      if (f.length(i) == 0) bad("computation of length zero");
      if (comp.size() != f.length(i) + 1) bad("computation length mismatch");
      if (comp.front() != f.initial[k]) bad("computation does not start at its initial state");
      for (auto s : comp) {
        if (s >= l.size()) bad("unknown state");
      }
      std::set<StateId> seen(comp.begin(), comp.end() - 1);
      if (seen.size() != comp.size() - 1) bad("computation revisits a state before its end");
    }
  }
}

}  // namespace

FamilyCheck verify_gfamily(const Lmts& l, const GFamily& f) {
  check_structure(l, f);
  for (std::size_t k = 0; k < f.rows(); ++k) {
    for (std::size_t i = 0; i < f.computations(); ++i) {
      for (std::size_t j = 0; j < f.length(i); ++j) {
        if (!has_tau_step(l, f.grid[k][i][j], f.rates[i][j], f.grid[k][i][j + 1])) {
          return {false, "structure"};
        }
      }
    }
  }

  if (f.rows() == 1) {
    bool all_fu = true;
    bool finals_ok = true;
    for (std::size_t i = 0; i < f.computations(); ++i) {
      const auto& comp = f.grid[0][i];
      for (std::size_t j = 0; j < f.length(i); ++j) all_fu = all_fu && is_fully_unstable(l, comp[j]);
      finals_ok = finals_ok && (!is_fully_unstable(l, comp.back()) || loops_back(f, i));
    }
    if (all_fu) {
      if (!finals_ok) return {false, "fully-unstable"};
      return {true, std::nullopt};
    }
    for (std::size_t i = 0; i < f.computations(); ++i) {
      for (std::size_t j = 0; j < f.length(i); ++j) {
        if (is_fully_unstable(l, f.grid[0][i][j])) return {false, "not-fully-unstable"};
      }
    }
  }

  for (std::size_t i = 0; i < f.computations(); ++i) {
    for (std::size_t k = 0; k < f.rows(); ++k) {
      for (std::size_t j = 0; j < f.length(i); ++j) {
        if (!deviation_ok(l, f, k, i, j)) return {false, "1"};
      }
    }
    for (std::size_t k = 0; k < f.rows(); ++k) {
      auto first = context_at(l, f, k, i, 0);
      for (std::size_t j = 1; j < f.length(i); ++j) {
        if (context_at(l, f, k, i, j) != first) return {false, "2"};
      }
    }
    for (std::size_t j = 0; j < f.length(i); ++j) {
      auto ref = cross_moves_at(l, f, 0, i, j);
      for (std::size_t k = 1; k < f.rows(); ++k) {
        if (cross_moves_at(l, f, k, i, j) != ref) return {false, "3"};
      }
    }
    bool terminated = loops_back(f, i) || common_tau_rates(l, f, i).empty() || !extensible(l, f, i);
    if (!terminated) return {false, "4"};
  }
  return {true, std::nullopt};
}

namespace {

bool independent(const std::string& a, const std::string& b) {
  return !(a.starts_with(b) || b.starts_with(a));
}

class Budget {
 public:
  explicit Budget(std::size_t limit) : left_(limit) {}
  void spend() {
    if (left_ == 0) throw BudgetError("g-family search budget exhausted");
    --left_;
  }

 private:
  std::size_t left_;
};

struct Path {
  std::vector<StateId> states;
  std::vector<std::size_t> steps;  // transition indices
};

// Maximal simple paths from s over the allowed tau-edges; a path also ends
// when it re-enters one of its states, or when `stop_at` holds at a state.
template <typename EdgeFilter, typename StopAt>
std::vector<Path> tree_paths(const Lmts& l, StateId s, EdgeFilter allowed, StopAt stop_at,
                             Budget& budget) {
  std::vector<Path> out;
  Path cur{{s}, {}};
  std::vector<bool> on_path(l.size(), false);
  on_path[s] = true;
  auto walk = [&](auto&& self, StateId u) -> void {
    bool extended = false;
    for (auto idx : l.outgoing(u)) {
      const auto& tr = l.transitions()[idx];
      if (!tr.action.is_tau() || !allowed(tr)) continue;
      extended = true;
      budget.spend();
      cur.states.push_back(tr.target);
      cur.steps.push_back(idx);
      if (on_path[tr.target] || stop_at(tr.target)) {
        out.push_back(cur);
      } else {
        on_path[tr.target] = true;
        self(self, tr.target);
        on_path[tr.target] = false;
      }
      cur.states.pop_back();
      cur.steps.pop_back();
    }
    if (!extended && cur.steps.size() > 0) out.push_back(cur);
  };
  walk(walk, s);
  return out;
}

void truncate(GFamily& f, std::size_t i, std::size_t len) {
  f.rates[i].resize(len);
  for (auto& row : f.grid) row[i].resize(len + 1);
}

void dedupe_computations(GFamily& f) {
  std::set<std::pair<std::vector<std::vector<StateId>>, std::vector<Rational>>> seen;
  GFamily out;
  out.initial = f.initial;
  out.grid.resize(f.rows());
  out.fully_unstable_variant = f.fully_unstable_variant;
  for (std::size_t i = 0; i < f.computations(); ++i) {
    std::vector<std::vector<StateId>> column;
    for (const auto& row : f.grid) column.push_back(row[i]);
    if (!seen.emplace(column, f.rates[i]).second) continue;
    for (std::size_t k = 0; k < f.rows(); ++k) out.grid[k].push_back(f.grid[k][i]);
    out.rates.push_back(f.rates[i]);
  }
  f = std::move(out);
}

// Sorted rows and computations, so equal families compare equal.
void normalize(GFamily& f) {
  std::vector<std::size_t> order(f.rows());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
  std::sort(order.begin(), order.end(),
            [&](auto a, auto b) { return f.initial[a] < f.initial[b]; });
  GFamily g;
  g.fully_unstable_variant = f.fully_unstable_variant;
  for (auto k : order) {
    g.initial.push_back(f.initial[k]);
    g.grid.push_back(f.grid[k]);
  }
  std::vector<std::size_t> comp(f.computations());
  for (std::size_t i = 0; i < comp.size(); ++i) comp[i] = i;
  std::sort(comp.begin(), comp.end(), [&](auto a, auto b) {
    return std::tie(g.grid[0][a], f.rates[a]) < std::tie(g.grid[0][b], f.rates[b]);
  });
  GFamily h;
  h.initial = g.initial;
  h.fully_unstable_variant = g.fully_unstable_variant;
  h.grid.resize(g.rows());
  for (auto i : comp) {
    for (std::size_t k = 0; k < g.rows(); ++k) h.grid[k].push_back(g.grid[k][i]);
    h.rates.push_back(f.rates[i]);
    h.termination.push_back(f.termination.empty() ? Termination::NoCommonTau : f.termination[i]);
  }
  f = std::move(h);
}

void set_terminations(const Lmts& l, GFamily& f) {
  f.termination.assign(f.computations(), Termination::Deviating);
  for (std::size_t i = 0; i < f.computations(); ++i) {
    if (loops_back(f, i)) {
      f.termination[i] = Termination::LoopBack;
    } else if (common_tau_rates(l, f, i).empty()) {
      f.termination[i] = Termination::NoCommonTau;
    }
  }
}

std::optional<GFamily> fully_unstable_candidate(const Lmts& l, StateId s, Budget& budget) {
  auto paths = tree_paths(
      l, s, [](const Transition&) { return true; },
      [&](StateId u) { return !is_fully_unstable(l, u); }, budget);
  if (paths.empty()) return std::nullopt;
  GFamily f;
  f.initial = {s};
  f.fully_unstable_variant = true;
  f.grid.resize(1);
  for (const auto& p : paths) {
    f.grid[0].push_back(p.states);
    std::vector<Rational> rates;
    for (auto idx : p.steps) rates.push_back(l.transitions()[idx].rate);
    f.rates.push_back(std::move(rates));
  }
  dedupe_computations(f);
  set_terminations(l, f);
  return f;
}

std::optional<GFamily> component_candidate(const Lmts& l, const std::vector<StateId>& rows,
                                           const std::string& locus, Budget& budget) {
  const StateId s = rows.front();
  const bool single_row = rows.size() == 1;
  auto in_tree = [&](const Transition& tr) { return tr.locus.starts_with(locus); };
  auto local_key = [&](StateId u) -> std::string {
    auto sub = subterm_at(l.state(u), locus);
    return sub ? sub->key : std::string();
  };

  auto paths = tree_paths(l, s, in_tree, [](StateId) { return false; }, budget);
  if (paths.empty()) return std::nullopt;

  GFamily f;
  f.initial = rows;
  f.grid.resize(rows.size());
  for (const auto& p : paths) {
    std::size_t len = p.steps.size();
    std::vector<std::vector<StateId>> column(rows.size());
    column[0] = p.states;
    // Follow the same local moves in every other row.
    for (std::size_t k = 1; k < rows.size(); ++k) {
      column[k] = {rows[k]};
      for (std::size_t j = 0; j < len; ++j) {
        budget.spend();
        const auto& step = l.transitions()[p.steps[j]];
        const std::string want = local_key(step.target);
        std::optional<StateId> next;
        for (auto idx : l.outgoing(column[k].back())) {
          const auto& tr = l.transitions()[idx];
          if (tr.action.is_tau() && tr.rate == step.rate && tr.locus == step.locus &&
              local_key(tr.target) == want) {
            next = tr.target;
            break;
          }
        }
        if (!next) {
          len = j;
          break;
        }
        bool repeat = std::find(column[k].begin(), column[k].end(), *next) != column[k].end();
        column[k].push_back(*next);
        if (repeat) {
          len = j + 1;
          break;
        }
      }
    }
    if (len == 0) return std::nullopt;
    std::vector<Rational> rates;
    for (std::size_t j = 0; j < len; ++j) rates.push_back(l.transitions()[p.steps[j]].rate);
    for (std::size_t k = 0; k < rows.size(); ++k) {
      column[k].resize(len + 1);
      f.grid[k].push_back(std::move(column[k]));
    }
    f.rates.push_back(std::move(rates));
  }

  // Trim computations at the first stage where conditions 1-3 (or the
  // not-fully-unstable requirement of a single row) fail.
  bool changed = true;
  while (changed) {
    changed = false;
    dedupe_computations(f);
    for (std::size_t i = 0; i < f.computations() && !changed; ++i) {
      for (std::size_t j = 0; j < f.length(i); ++j) {
        budget.spend();
        bool bad = (single_row && is_fully_unstable(l, f.grid[0][i][j])) || !stage_ok(l, f, i, j);
        if (!bad) continue;
        if (j == 0) return std::nullopt;
        truncate(f, i, j);
        changed = true;
        break;
      }
    }
  }
  set_terminations(l, f);
  return f;
}

std::string row_signature(const GFamily& f, std::size_t k) {
  std::vector<std::string> comps;
  for (std::size_t i = 0; i < f.computations(); ++i) {
    std::string c;
    for (std::size_t j = 0; j < f.grid[k][i].size(); ++j) {
      c += std::to_string(f.grid[k][i][j]);
      if (j < f.length(i)) c += "-" + to_string(f.rates[i][j]) + "-";
    }
    comps.push_back(std::move(c));
  }
  std::sort(comps.begin(), comps.end());
  std::string out;
  for (const auto& c : comps) out += c + "|";
  return out;
}

bool dominated(const GFamily& small, const GFamily& big) {
  if (small.rows() >= big.rows()) return false;
  for (std::size_t k = 0; k < small.rows(); ++k) {
    auto it = std::find(big.initial.begin(), big.initial.end(), small.initial[k]);
    if (it == big.initial.end()) return false;
    if (row_signature(small, k) != row_signature(big, it - big.initial.begin())) return false;
  }
  return true;
}

}  // namespace

FamilyIndex::FamilyIndex(const Lmts& l, std::size_t budget_limit) {
  Budget budget(budget_limit);
  std::vector<GFamily> found;
  auto consider = [&](std::optional<GFamily> cand) {
    if (!cand) return;
    normalize(*cand);
    if (std::find(found.begin(), found.end(), *cand) != found.end()) return;
    if (verify_gfamily(l, *cand).valid) found.push_back(std::move(*cand));
  };

  for (StateId s = 0; s < l.size(); ++s) {
    std::vector<std::string> loci;
    for (auto idx : l.outgoing(s)) {
      const auto& tr = l.transitions()[idx];
      if (tr.action.is_tau() && std::find(loci.begin(), loci.end(), tr.locus) == loci.end()) {
        loci.push_back(tr.locus);
      }
    }
    for (const auto& locus : loci) {
      // Rows: states reached from s through moves of the other components.
      std::vector<StateId> rows{s};
      std::set<StateId> seen{s};
      for (std::size_t q = 0; q < rows.size(); ++q) {
        for (auto idx : l.outgoing(rows[q])) {
          const auto& tr = l.transitions()[idx];
          if (independent(tr.locus, locus) && seen.insert(tr.target).second) {
            rows.push_back(tr.target);
          }
        }
      }
      if (rows.size() == 1 && is_fully_unstable(l, s)) {
        consider(fully_unstable_candidate(l, s, budget));
      } else {
        consider(component_candidate(l, rows, locus, budget));
      }
    }
  }

  for (std::size_t a = 0; a < found.size(); ++a) {
    bool keep = true;
    for (std::size_t b = 0; b < found.size() && keep; ++b) {
      keep = a == b || !dominated(found[a], found[b]);
    }
    if (keep) families_.push_back(found[a]);
  }
  membership_.resize(l.size());
  for (std::size_t fi = 0; fi < families_.size(); ++fi) {
    for (std::size_t k = 0; k < families_[fi].rows(); ++k) {
      membership_[families_[fi].initial[k]].push_back({fi, k});
    }
  }
}

std::vector<GFamily> find_gfamilies(const Lmts& l, StateId s, std::size_t budget) {
  FamilyIndex index(l, budget);
  std::vector<GFamily> out;
  for (const auto& m : index.memberships(s)) out.push_back(index.families()[m.family]);
  return out;
}

ProbTime probtime_cf(const Lmts& l, const GFamily& f, std::size_t k, std::size_t i) {
  const StateSet own = f.row_states(k);
  ProbTime pt{1, 0, 0};
  for (std::size_t j = 0; j < f.length(i); ++j) {
    Rational den = exit_rate(l, f.grid[k][i][j], ActionName::tau(), own);
    pt.prob *= f.rates[i][j] / den;
    pt.duration += 1 / den;
  }
  pt.measure = pt.prob * pt.duration;
  return pt;
}

namespace {

Rational computation_weight(const Lmts& l, const GFamily& f, std::size_t k, std::size_t i) {
  Rational w = 1;
  for (std::size_t j = 0; j < f.length(i); ++j) {
    w *= find_transition(l, f.grid[k][i][j], ActionName::tau(), f.rates[i][j],
                         f.grid[k][i][j + 1])
             ->multiplicity;
  }
  return w;
}

}  // namespace

PbtmMap pbtm_cf(const Lmts& l, const GFamily& f, std::size_t k, const StateSet& dest) {
  PbtmMap out;
  for (std::size_t i = 0; i < f.computations(); ++i) {
    if (!dest.count(f.final_state(k, i))) continue;
    auto pt = probtime_cf(l, f, k, i);
    out[pt.duration] += computation_weight(l, f, k, i) * pt.measure;
  }
  return out;
}

Partition gweak_bisim(const Lmts& l, const FamilyIndex& index) {
  // Per (family, row): (final state, duration, weighted measure) per computation.
  struct Contribution {
    StateId final_state;
    Rational duration;
    Rational value;
  };
  std::map<std::pair<std::size_t, std::size_t>, std::vector<Contribution>> contributions;
  for (std::size_t fi = 0; fi < index.families().size(); ++fi) {
    const auto& f = index.families()[fi];
    for (std::size_t k = 0; k < f.rows(); ++k) {
      auto& out = contributions[{fi, k}];
      for (std::size_t i = 0; i < f.computations(); ++i) {
        auto pt = probtime_cf(l, f, k, i);
        out.push_back({f.final_state(k, i), pt.duration,
                       computation_weight(l, f, k, i) * pt.measure});
      }
    }
  }

  Partition all(std::vector<std::size_t>(l.size(), 0));
  return refine(all, [&](StateId s, const Partition& p) {
    std::string sig = rate_signature(l, s, p, false, true);
    if (!index.is_initial(s)) return "N|" + sig + "|" + rate_signature(l, s, p, true, false);
    std::set<std::string> family_sigs;
    for (const auto& m : index.memberships(s)) {
      std::map<std::size_t, PbtmMap> by_block;
      for (const auto& c : contributions.at({m.family, m.row})) {
        by_block[p.block_of(c.final_state)][c.duration] += c.value;
      }
      std::string fs;
      for (const auto& [b, pm] : by_block) fs += std::to_string(b) + ":" + to_string(pm) + ";";
      family_sigs.insert(std::move(fs));
    }
    sig = "I|" + sig + "|";
    for (const auto& fs : family_sigs) sig += "[" + fs + "]";
    return sig;
  });
}

Partition gweak_bisim(const Lmts& l, std::size_t budget) {
  return gweak_bisim(l, FamilyIndex(l, budget));
}

bool gweak_congruence_check(const Lmts& l, const Partition& gweak, StateId s1, StateId s2) {
  return s1 == s2 || rate_signature(l, s1, gweak, true) == rate_signature(l, s2, gweak, true);
}

Partition gweak_congruence(const Lmts& l, const Partition& gweak) {
  std::map<std::string, std::size_t> ids;
  std::vector<std::size_t> labels(l.size());
  for (StateId s = 0; s < l.size(); ++s) {
    auto [it, fresh] = ids.emplace(rate_signature(l, s, gweak, true), ids.size());
    labels[s] = it->second;
  }
  return Partition(labels);
}

std::string describe(const GFamily& f) {
  std::ostringstream os;
  os << "family rows=" << f.rows() << " computations=" << f.computations()
     << (f.fully_unstable_variant ? " fully-unstable" : "") << "\n";
  for (std::size_t i = 0; i < f.computations(); ++i) {
    os << "  computation " << i << " length=" << f.length(i) << " rates=";
    for (std::size_t j = 0; j < f.length(i); ++j) os << (j ? "," : "") << to_string(f.rates[i][j]);
    os << " termination=" << to_string(f.termination.at(i)) << "\n";
  }
  for (std::size_t k = 0; k < f.rows(); ++k) {
    os << "  row " << k << ":";
    for (std::size_t i = 0; i < f.computations(); ++i) {
      os << " [";
      for (std::size_t j = 0; j < f.grid[k][i].size(); ++j) os << (j ? " " : "") << f.grid[k][i][j];
      os << "]";
    }
    os << "\n";
  }
  os << "  finals:";
  for (auto s : f.finals()) os << " " << s;
  os << "\n";
  return os.str();
}

}  // namespace mpc
