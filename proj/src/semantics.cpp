#include "mpc/semantics.hpp"

#include <deque>
#include <map>
#include <stdexcept>
#include <tuple>
#include <unordered_map>

#include "mpc/error.hpp"

namespace mpc {

Rational apply_sync(SyncOp op, const Rational& a, const Rational& b) {
  switch (op) {
    case SyncOp::Product:
      return a * b;
    case SyncOp::Min:
      return a < b ? a : b;
    case SyncOp::Max:
      return a < b ? b : a;
  }
  return a * b;
}

std::string to_string(SyncOp op) {
  switch (op) {
    case SyncOp::Product:
      return "product";
    case SyncOp::Min:
      return "min";
    case SyncOp::Max:
      return "max";
  }
  return "product";
}

SyncOp parse_sync_op(std::string_view text) {
  if (text == "product") return SyncOp::Product;
  if (text == "min") return SyncOp::Min;
  if (text == "max") return SyncOp::Max;
  throw std::invalid_argument("unknown synchronization operation '" + std::string(text) + "'");
}

std::string to_string(Stability s) {
  switch (s) {
    case Stability::Stable:
      return "stable";
    case Stability::FullyUnstable:
      return "fully_unstable";
    case Stability::UnstableNotFully:
      return "unstable_not_fully";
  }
  return "stable";
}

std::vector<Derivation> derive(const Term& t, SyncOp sync) {
  std::vector<Derivation> out;
  switch (t->kind) {
    case TermKind::Nil:
    case TermKind::Var:
      break;
    case TermKind::Prefix:
      out.push_back({t->action, t->rate, t->left, false, ""});
      break;
    case TermKind::Rec:
      out = derive(unfold(t), sync);
      break;
    case TermKind::Choice: {
      out = derive(t->left, sync);
      auto r = derive(t->right, sync);
      out.insert(out.end(), std::make_move_iterator(r.begin()), std::make_move_iterator(r.end()));
      break;
    }
    case TermKind::Hide:
      for (auto& d : derive(t->left, sync)) {
        if (!d.action.is_tau() && t->names.count(d.action.id())) d.action = ActionName::tau();
        d.target = hide(d.target, t->names);
        out.push_back(std::move(d));
      }
      break;
    case TermKind::Par: {
      const auto& sync_set = t->names;
      auto in_sync = [&](const ActionName& a) { return !a.is_tau() && sync_set.count(a.id()); };
      auto left = derive(t->left, sync);
      auto right = derive(t->right, sync);
      for (const auto& d : left) {
        if (in_sync(d.action)) continue;
        out.push_back({d.action, d.rate, par(d.target, sync_set, t->right), d.synchronized,
                       "L" + d.locus});
      }
      for (const auto& d : right) {
        if (in_sync(d.action)) continue;
        out.push_back({d.action, d.rate, par(t->left, sync_set, d.target), d.synchronized,
                       "R" + d.locus});
      }
      for (const auto& dl : left) {
        if (!in_sync(dl.action)) continue;
        for (const auto& dr : right) {
          if (dr.action != dl.action) continue;
          out.push_back({dl.action, apply_sync(sync, dl.rate, dr.rate),
                         par(dl.target, sync_set, dr.target), true, ""});
        }
      }
      break;
    }
  }
  return out;
}

Lmts::Lmts(std::vector<Term> states, std::vector<Transition> transitions, StateId root,
           SyncOp sync)
    : states_(std::move(states)), transitions_(std::move(transitions)), root_(root), sync_(sync) {
  out_.resize(states_.size());
  for (std::size_t i = 0; i < transitions_.size(); ++i) {
    out_.at(transitions_[i].source).push_back(i);
  }
}

Lmts build_lmts(const Term& t, SyncOp sync, std::size_t state_bound) {
  auto wf = check_well_formed(t);
  if (!wf.closed) {
    std::string vars;
    for (const auto& v : wf.free_vars) vars += (vars.empty() ? "" : ", ") + v;
    throw SemanticError("term is not closed (free variables: " + vars + ")");
  }
  if (!wf.guarded) throw SemanticError("term is not guarded");

  std::vector<Term> states;
  std::unordered_map<std::string, StateId> ids;
  std::vector<Transition> transitions;
  std::deque<StateId> queue;

  auto intern = [&](const Term& s) {
    auto [it, fresh] = ids.emplace(s->key, states.size());
    if (fresh) {
      if (states.size() >= state_bound) throw StateBoundError(state_bound);
      states.push_back(s);
      queue.push_back(it->second);
    }
    return it->second;
  };

  intern(t);
  while (!queue.empty()) {
    StateId src = queue.front();
    queue.pop_front();
    // Group derivations by (action, rate, target), keeping first-seen order.
    std::map<std::tuple<ActionName, Rational, StateId>, std::size_t> index;
    std::vector<Transition> local;
    for (auto& d : derive(states[src], sync)) {
      StateId dst = intern(d.target);
      auto key = std::make_tuple(d.action, d.rate, dst);
      auto it = index.find(key);
      if (it == index.end()) {
        index.emplace(key, local.size());
        local.push_back({src, d.action, d.rate, dst, 1, d.synchronized, d.locus});
      } else {
        auto& tr = local[it->second];
        ++tr.multiplicity;
        tr.synchronized = tr.synchronized || d.synchronized;
      }
    }
    transitions.insert(transitions.end(), local.begin(), local.end());
  }
  return Lmts(std::move(states), std::move(transitions), 0, sync);
}

UnionLmts disjoint_union(const Lmts& a, const Lmts& b) {
  std::vector<Term> states = a.states();
  states.insert(states.end(), b.states().begin(), b.states().end());
  std::vector<Transition> trs = a.transitions();
  const std::size_t off = a.size();
  for (auto tr : b.transitions()) {
    tr.source += off;
    tr.target += off;
    trs.push_back(std::move(tr));
  }
  UnionLmts u;
  u.lmts = Lmts(std::move(states), std::move(trs), a.root(), a.sync_op());
  u.root_a = a.root();
  u.root_b = b.root() + off;
  u.split = off;
  return u;
}

Rational exit_rate(const Lmts& l, StateId s, const ActionName& a, const StateSet& dest) {
  Rational sum = 0;
  for (auto i : l.outgoing(s)) {
    const auto& tr = l.transitions()[i];
    if (tr.action == a && dest.count(tr.target)) sum += tr.total_rate();
  }
  return sum;
}

Rational exit_rate(const Lmts& l, StateId s, const ActionName& a) {
  Rational sum = 0;
  for (auto i : l.outgoing(s)) {
    const auto& tr = l.transitions()[i];
    if (tr.action == a) sum += tr.total_rate();
  }
  return sum;
}

Rational total_exit_rate(const Lmts& l, StateId s) {
  Rational sum = 0;
  for (auto i : l.outgoing(s)) sum += l.transitions()[i].total_rate();
  return sum;
}

Stability stability(const Lmts& l, StateId s) {
  bool has_tau = false;
  bool has_visible = false;
  for (auto i : l.outgoing(s)) {
    if (l.transitions()[i].action.is_tau()) {
      has_tau = true;
    } else {
      has_visible = true;
    }
  }
  if (!has_tau) return Stability::Stable;
  return has_visible ? Stability::UnstableNotFully : Stability::FullyUnstable;
}

bool is_fully_unstable(const Lmts& l, StateId s) {
  return stability(l, s) == Stability::FullyUnstable;
}

bool is_divergent(const Lmts& l) {
  // Iterative DFS with colors over tau edges.
  enum Color : unsigned char { White, Grey, Black };
  std::vector<Color> color(l.size(), White);
  for (StateId start = 0; start < l.size(); ++start) {
    if (color[start] != White) continue;
    std::vector<std::pair<StateId, std::size_t>> stack{{start, 0}};
    color[start] = Grey;
    while (!stack.empty()) {
      auto& [s, next] = stack.back();
      const auto& outs = l.outgoing(s);
      if (next == outs.size()) {
        color[s] = Black;
        stack.pop_back();
        continue;
      }
      const auto& tr = l.transitions()[outs[next++]];
      if (!tr.action.is_tau()) continue;
      if (color[tr.target] == Grey) return true;
      if (color[tr.target] == White) {
        color[tr.target] = Grey;
        stack.emplace_back(tr.target, 0);
      }
    }
  }
  return false;
}

}  // namespace mpc
