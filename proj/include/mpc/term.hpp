#pragma once

#include <memory>
#include <set>
#include <string>
#include <string_view>

#include "mpc/rational.hpp"

namespace mpc {

/// Action name: either tau or a visible identifier.
class ActionName {
 public:
  ActionName() = default;  // tau

  static ActionName tau() { return ActionName(); }
  /// Throws std::invalid_argument for "tau" or a malformed identifier.
  static ActionName visible(std::string_view id);

  bool is_tau() const { return id_.empty(); }
  /// "tau" for the internal action.
  std::string str() const { return is_tau() ? "tau" : id_; }
  const std::string& id() const { return id_; }

  auto operator<=>(const ActionName&) const = default;

 private:
  std::string id_;
};

bool is_identifier(std::string_view s);

using NameSet = std::set<std::string>;

enum class TermKind { Nil, Prefix, Choice, Var, Rec, Hide, Par };

struct TermNode;
using Term = std::shared_ptr<const TermNode>;

/// Immutable AST node. Build through the factory functions below, which
/// validate invariants and compute the canonical key once.
struct TermNode {
  TermKind kind = TermKind::Nil;
  ActionName action;   // Prefix
  Rational rate;       // Prefix
  std::string var;     // Var, Rec
  NameSet names;       // Hide, Par (visible only)
  Term left;           // Prefix/Rec/Hide body, Choice/Par left
  Term right;          // Choice/Par right
  std::string key;     // canonical printing
  std::size_t size = 1;
};

Term nil();
Term prefix(ActionName action, Rational rate, Term body);
Term choice(Term left, Term right);
Term var(std::string name);
Term rec(std::string name, Term body);
Term hide(Term body, NameSet names);
Term par(Term left, NameSet sync, Term right);

/// Canonical printing; parses back to an identical AST.
inline const std::string& canonical_key(const Term& t) { return t->key; }
inline std::size_t term_size(const Term& t) { return t->size; }

struct WellFormedness {
  bool closed = true;
  bool guarded = true;
  std::set<std::string> free_vars;
};

WellFormedness check_well_formed(const Term& t);

/// Replaces the free occurrences of `name` in `t` by `replacement` (assumed closed).
Term substitute(const Term& t, const Term& replacement, const std::string& name);

/// One-level unfolding of a Rec term: body{rec X : body / X}.
Term unfold(const Term& t);

/// Navigates Hide and Par nodes along a locus string of 'L'/'R' steps,
/// unfolding Rec nodes met on the way. Returns nullptr when the path does
/// not exist in the term.
Term subterm_at(Term t, std::string_view locus);

bool has_parallel(const Term& t);

}  // namespace mpc
