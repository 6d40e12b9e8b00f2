#include "mpc/term.hpp"

#include <cctype>
#include <stdexcept>

namespace mpc {

bool is_identifier(std::string_view s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  for (char c : s) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return true;
}

ActionName ActionName::visible(std::string_view id) {
  if (id == "tau") throw std::invalid_argument("'tau' is not a visible action name");
  if (id == "rec" || !is_identifier(id)) {
    throw std::invalid_argument("malformed action name '" + std::string(id) + "'");
  }
  ActionName a;
  a.id_ = std::string(id);
  return a;
}

namespace {

enum class Slot { Top, ParLeft, ParRight, ChoiceLeft, ChoiceRight, PrefixBody, HideBody };

bool needs_parens(TermKind child, Slot slot) {
  if (slot == Slot::Top) return false;
  if (child == TermKind::Rec) return true;
  switch (slot) {
    case Slot::ParLeft:
      return false;
    case Slot::ParRight:
    case Slot::ChoiceLeft:
      return child == TermKind::Par;
    case Slot::ChoiceRight:
    case Slot::PrefixBody:
      return child == TermKind::Par || child == TermKind::Choice;
    case Slot::HideBody:
      return child == TermKind::Par || child == TermKind::Choice || child == TermKind::Prefix;
    default:
      return false;
  }
}

std::string operand(const Term& child, Slot slot) {
  return needs_parens(child->kind, slot) ? "(" + child->key + ")" : child->key;
}

std::string names_str(const NameSet& names) {
  std::string out;
  for (const auto& n : names) {
    if (!out.empty()) out += ',';
    out += n;
  }
  return out;
}

void check_visible(const NameSet& names) {
  for (const auto& n : names) ActionName::visible(n);
}

std::shared_ptr<TermNode> make(TermKind kind) {
  auto node = std::make_shared<TermNode>();
  node->kind = kind;
  return node;
}

}  // namespace

Term nil() {
  static const Term instance = [] {
    auto n = make(TermKind::Nil);
    n->key = "0";
    return n;
  }();
  return instance;
}

Term prefix(ActionName action, Rational rate, Term body) {
  if (rate <= 0) throw std::invalid_argument("rate must be positive, got " + to_string(rate));
  auto n = make(TermKind::Prefix);
  n->action = std::move(action);
  rate.canonicalize();
  n->rate = std::move(rate);
  n->key = "<" + n->action.str() + "," + to_string(n->rate) + ">." + operand(body, Slot::PrefixBody);
  n->size = 1 + body->size;
  n->left = std::move(body);
  return n;
}

Term choice(Term left, Term right) {
  auto n = make(TermKind::Choice);
  n->key = operand(left, Slot::ChoiceLeft) + " + " + operand(right, Slot::ChoiceRight);
  n->size = 1 + left->size + right->size;
  n->left = std::move(left);
  n->right = std::move(right);
  return n;
}

Term var(std::string name) {
  if (!is_identifier(name) || name == "rec" || name == "tau") {
    throw std::invalid_argument("malformed variable name '" + name + "'");
  }
  auto n = make(TermKind::Var);
  n->key = name;
  n->var = std::move(name);
  return n;
}

Term rec(std::string name, Term body) {
  if (!is_identifier(name) || name == "rec" || name == "tau") {
    throw std::invalid_argument("malformed variable name '" + name + "'");
  }
  auto n = make(TermKind::Rec);
  n->key = "rec " + name + " : " + body->key;
  n->size = 1 + body->size;
  n->var = std::move(name);
  n->left = std::move(body);
  return n;
}

Term hide(Term body, NameSet names) {
  check_visible(names);
  auto n = make(TermKind::Hide);
  n->key = operand(body, Slot::HideBody) + "/{" + names_str(names) + "}";
  n->size = 1 + body->size;
  n->names = std::move(names);
  n->left = std::move(body);
  return n;
}

Term par(Term left, NameSet sync, Term right) {
  check_visible(sync);
  auto n = make(TermKind::Par);
  n->key = operand(left, Slot::ParLeft) + " |[" + names_str(sync) + "]| " +
           operand(right, Slot::ParRight);
  n->size = 1 + left->size + right->size;
  n->names = std::move(sync);
  n->left = std::move(left);
  n->right = std::move(right);
  return n;
}

namespace {

// `bound` holds the variables whose binder we are under; `unguarded` the
// subset not yet separated from their binder by a prefix.
void scan(const Term& t, std::set<std::string>& bound, std::set<std::string>& unguarded,
          WellFormedness& out) {
  switch (t->kind) {
    case TermKind::Nil:
      return;
    case TermKind::Var:
      if (!bound.count(t->var)) {
        out.closed = false;
        out.free_vars.insert(t->var);
      } else if (unguarded.count(t->var)) {
        out.guarded = false;
      }
      return;
    case TermKind::Prefix: {
      std::set<std::string> none;
      scan(t->left, bound, none, out);
      return;
    }
    case TermKind::Choice:
    case TermKind::Par:
      scan(t->left, bound, unguarded, out);
      scan(t->right, bound, unguarded, out);
      return;
    case TermKind::Hide:
      scan(t->left, bound, unguarded, out);
      return;
    case TermKind::Rec: {
      auto inner_bound = bound;
      inner_bound.insert(t->var);
      auto inner_unguarded = unguarded;
      inner_unguarded.insert(t->var);
      scan(t->left, inner_bound, inner_unguarded, out);
      return;
    }
  }
}

}  // namespace

WellFormedness check_well_formed(const Term& t) {
  WellFormedness out;
  std::set<std::string> bound, unguarded;
  scan(t, bound, unguarded, out);
  return out;
}

Term substitute(const Term& t, const Term& replacement, const std::string& name) {
  switch (t->kind) {
    case TermKind::Nil:
      return t;
    case TermKind::Var:
      return t->var == name ? replacement : t;
    case TermKind::Prefix: {
      auto body = substitute(t->left, replacement, name);
      return body == t->left ? t : prefix(t->action, t->rate, body);
    }
    case TermKind::Choice:
    case TermKind::Par: {
      auto l = substitute(t->left, replacement, name);
      auto r = substitute(t->right, replacement, name);
      if (l == t->left && r == t->right) return t;
      return t->kind == TermKind::Choice ? choice(l, r) : par(l, t->names, r);
    }
    case TermKind::Hide: {
      auto body = substitute(t->left, replacement, name);
      return body == t->left ? t : hide(body, t->names);
    }
    case TermKind::Rec: {
      if (t->var == name) return t;  // shadowed
      auto body = substitute(t->left, replacement, name);
      return body == t->left ? t : rec(t->var, body);
    }
  }
  return t;
}

Term unfold(const Term& t) {
  if (t->kind != TermKind::Rec) return t;
  return substitute(t->left, t, t->var);
}

Term subterm_at(Term t, std::string_view locus) {
  for (char step : locus) {
    while (t->kind == TermKind::Rec || t->kind == TermKind::Hide) {
      t = t->kind == TermKind::Rec ? unfold(t) : t->left;
    }
    if (t->kind != TermKind::Par) return nullptr;
    t = step == 'L' ? t->left : t->right;
  }
  return t;
}

bool has_parallel(const Term& t) {
  if (t->kind == TermKind::Par) return true;
  if (t->left && has_parallel(t->left)) return true;
  if (t->right && has_parallel(t->right)) return true;
  return false;
}

}  // namespace mpc
