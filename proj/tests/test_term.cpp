#include <doctest.h>

#include "mpc/error.hpp"
#include "mpc/parser.hpp"
#include "mpc/rational.hpp"
#include "mpc/term.hpp"

using namespace mpc;

TEST_CASE("rationals parse exactly") {
  CHECK(parse_rational("7") == 7);
  CHECK(parse_rational("3/4") == Rational(3, 4));
  CHECK(parse_rational("0.5") == Rational(1, 2));
  CHECK(parse_rational("0.125") == Rational(1, 8));
  CHECK(parse_rational("2.50") == Rational(5, 2));
  CHECK(parse_rational("6/4") == Rational(3, 2));
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK(to_string(Rational(6, 5)) == "6/5");
  CHECK(to_string(Rational(4)) == "4");
  CHECK(to_fraction_string(Rational(1)) == "1/1");
}

TEST_CASE("precedence: prefix, hiding, choice, parallel") {
  Term t = parse("<a,1>.0 + <b,2>.0 |[]| <c,3>.0");
  REQUIRE(t->kind == TermKind::Par);
  CHECK(t->left->kind == TermKind::Choice);
  CHECK(t->right->kind == TermKind::Prefix);

  Term h = parse("<a,1>.0 / {a} + <b,1>.0");
  REQUIRE(h->kind == TermKind::Choice);
  REQUIRE(h->left->kind == TermKind::Prefix);
  CHECK(h->left->left->kind == TermKind::Hide);
  CHECK(parse("(<a,1>.0) / {a} + <b,1>.0")->left->kind == TermKind::Hide);

  Term l = parse("<a,1>.0 + <b,1>.0 + <c,1>.0");
  REQUIRE(l->kind == TermKind::Choice);
  CHECK(l->left->kind == TermKind::Choice);

  Term p = parse("<a,1>.0 |[a]| <a,1>.0 |[]| <b,1>.0");
  REQUIRE(p->kind == TermKind::Par);
  CHECK(p->left->kind == TermKind::Par);
  CHECK(p->names.empty());
  CHECK(p->left->names == NameSet{"a"});
}

TEST_CASE("printed form parses back to the same term") {
  for (const char* src : {
           "0",
           "<tau,1/2>.<a,3>.0",
           "<a,1>.0 + <b,2>.0 |[]| <c,3>.0",
           "(<a,1>.0 |[]| <b,1>.0) + <c,1>.0",
           "(rec X : <a,1>.X) |[a]| (rec Y : <a,2>.<b,1>.Y)",
           "(<a,1>.0 + <b,1>.0) / {a, b}",
           "<a,1>.(<b,1>.0 + <c,1>.0)",
           "<a,1>.0 |[]| (<b,1>.0 |[]| <c,1>.0)",
           "rec X : <a,1>.X + <b,2>.0",
           "(<a,1>.0) / {a} + <b,1>.0",
           "<a,1>.0 / {a}",
       }) {
    CAPTURE(src);
    Term t = parse(src);
    Term u = parse(t->key);
    CHECK(u->key == t->key);
    CHECK(term_size(u) == term_size(t));
  }
}

TEST_CASE("rec extends as far right as possible") {
  Term t = parse("rec X : <a,1>.X + <b,1>.0");
  REQUIRE(t->kind == TermKind::Rec);
  CHECK(t->left->kind == TermKind::Choice);
}

TEST_CASE("syntax errors carry a position") {
  try {
    parse("<a,1>.\n  + 0");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 3);
  }
  CHECK_THROWS_AS(parse("<a,0>.0"), ParseError);
  CHECK_THROWS_AS(parse("<a,-1>.0"), ParseError);
  CHECK_THROWS_AS(parse("<a,1>.0 / {tau}"), ParseError);
  CHECK_THROWS_AS(parse("<a,1>.0 |[tau]| 0"), ParseError);
  CHECK_THROWS_AS(parse("<a,1>.0 +"), ParseError);
  CHECK_THROWS_AS(parse("(<a,1>.0"), ParseError);
}

TEST_CASE("well-formedness") {
  auto w = check_well_formed(parse("rec X : <a,1>.Y"));
  CHECK_FALSE(w.closed);
  CHECK(w.free_vars == std::set<std::string>{"Y"});
  CHECK_FALSE(check_well_formed(parse("rec X : X + <a,1>.0")).guarded);
  CHECK_FALSE(check_well_formed(parse("rec X : (rec Y : X)")).guarded);
  auto ok = check_well_formed(parse("rec X : <a,1>.(rec Y : <b,1>.X + <c,1>.Y)"));
  CHECK(ok.closed);
  CHECK(ok.guarded);
}

TEST_CASE("substitution respects shadowing") {
  Term body = parse("rec X : <a,1>.X");
  Term t = substitute(parse("<b,1>.X + (rec X : <c,1>.X)"), body, "X");
  CHECK(t->key == "<b,1>.(rec X : <a,1>.X) + (rec X : <c,1>.X)");
  CHECK(unfold(body)->key == "<a,1>.(rec X : <a,1>.X)");
}

TEST_CASE("subterm lookup by locus") {
  Term t = parse("(<a,1>.0 |[]| <b,1>.0) / {a} |[]| rec Z : <c,1>.Z");
  CHECK(subterm_at(t, "LR")->key == "<b,1>.0");
  CHECK(subterm_at(t, "R")->key == "rec Z : <c,1>.Z");
  CHECK(subterm_at(t, "RL") == nullptr);
  CHECK(has_parallel(t));
  CHECK_FALSE(has_parallel(parse("<a,1>.0 + <b,1>.0")));
}

TEST_CASE("term files") {
  auto defs = parse_file(
      "# comment\n"
      "let A = <a,1>.0;\n"
      "let B = A |[]| A;  # reuse\n"
      "let C = rec X : <tau,0.5>.X;\n");
  REQUIRE(defs.definitions().size() == 3);
  CHECK(defs.get("B")->key == "<a,1>.0 |[]| <a,1>.0");
  CHECK(defs.get("C")->key == "rec X : <tau,1/2>.X");
  CHECK_THROWS_AS(defs.get("D"), SemanticError);
  CHECK_THROWS_AS(parse_file("let A = 0"), ParseError);
  CHECK_THROWS_AS(load_file("/nonexistent/file.mpc"), MpcError);
}
