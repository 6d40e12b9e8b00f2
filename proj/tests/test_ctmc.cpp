#include <doctest.h>

#include "mpc/ctmc.hpp"
#include "mpc/error.hpp"
#include "mpc/parser.hpp"
#include "mpc/strong.hpp"

using namespace mpc;

namespace {

Lmts lmts(const char* src, SyncOp sync = SyncOp::Product) { return build_lmts(parse(src), sync); }

void check_balance(const Ctmc& c, const SteadyState& ss) {
  Rational total = 0;
  for (const auto& p : ss.pi) {
    CHECK(p >= 0);
    total += p;
  }
  CHECK(total == 1);
  for (StateId j = 0; j < c.size; ++j) {
    Rational flow = 0;
    for (StateId i = 0; i < c.size; ++i) flow += ss.pi[i] * c.generator(i, j);
    CHECK(flow == 0);
  }
}

}  // namespace

TEST_CASE("actions and multiplicities fold into one rate") {
  auto c = to_ctmc(lmts("<a,1>.0 + <a,1>.0"));
  CHECK(c.generator(0, 1) == 2);
  CHECK(c.generator(0, 0) == -2);
  auto mixed = to_ctmc(lmts("<a,1>.0 + <b,3>.0"));
  CHECK(mixed.generator(0, 1) == 4);
}

TEST_CASE("self-loops do not enter the generator") {
  auto c = to_ctmc(lmts("rec X : <tau,1>.X"));
  CHECK(c.rates[0].empty());
  CHECK(c.generator(0, 0) == 0);
  auto ss = steady_state(c);
  REQUIRE(ss.pi.size() == 1);
  CHECK(ss.pi[0] == 1);
}

TEST_CASE("two-state symmetric chain") {
  auto c = to_ctmc(lmts("rec X : <a,1>.<b,1>.X"));
  auto ss = steady_state(c);
  CHECK(ss.pi == std::vector<Rational>{Rational(1, 2), Rational(1, 2)});
  check_balance(c, ss);
}

TEST_CASE("three-state cycle with unequal rates") {
  auto c = to_ctmc(lmts("rec X : <a,1>.<b,2>.<c,4>.X"));
  auto ss = steady_state(c);
  CHECK(ss.pi == std::vector<Rational>{Rational(4, 7), Rational(2, 7), Rational(1, 7)});
  check_balance(c, ss);
}

TEST_CASE("reducible chains are rejected") {
  CHECK_THROWS_AS(steady_state(to_ctmc(lmts("<a,1>.0"))), ReducibleChainError);
  try {
    steady_state(to_ctmc(lmts("<a,1>.(rec X : <b,1>.X)")));
    FAIL("expected a reducible chain");
  } catch (const ReducibleChainError& e) {
    CHECK(std::string(e.what()).find("cannot return to the root: 1") != std::string::npos);
  }
}

TEST_CASE("balance holds for parallel systems") {
  auto c = to_ctmc(lmts("(rec X : <tau,1>.<tau,2>.<b,3>.X) |[b]| (rec Y : <a,5>.<b,1>.Y)",
                        SyncOp::Min));
  check_balance(c, steady_state(c));
}

TEST_CASE("synchronization guard") {
  auto sync = lmts("(rec X : <tau,1>.<tau,1>.<b,1>.X) |[b]| (rec Y : <a,1>.<b,1>.Y)", SyncOp::Min);
  auto g = synchronization_guard(sync);
  CHECK_FALSE(g.satisfied);
  CHECK(g.offending_states == std::vector<StateId>{sync.root()});

  auto free = lmts("(rec X : <tau,1>.<tau,1>.<b1,1>.X) |[]| (rec Y : <a,1>.<b2,1>.Y)");
  CHECK(synchronization_guard(free).satisfied);
  CHECK(synchronization_guard(lmts("<tau,1>.<tau,2>.<a,1>.0")).satisfied);

  // A synchronization that enters a fully unstable single-row family is fine.
  auto fu = lmts("(<b,1>.<tau,1>.<tau,2>.0) |[b]| <b,1>.0");
  CHECK(synchronization_guard(fu).satisfied);
}

TEST_CASE("identity aggregation is exact") {
  auto l = lmts("(rec X : <tau,1>.<tau,2>.<b,3>.X) |[b]| (rec Y : <a,5>.<b,1>.Y)", SyncOp::Min);
  auto res = exactness_check(l, l);
  CHECK(res.exact);
  for (const auto& row : res.class_table) CHECK(row.sum_original == row.sum_reduced);
}

TEST_CASE("unrelated roots are reported") {
  CHECK_THROWS_AS(exactness_check(parse("rec X : <a,1>.X"), parse("rec X : <a,2>.X"),
                                  SyncOp::Product),
                  NotRelatedError);
}

TEST_CASE("strong quotient is exact") {
  auto l = lmts("rec X : <a,1>.(<b,1>.X + <b,1>.X) + <a,1>.<b,2>.X");
  auto q = quotient_strong(l, strong_bisim(l));
  CHECK(q.size() < l.size());
  auto res = exactness_check(l, q);
  CHECK(res.exact);
}
