#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <string>

#include "mpc/ctmc.hpp"
#include "mpc/equivalence.hpp"
#include "mpc/error.hpp"
#include "mpc/gweak.hpp"
#include "mpc/parser.hpp"
#include "mpc/report.hpp"
#include "mpc/semantics.hpp"

namespace {

enum Exit {
  kOk = 0,
  kInputError = 1,
  kBoundExceeded = 2,
  kNegative = 3,
  kDivergent = 4,
  kReducibleChain = 5,
};

struct RunConfig {
  mpc::SyncOp sync = mpc::SyncOp::Product;
  std::size_t state_bound = mpc::kDefaultStateBound;
  std::size_t budget = mpc::kDefaultSearchBudget;
  bool json = false;
};

void emit(const RunConfig& cfg, const std::string& text, const mpc::report::Json& json) {
  if (cfg.json) {
    std::cout << json.dump(2) << "\n";
  } else {
    std::cout << text;
  }
}

mpc::Lmts load_lmts(const std::string& file, const std::string& name, const RunConfig& cfg) {
  auto defs = mpc::load_file(file);
  return mpc::build_lmts(defs.get(name), cfg.sync, cfg.state_bound);
}

int cmd_lts(const std::string& file, const std::string& name, const RunConfig& cfg) {
  auto l = load_lmts(file, name, cfg);
  emit(cfg, mpc::report::lmts_text(l), mpc::report::lmts_json(l));
  return kOk;
}

int cmd_check(const std::string& file, const std::string& a, const std::string& b,
              mpc::Relation r, const RunConfig& cfg) {
  auto v = mpc::bisimilar(load_lmts(file, a, cfg), load_lmts(file, b, cfg), r, cfg.budget);
  emit(cfg, mpc::report::verdict_text(v, r), mpc::report::verdict_json(v, r));
  return v.related ? kOk : kNegative;
}

int cmd_steady(const std::string& file, const std::string& name, const RunConfig& cfg) {
  auto ss = mpc::steady_state(mpc::to_ctmc(load_lmts(file, name, cfg)));
  emit(cfg, mpc::report::steady_text(ss), mpc::report::steady_json(ss));
  return kOk;
}

int cmd_exactness(const std::string& file, const std::string& a, const std::string& b,
                  const RunConfig& cfg) {
  auto res = mpc::exactness_check(load_lmts(file, a, cfg), load_lmts(file, b, cfg), cfg.budget);
  emit(cfg, mpc::report::exactness_text(res), mpc::report::exactness_json(res));
  return res.exact ? kOk : kNegative;
}

int cmd_families(const std::string& file, const std::string& name, const RunConfig& cfg) {
  auto l = load_lmts(file, name, cfg);
  mpc::FamilyIndex index(l, cfg.budget);
  emit(cfg, mpc::report::families_text(index), mpc::report::families_json(index));
  return kOk;
}

int cmd_divergence(const std::string& file, const std::string& name, const RunConfig& cfg) {
  bool divergent = mpc::is_divergent(load_lmts(file, name, cfg));
  emit(cfg, std::string("divergent ") + (divergent ? "yes" : "no") + "\n",
       {{"divergent", divergent}});
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Markovian process calculus workbench"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  std::string sync_text;
  if (const char* env = std::getenv("MPC_SYNC")) sync_text = env;
  app.add_option("--sync", sync_text, "Synchronization rate operator: product, min or max");
  app.add_option("--state-bound", cfg.state_bound, "Maximum number of states")
      ->check(CLI::PositiveNumber);
  app.add_option("--budget", cfg.budget, "Family search budget")->check(CLI::PositiveNumber);
  app.add_flag("--json", cfg.json, "Structured output");

  std::string file, a, b, relation = "strong";

  auto* lts = app.add_subcommand("lts", "Print the labeled multitransition system");
  lts->add_option("file", file)->required();
  lts->add_option("name", a)->required();

  auto* check = app.add_subcommand("check", "Decide an equivalence between two terms");
  check->add_option("file", file)->required();
  check->add_option("first", a)->required();
  check->add_option("second", b)->required();
  check->add_option("-r,--relation", relation,
                    "strong, weak, gweak, congruent-weak or congruent-gweak");

  auto* steady = app.add_subcommand("steady", "Exact steady-state distribution");
  steady->add_option("file", file)->required();
  steady->add_option("name", a)->required();

  auto* exactness = app.add_subcommand("exactness", "Check steady-state exactness of a reduction");
  exactness->add_option("file", file)->required();
  exactness->add_option("original", a)->required();
  exactness->add_option("reduced", b)->required();

  auto* families = app.add_subcommand("families", "Dump the g-reducible families");
  families->add_option("file", file)->required();
  families->add_option("name", a)->required();

  auto* divergence = app.add_subcommand("divergence", "Report tau-cycles");
  divergence->add_option("file", file)->required();
  divergence->add_option("name", a)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (!sync_text.empty()) cfg.sync = mpc::parse_sync_op(sync_text);
    if (lts->parsed()) return cmd_lts(file, a, cfg);
    if (check->parsed()) return cmd_check(file, a, b, mpc::parse_relation(relation), cfg);
    if (steady->parsed()) return cmd_steady(file, a, cfg);
    if (exactness->parsed()) return cmd_exactness(file, a, b, cfg);
    if (families->parsed()) return cmd_families(file, a, cfg);
    if (divergence->parsed()) return cmd_divergence(file, a, cfg);
  } catch (const mpc::StateBoundError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBoundExceeded;
  } catch (const mpc::BudgetError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBoundExceeded;
  } catch (const mpc::DivergenceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDivergent;
  } catch (const mpc::ReducibleChainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kReducibleChain;
  } catch (const mpc::NotRelatedError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kNegative;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
