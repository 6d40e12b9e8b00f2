#pragma once

#include <string>

#include <json.hpp>

#include "mpc/ctmc.hpp"
#include "mpc/equivalence.hpp"
#include "mpc/gweak.hpp"
#include "mpc/partition.hpp"
#include "mpc/semantics.hpp"
#include "mpc/weak.hpp"

namespace mpc::report {

using Json = nlohmann::ordered_json;

std::string lmts_text(const Lmts& l);
Json lmts_json(const Lmts& l);

std::string partition_text(const Partition& p);
Json partition_json(const Partition& p);

std::string pbtm_text(const PbtmMap& m);
Json pbtm_json(const PbtmMap& m);

std::string steady_text(const SteadyState& s);
Json steady_json(const SteadyState& s);

std::string guard_text(const GuardReport& g);
Json guard_json(const GuardReport& g);

std::string exactness_text(const ExactnessResult& r);
Json exactness_json(const ExactnessResult& r);

std::string families_text(const FamilyIndex& index);
Json families_json(const FamilyIndex& index);

std::string verdict_text(const Verdict& v, Relation r);
Json verdict_json(const Verdict& v, Relation r);

}  // namespace mpc::report
