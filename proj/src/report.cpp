#include "mpc/report.hpp"

#include <sstream>

namespace mpc::report {

namespace {

std::string ids(const std::vector<StateId>& v) {
  std::string out;
  for (auto s : v) out += (out.empty() ? "" : " ") + std::to_string(s);
  return out;
}

}  // namespace

std::string lmts_text(const Lmts& l) {
  std::ostringstream os;
  os << "lmts " << l.size() << " " << l.transitions().size() << " " << l.root() << "\n";
  for (const auto& tr : l.transitions()) {
    os << tr.source << " \"" << tr.action.str() << "," << to_string(tr.rate) << "*"
       << tr.multiplicity << "\" " << tr.target << "\n";
  }
  for (StateId s = 0; s < l.size(); ++s) os << "state " << s << " " << l.state(s)->key << "\n";
  return os.str();
}

Json lmts_json(const Lmts& l) {
  Json j;
  j["states"] = l.size();
  j["root"] = l.root();
  j["transitions"] = Json::array();
  for (const auto& tr : l.transitions()) {
    j["transitions"].push_back({{"source", tr.source},
                                {"action", tr.action.str()},
                                {"rate", to_string(tr.rate)},
                                {"multiplicity", tr.multiplicity},
                                {"target", tr.target},
                                {"synchronized", tr.synchronized}});
  }
  j["terms"] = Json::array();
  for (StateId s = 0; s < l.size(); ++s) j["terms"].push_back(l.state(s)->key);
  return j;
}

std::string partition_text(const Partition& p) {
  std::string out;
  for (const auto& b : p.blocks()) out += ids(b) + "\n";
  return out;
}

Json partition_json(const Partition& p) {
  Json j = Json::array();
  for (const auto& b : p.blocks()) j.push_back(b);
  return j;
}

std::string pbtm_text(const PbtmMap& m) {
  std::string out;
  for (const auto& [t, v] : m) out += "t = " + to_string(t) + " : sum = " + to_string(v) + "\n";
  return out;
}

Json pbtm_json(const PbtmMap& m) {
  Json j = Json::array();
  for (const auto& [t, v] : m) j.push_back({{"t", to_string(t)}, {"sum", to_string(v)}});
  return j;
}

std::string steady_text(const SteadyState& s) {
  std::string out;
  for (std::size_t i = 0; i < s.pi.size(); ++i) {
    out += "state " + std::to_string(i) + " pi = " + to_fraction_string(s.pi[i]) + "\n";
  }
  return out;
}

Json steady_json(const SteadyState& s) {
  Json j = Json::array();
  for (std::size_t i = 0; i < s.pi.size(); ++i) {
    j.push_back({{"state", i}, {"pi", to_fraction_string(s.pi[i])}});
  }
  return j;
}

std::string guard_text(const GuardReport& g) {
  std::string out = g.satisfied ? "satisfied" : "violated";
  if (!g.satisfied) out += " (states " + ids(g.offending_states) + ")";
  return out;
}

Json guard_json(const GuardReport& g) {
  return {{"satisfied", g.satisfied}, {"offending_states", g.offending_states}};
}

std::string exactness_text(const ExactnessResult& r) {
  std::ostringstream os;
  os << "exact " << (r.exact ? "yes" : "no") << "\n";
  os << "guard original " << guard_text(r.guard_original) << "\n";
  os << "guard reduced " << guard_text(r.guard_reduced) << "\n";
  for (std::size_t b = 0; b < r.class_table.size(); ++b) {
    const auto& row = r.class_table[b];
    os << "class " << b << " original {" << ids(row.original_states) << "} sum = "
       << to_fraction_string(row.sum_original) << " reduced {" << ids(row.reduced_states)
       << "} sum = " << to_fraction_string(row.sum_reduced) << " "
       << (row.sum_original == row.sum_reduced ? "equal" : "differ") << "\n";
  }
  os << "original\n" << steady_text(r.original) << "reduced\n" << steady_text(r.reduced);
  return os.str();
}

Json exactness_json(const ExactnessResult& r) {
  Json table = Json::array();
  for (const auto& row : r.class_table) {
    table.push_back({{"original_states", row.original_states},
                     {"sum_original", to_fraction_string(row.sum_original)},
                     {"reduced_states", row.reduced_states},
                     {"sum_reduced", to_fraction_string(row.sum_reduced)},
                     {"equal", row.sum_original == row.sum_reduced}});
  }
  return {{"exact", r.exact},
          {"guard_original", guard_json(r.guard_original)},
          {"guard_reduced", guard_json(r.guard_reduced)},
          {"classes", table},
          {"original", steady_json(r.original)},
          {"reduced", steady_json(r.reduced)}};
}

std::string families_text(const FamilyIndex& index) {
  std::string out = "families " + std::to_string(index.families().size()) + "\n";
  for (const auto& f : index.families()) out += describe(f);
  return out;
}

Json families_json(const FamilyIndex& index) {
  Json j = Json::array();
  for (const auto& f : index.families()) {
    Json comps = Json::array();
    for (std::size_t i = 0; i < f.computations(); ++i) {
      Json rates = Json::array();
      for (const auto& r : f.rates[i]) rates.push_back(to_string(r));
      comps.push_back({{"rates", rates}, {"termination", to_string(f.termination.at(i))}});
    }
    Json rows = Json::array();
    for (std::size_t k = 0; k < f.rows(); ++k) rows.push_back(f.grid[k]);
    StateSet finals = f.finals();
    j.push_back({{"initial", f.initial},
                 {"fully_unstable", f.fully_unstable_variant},
                 {"computations", comps},
                 {"grid", rows},
                 {"finals", std::vector<StateId>(finals.begin(), finals.end())}});
  }
  return j;
}

std::string verdict_text(const Verdict& v, Relation r) {
  std::ostringstream os;
  os << to_string(r) << " " << (v.related ? "related" : "not related") << "\n";
  os << "roots " << v.system.root_a << " " << v.system.root_b << " split " << v.system.split
     << "\n";
  os << partition_text(v.witness);
  return os.str();
}

Json verdict_json(const Verdict& v, Relation r) {
  return {{"relation", to_string(r)},
          {"related", v.related},
          {"root_a", v.system.root_a},
          {"root_b", v.system.root_b},
          {"split", v.system.split},
          {"partition", partition_json(v.witness)}};
}

}  // namespace mpc::report
