#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mpc/term.hpp"

namespace mpc {

/// Parses a single term. Throws ParseError with line/column on failure.
Term parse(std::string_view text);

/// Named definitions of a term file, in file order.
class TermFile {
 public:
  const Term& get(const std::string& name) const;
  bool contains(const std::string& name) const;
  const std::vector<std::pair<std::string, Term>>& definitions() const { return defs_; }

  void add(std::string name, Term t);

 private:
  std::vector<std::pair<std::string, Term>> defs_;
};

/// Parses "let NAME = term ;" definitions. A free identifier that names an
/// earlier definition is replaced by that definition.
TermFile parse_file(std::string_view text);

TermFile load_file(const std::string& path);

}  // namespace mpc
