#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace mpc {

/// Exact rational number. All rates and probabilities in the workbench use it.
using Rational = mpq_class;

/// Parses "7", "3/4" or "0.125" exactly. Throws std::invalid_argument on junk.
Rational parse_rational(std::string_view text);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);

/// Always "p/q", including "1/1".
std::string to_fraction_string(const Rational& value);

}  // namespace mpc
