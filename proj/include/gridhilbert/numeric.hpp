#pragma once

#include <gmpxx.h>

#include <string>

namespace gridhilbert {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Exact "p/q" rendering; integers keep the "/1" so dumps are uniform.
std::string to_fraction_string(const Rational& value);

}  // namespace gridhilbert
