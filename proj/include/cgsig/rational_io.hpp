#pragma once

#include <gmpxx.h>
#include <string>

namespace cgsig {

// "p/q" in lowest terms with the sign on the numerator; plain "p" when q == 1.
std::string rational_to_string(const mpq_class& x);

// Accepts "p", "-p", "p/q", "-p/q"; canonicalizes. Throws ParseError.
mpq_class parse_rational(const std::string& s);

// Decimal string -> mpz. Throws ParseError.
mpz_class parse_integer(const std::string& s);

} // namespace cgsig
