#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace nashkit {

using Integer = mpz_class;
using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

inline bool is_integral(const Rational& q) { return q.get_den() == 1; }

/// "p/q" or "p"; canonicalized. Throws InputError on garbage.
Rational parse_rational(std::string_view text);

/// Canonical text form, "p" for integers and "p/q" otherwise.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

long to_long(const Integer& z);

}  // namespace nashkit
