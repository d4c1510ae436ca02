#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace confembed {

// Every quantity in the computation path is an exact rational; no floating
// point appears anywhere between input parsing and output formatting.
using Integer = mpz_class;
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

/// Renders as "p/q", or just "p" when the denominator is 1.
std::string to_string(const Rational& q);
std::string to_string(const Integer& n);

/// Accepts "3", "-3", "7/2", "-7/2". Whitespace is not tolerated.
std::optional<Rational> parse_rational(std::string_view s);

bool is_integer(const Rational& q);

/// All positive divisors of |n|, unsorted. n must be nonzero.
std::vector<Integer> divisors(const Integer& n);

}  // namespace confembed
