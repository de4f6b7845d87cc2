#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace stab {

// Exact fraction, always kept in lowest terms with a positive denominator.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
	Rational q(num, den);
	q.canonicalize();
	return q;
}

/// Parses "p", "-p" or "p/q". Returns nothing on malformed text or q == 0.
std::optional<Rational> parse_rational(std::string_view text);

/// Lowest-terms text, "p" when the denominator is 1.
std::string to_string(const Rational &q);

inline double to_double(const Rational &q) { return q.get_d(); }

} // namespace stab
