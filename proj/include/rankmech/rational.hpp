#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <string_view>

namespace rankmech {

/// Arbitrary-precision integer.
using Int = boost::multiprecision::cpp_int;

/// Exact rational number. Always kept in canonical form (positive
/// denominator, gcd(|num|, den) = 1) by the underlying representation.
/// Every quantity in the engine (valuations, probabilities, payments,
/// dual multipliers) is a Rational; floating point is display-only.
using Rational = boost::multiprecision::cpp_rational;

/// Parses the wire grammar `-? digits ( "/" digits )?`.
/// Throws std::invalid_argument on malformed input or zero denominator.
Rational parse_rational(std::string_view text);

/// Renders canonical form: integers without "/1", otherwise "num/den".
std::string render_rational(const Rational& value);

/// Decimal rendering with round-half-up at `digits` places, e.g. for
/// report output. The underlying value stays exact.
std::string render_decimal(const Rational& value, int digits);

/// C(n, k). Returns 0 when k > n, and C(n, 0) = 1.
Int binomial(unsigned n, unsigned k);

/// Consecutive integer product lo * (lo+1) * ... * hi.
/// By convention the empty product psi(lo, lo-1) = 1.
/// Throws std::invalid_argument when hi < lo - 1.
Int psi(long lo, long hi);

/// Prefix of the alternating binomial sum: sum_{j=0}^{r} (-1)^j C(n, j).
/// Equals (-1)^r C(n-1, r) for r < n and 0 for r = n.
/// Throws std::invalid_argument when r > n.
Int alternating_binomial_prefix(unsigned n, unsigned r);

}  // namespace rankmech
