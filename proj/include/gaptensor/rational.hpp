#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace gaptensor {

// All graph data (capacities, demands, weights, flow values) is exact.
using Rational = mpq_class;
using BigInt = mpz_class;

// gmpxx offers no long long constructors, so 64-bit counts go through these.
inline BigInt to_bigint(long long value) {
    static_assert(sizeof(long) == sizeof(long long), "needs 64-bit long");
    return BigInt(static_cast<long>(value));
}
inline Rational to_rational(long long value) { return Rational(to_bigint(value)); }

// Accepts "p/q" or a bare integer "p". Throws ParseError otherwise.
Rational parse_rational(const std::string& text);

// Canonical spelling: "p" when the denominator is 1, "p/q" otherwise.
std::string format_rational(const Rational& value);

// gcd over positive rationals: gcd(numerators) / lcm(denominators).
// gcd(a, 0) = a. Both arguments must be >= 0.
Rational rational_gcd(const Rational& a, const Rational& b);

bool is_integer(const Rational& value);
BigInt rational_floor(const Rational& value);
BigInt rational_ceil(const Rational& value);

// True iff value = 2^k for some k >= 0.
bool is_power_of_two(const BigInt& value);
// Exponent of a power of two. Precondition: is_power_of_two(value).
long exact_log2(const BigInt& value);

}  // namespace gaptensor
