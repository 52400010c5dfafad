#include "gaptensor/rational.hpp"

#include <cctype>

#include "gaptensor/errors.hpp"

namespace gaptensor {

namespace {

bool looks_like_integer(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
    std::size_t slash = text.find('/');
    if (slash == std::string::npos) {
        if (!looks_like_integer(text)) {
            throw ParseError("malformed rational '" + text + "'");
        }
        return Rational(mpz_class(text));
    }
    std::string num = text.substr(0, slash);
    std::string den = text.substr(slash + 1);
    if (!looks_like_integer(num) || !looks_like_integer(den)) {
        throw ParseError("malformed rational '" + text + "'");
    }
    mpz_class d(den);
    if (d == 0) {
        throw ParseError("zero denominator in '" + text + "'");
    }
    Rational r(mpz_class(num), d);
    r.canonicalize();
    return r;
}

std::string format_rational(const Rational& value) {
    Rational v = value;
    v.canonicalize();
    if (v.get_den() == 1) {
        return v.get_num().get_str();
    }
    return v.get_num().get_str() + "/" + v.get_den().get_str();
}

Rational rational_gcd(const Rational& a, const Rational& b) {
    if (a < 0 || b < 0) {
        throw ContractViolation("rational_gcd requires nonnegative arguments");
    }
    if (a == 0) return b;
    if (b == 0) return a;
    BigInt gn, ld;
    mpz_gcd(gn.get_mpz_t(), a.get_num().get_mpz_t(), b.get_num().get_mpz_t());
    mpz_lcm(ld.get_mpz_t(), a.get_den().get_mpz_t(), b.get_den().get_mpz_t());
    Rational r(gn, ld);
    r.canonicalize();
    return r;
}

bool is_integer(const Rational& value) {
    Rational v = value;
    v.canonicalize();
    return v.get_den() == 1;
}

BigInt rational_floor(const Rational& value) {
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), value.get_num().get_mpz_t(), value.get_den().get_mpz_t());
    return q;
}

BigInt rational_ceil(const Rational& value) {
    BigInt q;
    mpz_cdiv_q(q.get_mpz_t(), value.get_num().get_mpz_t(), value.get_den().get_mpz_t());
    return q;
}

bool is_power_of_two(const BigInt& value) {
    if (value <= 0) return false;
    // A power of two has exactly one set bit.
    return mpz_popcount(value.get_mpz_t()) == 1;
}

long exact_log2(const BigInt& value) {
    if (!is_power_of_two(value)) {
        throw ContractViolation("exact_log2 requires a power of two");
    }
    return static_cast<long>(mpz_sizeinbase(value.get_mpz_t(), 2)) - 1;
}

}  // namespace gaptensor
