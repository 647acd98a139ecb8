#ifndef CREPANT_RATIONAL_HPP
#define CREPANT_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace crepant {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/** Canonical rendering "p/q" (or just "p" when q == 1). */
inline std::string rational_str(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) {
        s += "/";
        s += denominator(r).str();
    }
    return s;
}

/** Parse "p" or "p/q"; throws std::invalid_argument on malformed input. */
Rational parse_rational(const std::string& s);

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

Int gcd(Int a, Int b);
long gcd_long(long a, long b);
long lcm_long(long a, long b);

}  // namespace crepant

#endif
