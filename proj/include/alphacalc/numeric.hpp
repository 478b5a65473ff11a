#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "alphacalc/errors.hpp"

namespace alphacalc {

// Every quantity in this library is exact: arbitrary-precision integers and
// rationals, no floating point anywhere. Rationals are kept in lowest terms
// with positive denominator by the backing type.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int rat_den(const Rat& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const Rat& q) { return rat_den(q) == 1; }

/// Floor of a/b for b != 0 (cpp_int division truncates toward zero).
inline Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if (a % b != 0 && ((a < 0) != (b < 0))) --q;
    return q;
}

inline Int ceil_div(const Int& a, const Int& b) {
    Int q = a / b;
    if (a % b != 0 && ((a < 0) == (b < 0))) ++q;
    return q;
}

inline Int floor_rat(const Rat& q) { return floor_div(rat_num(q), rat_den(q)); }
inline Int ceil_rat(const Rat& q) { return ceil_div(rat_num(q), rat_den(q)); }

/// num/den with either sign of denominator (nonzero); result is normalized.
inline Rat make_rat(Int num, Int den) {
    if (den == 0) throw ValidationError("zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rat(std::move(num), std::move(den));
}

/// "p/q" in lowest terms, plain "p" when the denominator is 1.
std::string format_rat(const Rat& q);

/// Parses "p", "-p", or "p/q". Throws ValidationError on malformed input or
/// zero denominator.
Rat parse_rat(const std::string& text);

/// Parses a plain (optionally signed) integer.
Int parse_int(const std::string& text);

}  // namespace alphacalc
