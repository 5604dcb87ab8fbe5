#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace ramsey {

using Int = boost::multiprecision::cpp_int;

// Exact rational arithmetic; all density values in this library are exact.
// cpp_rational keeps the value in lowest terms with a positive denominator.
using Rational = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rational& x) { return boost::multiprecision::numerator(x); }
inline Int rat_den(const Rational& x) { return boost::multiprecision::denominator(x); }

inline Int floor_rat(const Rational& x) {
    Int q = rat_num(x) / rat_den(x);
    if (rat_num(x) < 0 && q * rat_den(x) != rat_num(x)) --q;
    return q;
}

inline Int ceil_rat(const Rational& x) {
    Int q = rat_num(x) / rat_den(x);
    if (rat_num(x) > 0 && q * rat_den(x) != rat_num(x)) ++q;
    return q;
}

inline Int ipow(Int base, unsigned exp) {
    Int result = 1;
    while (exp) {
        if (exp & 1) result *= base;
        base *= base;
        exp >>= 1;
    }
    return result;
}

} // namespace ramsey
