#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "hstar/errors.hpp"

namespace hstar {

using Int = boost::multiprecision::cpp_int;
/// Arbitrary-precision rational, always stored reduced with positive denominator.
using Rat = boost::multiprecision::cpp_rational;

inline bool is_zero(const Rat& q) { return q.is_zero(); }
inline bool is_zero(const Int& n) { return n.is_zero(); }

/// Rational from a possibly non-normalized numerator/denominator pair.
inline Rat make_rat(Int num, Int den) {
    if (den == 0) throw Error("zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rat(std::move(num), std::move(den));
}

inline Int rat_num(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int rat_den(const Rat& q) { return boost::multiprecision::denominator(q); }

inline int sign_of(const Rat& q) { return q.sign(); }
inline int sign_of(const Int& n) { return n.sign(); }

inline Rat rat_abs(const Rat& q) { return q < 0 ? Rat(-q) : q; }

inline Rat rat_pow(const Rat& base, unsigned long e) {
    Rat acc(1), b = base;
    while (e) {
        if (e & 1) acc *= b;
        e >>= 1;
        if (e) b *= b;
    }
    return acc;
}

inline Int int_pow(Int base, unsigned long e) {
    Int acc(1);
    while (e) {
        if (e & 1) acc *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return acc;
}

inline std::string rat_to_string(const Rat& q) {
    Int n = rat_num(q), d = rat_den(q);
    if (d == 1) return n.str();
    return n.str() + "/" + d.str();
}

inline double rat_to_double(const Rat& q) { return q.convert_to<double>(); }

inline Int int_floor_div(const Int& a, const Int& b) {
    // b > 0 assumed
    Int q = a / b, r = a % b;
    if (r != 0 && a < 0) --q;
    return q;
}

inline Int rat_floor(const Rat& q) { return int_floor_div(rat_num(q), rat_den(q)); }

inline Int rat_ceil(const Rat& q) { return -rat_floor(-q); }

/// Largest dyadic rational with denominator 2^bits that is <= q.
inline Rat dyadic_floor(const Rat& q, unsigned bits) {
    Int scale = Int(1) << bits;
    Int n = rat_floor(q * Rat(scale));
    return Rat(n, scale);
}

/// Smallest dyadic rational with denominator 2^bits that is >= q.
inline Rat dyadic_ceil(const Rat& q, unsigned bits) { return -dyadic_floor(-q, bits); }

}  // namespace hstar
