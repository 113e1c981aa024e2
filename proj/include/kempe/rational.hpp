#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace kempe {

// All transition probabilities are exact rationals; nothing in the chain is
// allowed to round. cpp_rational keeps itself canonical (reduced, positive
// denominator), so equality tests are plain ==.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Rat rat(long long num, long long den) { return Rat(Int(num), Int(den)); }

inline std::string rat_string(const Rat& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

// Decimal rendering for reports; the exact value always travels alongside.
inline std::string rat_decimal(const Rat& r, int digits = 12) {
    Int num = numerator(r), den = denominator(r);
    bool neg = num < 0;
    if (neg) num = -num;
    Int ip = num / den, rem = num % den;
    std::string s = (neg ? "-" : "") + ip.str() + ".";
    for (int i = 0; i < digits; ++i) {
        rem *= 10;
        s += char('0' + int(rem / den));
        rem %= den;
    }
    return s;
}

} // namespace kempe
