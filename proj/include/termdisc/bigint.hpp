#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace termdisc {

// All exact arithmetic is built over an arbitrary-precision integer;
// factorial-sized values appear routinely and overflow any fixed width.
using Int = boost::multiprecision::cpp_int;

inline Int int_gcd(const Int& a, const Int& b) {
    return boost::multiprecision::gcd(a, b);
}

inline Int int_abs(const Int& a) {
    return boost::multiprecision::abs(a);
}

inline int int_sign(const Int& a) {
    return a == 0 ? 0 : (a < 0 ? -1 : 1);
}

inline Int int_pow(Int base, unsigned e) {
    Int r = 1;
    while (e) {
        if (e & 1u) r *= base;
        base *= base;
        e >>= 1u;
    }
    return r;
}

inline Int factorial(unsigned k) {
    Int r = 1;
    for (unsigned i = 2; i <= k; ++i) r *= i;
    return r;
}

// (m)_{down j} = m (m-1) ... (m-j+1); empty product for j = 0.
inline Int falling_factorial(const Int& m, unsigned j) {
    Int r = 1;
    for (unsigned i = 0; i < j; ++i) r *= (m - i);
    return r;
}

inline Int binomial(unsigned m, unsigned k) {
    if (k > m) return 0;
    if (k > m - k) k = m - k;
    Int r = 1;
    for (unsigned i = 0; i < k; ++i) {
        r *= (m - i);
        r /= (i + 1);
    }
    return r;
}

inline std::string int_str(const Int& a) { return a.str(); }

} // namespace termdisc
