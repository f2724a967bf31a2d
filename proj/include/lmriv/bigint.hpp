#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace lmriv {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

inline int sign_of(const BigInt &x) { return x.sign(); }

// Floor/ceil division by a power of two (cpp_int >> truncates toward zero).
inline BigInt floor_div_pow2(const BigInt &num, unsigned k) {
    if (k == 0) return num;
    BigInt q = num >> k;
    if (num < 0 && (num & ((BigInt(1) << k) - 1)) != 0) --q;
    return q;
}

inline BigInt ceil_div_pow2(const BigInt &num, unsigned k) {
    return -floor_div_pow2(-num, k);
}

// Ceiling of a/b for b > 0.
inline BigInt ceil_div(const BigInt &a, const BigInt &b) {
    BigInt q, r;
    boost::multiprecision::divide_qr(a, b, q, r);
    if (r != 0 && ((a < 0) == (b < 0))) ++q;
    return q;
}

} // namespace lmriv
