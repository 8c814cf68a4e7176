#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>

namespace mcm {

// Arbitrary-precision integer used for all counting results.  Sphere and
// ball sizes grow like q^(m*n) and must never overflow silently.
using Big = boost::multiprecision::cpp_int;

// binomial(n, k) with binom(n, k) = 0 for k < 0 or k > n.
inline Big binom(long n, long k) {
    if (k < 0 || k > n || n < 0) return 0;
    if (k > n - k) k = n - k;
    Big r = 1;
    for (long i = 0; i < k; ++i) {
        r *= (n - i);
        r /= (i + 1);
    }
    return r;
}

// multinomial(n; s, t) = C(n, s) * C(n - s, t), but 0 when s = t = 0 or
// when s + t > n.  The s = t = 0 exclusion matches its use as a count of
// ways to pick two disjoint *nonempty-in-total* line sets.
inline Big multinom2(long n, long s, long t) {
    if (s == 0 && t == 0) return 0;
    if (s < 0 || t < 0 || n - s - t < 0) return 0;
    return binom(n, s) * binom(n - s, t);
}

inline Big big_pow(Big base, unsigned long exp) {
    Big r = 1;
    while (exp) {
        if (exp & 1) r *= base;
        base *= base;
        exp >>= 1;
    }
    return r;
}

// q^e for machine-word q.
inline Big qpow(std::uint64_t q, unsigned long e) { return big_pow(Big(q), e); }

} // namespace mcm
