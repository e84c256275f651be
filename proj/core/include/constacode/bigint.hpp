#ifndef CONSTACODE_BIGINT_HPP
#define CONSTACODE_BIGINT_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>

namespace constacode {

using BigInt = boost::multiprecision::cpp_int;

// q^e with exact integer arithmetic.
inline BigInt big_pow(BigInt base, std::int64_t e) {
    BigInt r = 1;
    while (e > 0) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

// Binomial coefficient; zero whenever k < 0 or k > n (n may be negative too).
inline BigInt binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;  // exact at every step
    }
    return r;
}

inline std::int64_t ipow(std::int64_t base, std::int64_t e) {
    std::int64_t r = 1;
    while (e > 0) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

}  // namespace constacode

#endif
