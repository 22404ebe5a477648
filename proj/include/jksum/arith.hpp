#ifndef JKSUM_ARITH_HPP
#define JKSUM_ARITH_HPP

#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

#include "jksum/rational.hpp"

namespace jksum {

using cdouble = std::complex<double>;

// (prime, exponent) pairs with primes strictly increasing, exponents >= 1.
// The empty list is the factorization of 1.
struct Factorization {
    std::vector<std::pair<i64, int>> pairs;

    i64 value() const {
        i64 v = 1;
        for (auto [p, e] : pairs)
            for (int i = 0; i < e; ++i) v *= p;
        return v;
    }
};

// Trial division; moduli at desk scale stay small so nothing fancier is needed.
Factorization factorize(i64 n);

// a mod c canonicalized into [0, c).
inline i64 mod_canonical(i64 a, i64 c) {
    i64 r = a % c;
    return r < 0 ? r + c : r;
}

// (a*b) mod c without overflow, c > 0, any signs on a, b.
inline i64 mul_mod(i64 a, i64 b, i64 c) {
    return mod_canonical(static_cast<i64>(static_cast<i128>(a) * b % c), c);
}

// Inverse of a mod c, in [0, c). Throws if gcd(a, c) != 1.
i64 mod_inverse(i64 a, i64 c);

// Largest e with p^e | a. Undefined for a = 0 (throws); callers treat a == 0
// separately.
int ord_p(i64 a, i64 p);

// Jacobi symbol (a|n) for n odd positive, any integer a.
int jacobi_symbol(i64 a, i64 n);

// 1 if j = 1 mod 4, i if j = 3 mod 4 (j odd).
cdouble epsilon_factor(i64 j);

// Euler phi from a factorization.
i64 euler_phi(const Factorization& f);

} // namespace jksum

#endif
