#include "jksum/arith.hpp"

#include <stdexcept>

namespace jksum {

Factorization factorize(i64 n) {
    if (n <= 0) throw std::invalid_argument("factorize: n must be positive");
    Factorization f;
    for (i64 p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p == 0) {
            int e = 0;
            while (n % p == 0) { n /= p; ++e; }
            f.pairs.emplace_back(p, e);
        }
    }
    if (n > 1) f.pairs.emplace_back(n, 1);
    return f;
}

i64 mod_inverse(i64 a, i64 c) {
    if (c <= 0) throw std::invalid_argument("mod_inverse: modulus must be positive");
    // extended Euclid on (a mod c, c)
    i64 r0 = mod_canonical(a, c), r1 = c;
    i64 s0 = 1, s1 = 0;
    while (r1 != 0) {
        i64 q = r0 / r1;
        i64 r2 = r0 - q * r1;
        i64 s2 = s0 - q * s1;
        r0 = r1; r1 = r2;
        s0 = s1; s1 = s2;
    }
    if (r0 != 1) throw std::domain_error("mod_inverse: arguments are not coprime");
    return mod_canonical(s0, c);
}

int ord_p(i64 a, i64 p) {
    if (a == 0) throw std::invalid_argument("ord_p: order of 0 is undefined");
    if (p < 2) throw std::invalid_argument("ord_p: p must be prime");
    if (a < 0) a = -a;
    int e = 0;
    while (a % p == 0) { a /= p; ++e; }
    return e;
}

int jacobi_symbol(i64 a, i64 n) {
    if (n <= 0 || n % 2 == 0) throw std::invalid_argument("jacobi_symbol: n must be odd positive");
    a = mod_canonical(a, n);
    int sign = 1;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            i64 m = n % 8;
            if (m == 3 || m == 5) sign = -sign;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) sign = -sign;
        a %= n;
    }
    return n == 1 ? sign : 0;
}

cdouble epsilon_factor(i64 j) {
    if (mod_canonical(j, 2) == 0) throw std::invalid_argument("epsilon_factor: j must be odd");
    return mod_canonical(j, 4) == 1 ? cdouble(1.0, 0.0) : cdouble(0.0, 1.0);
}

i64 euler_phi(const Factorization& f) {
    i64 phi = 1;
    for (auto [p, e] : f.pairs) {
        phi *= p - 1;
        for (int i = 1; i < e; ++i) phi *= p;
    }
    return phi;
}

} // namespace jksum
