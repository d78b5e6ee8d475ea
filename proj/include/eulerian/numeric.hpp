#pragma once

#include <gmpxx.h>

namespace eulerian {

// Exact arithmetic backing for every count and coefficient in the library.
// Distribution polynomials and series coefficients overflow 64-bit integers
// already at moderate sizes, so nothing downstream uses machine ints for
// values that grow with n or t.
using Int = mpz_class;
using Rat = mpq_class;

// C(n, k), zero outside 0 <= k <= n.
inline Int binomial(long n, long k) {
    if (n < 0 || k < 0 || k > n) return Int(0);
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return r;
}

inline int sign_of(const Int& v) { return mpz_sgn(v.get_mpz_t()); }

inline Int pow_int(const Int& base, unsigned long exp) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

// a/b reduced to canonical form (gmp comparisons require it).
inline Rat make_rat(long num, long den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

}  // namespace eulerian
