#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "eulerian/numeric.hpp"
#include "eulerian/polynomial.hpp"

namespace eulerian {

namespace detail {

// Positive gcd of all coefficients; 0 for the zero polynomial.
inline Int content(const Polynomial& p) {
    Int g(0);
    for (const Int& c : p.coeffs())
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

inline Polynomial primitive_part(const Polynomial& p) {
    if (p.is_zero()) return p;
    const Int g = content(p);
    std::vector<Int> c = p.coeffs();
    for (Int& v : c) v /= g;
    return Polynomial(std::move(c));
}

// Pseudo-remainder r with lc(g)^(deg f - deg g + 1) * f = q * g + r.
// Requires deg f >= deg g >= 0. Everything stays in Z[x].
inline Polynomial pseudo_remainder(const Polynomial& f, const Polynomial& g) {
    const Int& d = g.leading();
    const int dg = g.degree();
    std::vector<Int> r = f.coeffs();
    int multiplications_left = f.degree() - dg + 1;

    auto degree_of = [&]() {
        int k = static_cast<int>(r.size()) - 1;
        while (k >= 0 && r[static_cast<std::size_t>(k)] == 0) --k;
        return k;
    };

    for (int dr = degree_of(); dr >= dg; dr = degree_of()) {
        const Int lead = r[static_cast<std::size_t>(dr)];
        for (Int& v : r) v *= d;
        const int shift = dr - dg;
        for (int i = 0; i <= dg; ++i)
            r[static_cast<std::size_t>(i + shift)] -= lead * g.coeffs()[i];
        --multiplications_left;
    }
    Polynomial rem(std::move(r));
    if (!rem.is_zero() && multiplications_left > 0)
        rem = pow_int(d, static_cast<unsigned long>(multiplications_left)) * rem;
    return rem;
}

}  // namespace detail

// Exact quotient a / b in Z[x]. Throws std::logic_error when the division is
// not exact — callers use it only where exactness is guaranteed.
inline Polynomial poly_divexact(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw std::invalid_argument("poly_divexact: divide by zero");
    if (a.is_zero()) return a;
    std::vector<Int> rem = a.coeffs();
    const int db = b.degree();
    if (a.degree() < db) throw std::logic_error("poly_divexact: not divisible");
    std::vector<Int> quot(static_cast<std::size_t>(a.degree() - db) + 1);

    for (int dr = a.degree(); dr >= db; --dr) {
        const Int& lead = rem[static_cast<std::size_t>(dr)];
        if (lead == 0) continue;
        if (!mpz_divisible_p(lead.get_mpz_t(), b.leading().get_mpz_t()))
            throw std::logic_error("poly_divexact: not divisible");
        const Int q = lead / b.leading();
        const int shift = dr - db;
        quot[static_cast<std::size_t>(shift)] = q;
        for (int i = 0; i <= db; ++i)
            rem[static_cast<std::size_t>(i + shift)] -= q * b.coeffs()[i];
    }
    for (const Int& v : rem)
        if (v != 0) throw std::logic_error("poly_divexact: nonzero remainder");
    return Polynomial(std::move(quot));
}

// Primitive gcd with positive leading coefficient, via pseudo-remainders.
inline Polynomial poly_gcd(Polynomial a, Polynomial b) {
    a = detail::primitive_part(a);
    b = detail::primitive_part(b);
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        Polynomial r = detail::primitive_part(detail::pseudo_remainder(a, b));
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.is_zero() && sign_of(a.leading()) < 0) a = -a;
    return a;
}

// p divided by gcd(p, p'): same roots, all simple. Primitive by construction.
inline Polynomial square_free_part(const Polynomial& p) {
    if (p.is_zero())
        throw std::domain_error("square_free_part: zero polynomial");
    if (p.degree() == 0) return Polynomial{Int(1)};
    const Polynomial pp = detail::primitive_part(p);
    const Polynomial g = poly_gcd(pp, pp.derivative());
    if (g.degree() == 0) return pp;
    return poly_divexact(pp, g);
}

// Number of distinct real roots, over the whole real line, by a Sturm chain
// on the square-free part. Chain elements are reduced to primitive parts —
// a positive rescaling that leaves sign variation counts intact; the sign
// flip that turns a pseudo-remainder back into a true remainder's sign is
// applied whenever the pseudo-division multiplier is positive.
inline long sturm_distinct_real_roots(const Polynomial& p) {
    if (p.is_zero())
        throw std::domain_error("sturm_distinct_real_roots: zero polynomial");
    const Polynomial q = square_free_part(p);
    if (q.degree() <= 0) return 0;

    std::vector<Polynomial> chain;
    chain.push_back(q);
    chain.push_back(detail::primitive_part(q.derivative()));
    while (!chain.back().is_zero()) {
        const Polynomial& f = chain[chain.size() - 2];
        const Polynomial& g = chain.back();
        const int exponent = f.degree() - g.degree() + 1;
        const bool multiplier_positive =
            sign_of(g.leading()) > 0 || exponent % 2 == 0;
        Polynomial r = detail::pseudo_remainder(f, g);
        if (multiplier_positive) r = -r;
        chain.push_back(detail::primitive_part(r));
    }
    chain.pop_back();

    auto variations = [&](bool at_minus_infinity) {
        int prev = 0, count = 0;
        for (const Polynomial& e : chain) {
            int s = sign_of(e.leading());
            if (at_minus_infinity && e.degree() % 2 == 1) s = -s;
            if (prev != 0 && s != prev) ++count;
            prev = s;
        }
        return count;
    };
    return variations(true) - variations(false);
}

// All roots real (counted without multiplicity): the square-free part has as
// many distinct real roots as its degree.
inline bool is_real_rooted(const Polynomial& p) {
    if (p.is_zero()) throw std::domain_error("is_real_rooted: zero polynomial");
    const Polynomial q = square_free_part(p);
    if (q.degree() <= 0) return true;
    return sturm_distinct_real_roots(q) == q.degree();
}

}  // namespace eulerian
