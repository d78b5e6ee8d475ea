#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "eulerian/inversion.hpp"
#include "eulerian/numeric.hpp"
#include "eulerian/polynomial.hpp"

namespace eulerian {

// Coefficients c_0 .. c_T of numerator(x) / (1-x)^m, exactly:
// c_t = sum_j numerator_j * C(t - j + m - 1, m - 1).
inline std::vector<Int> expand_rational(const Polynomial& numerator, int m,
                                        long truncation) {
    if (m < 1) throw std::invalid_argument("expand_rational: m must be >= 1");
    if (truncation < 0)
        throw std::invalid_argument("expand_rational: negative truncation");
    std::vector<Int> out(static_cast<std::size_t>(truncation) + 1);
    for (long t = 0; t <= truncation; ++t) {
        Int c(0);
        const int dmax = std::min<long>(numerator.degree(), t);
        for (int j = 0; j <= dmax; ++j)
            c += numerator.coeff(j) * binomial(t - j + m - 1, m - 1);
        out[static_cast<std::size_t>(t)] = c;
    }
    return out;
}

// Product (T+1)^a (2T+1)^b ((T+2)/2)^c evaluated at T = scale * t. The third
// factor may be a half-integer; eval() demands an integer result.
struct ClosedForm {
    long a = 0;
    long b = 0;
    long c = 0;
    int scale = 1;

    Rat eval_rat(long t) const {
        if (t < 0) throw std::invalid_argument("ClosedForm: t < 0");
        const long T = static_cast<long>(scale) * t;
        Rat r(1);
        r *= Rat(pow_int(Int(T + 1), static_cast<unsigned long>(a)));
        r *= Rat(pow_int(Int(2 * T + 1), static_cast<unsigned long>(b)));
        Rat half = make_rat(T + 2, 2);
        for (long k = 0; k < c; ++k) r *= half;
        return r;
    }

    Int eval(long t) const {
        const Rat r = eval_rat(t);
        if (r.get_den() != 1)
            throw std::domain_error("ClosedForm: value is not an integer");
        return r.get_num();
    }
};

struct SeriesCheck {
    bool ok = true;
    long first_fail = -1;  // smallest t where the sides differ
    Int lhs = 0, rhs = 0;  // the two values there
};

// Enough coefficients to pin the numerator given the pole order.
inline long default_truncation(const Polynomial& numerator, int m) {
    return std::max(0, numerator.degree()) + m + 5;
}

// Does numerator(x)/(1-x)^m agree coefficientwise with the closed form?
// Exact on both sides; truncation < 0 selects the default.
inline SeriesCheck verify_series_identity(const Polynomial& numerator, int m,
                                          const ClosedForm& form,
                                          long truncation = -1) {
    const long T =
        truncation >= 0 ? truncation : default_truncation(numerator, m);
    const std::vector<Int> series = expand_rational(numerator, m, T);
    for (long t = 0; t <= T; ++t) {
        const Int expected = form.eval(t);
        if (series[static_cast<std::size_t>(t)] != expected)
            return {false, t, series[static_cast<std::size_t>(t)], expected};
    }
    return {};
}

// Number of integer sequences 0 <= a_1/s_1 <= a_2/s_2 <= ... <= a_n/s_n <= t,
// counted by depth-first search with exact rational bounds (the lower bound
// at each step is the ceiling of a_{i-1} * s_i / s_{i-1}).
inline unsigned long long ratio_chain_count(const SRule& rule, int n, int t) {
    if (n < 0 || t < 0)
        throw std::invalid_argument("ratio_chain_count: n and t must be >= 0");
    if (n == 0) return 1;
    std::vector<long long> s(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) s[i] = rule.term(i + 1);

    auto rec = [&](auto&& self, int i, long long prev_val,
                   long long prev_s) -> unsigned long long {
        if (i == n) return 1;
        const long long lo = (prev_val * s[i] + prev_s - 1) / prev_s;
        const long long hi = static_cast<long long>(t) * s[i];
        unsigned long long total = 0;
        for (long long v = lo; v <= hi; ++v) total += self(self, i + 1, v, s[i]);
        return total;
    };
    return rec(rec, 0, 0, 1);
}

// Does the chain-count generating function match the ascent distribution?
// For each t <= t_max, ratio_chain_count must equal the coefficient of x^t
// in ascent_polynomial(rule, n) / (1-x)^{n+1}.
inline bool verify_ratio_chain_identity(const SRule& rule, int n, long t_max) {
    if (t_max < 0)
        throw std::invalid_argument("verify_ratio_chain_identity: t_max < 0");
    const Polynomial dist = ascent_polynomial(rule, n);
    const std::vector<Int> series = expand_rational(dist, n + 1, t_max);
    for (long t = 0; t <= t_max; ++t) {
        const unsigned long long direct =
            ratio_chain_count(rule, n, static_cast<int>(t));
        if (Int(static_cast<unsigned long>(direct)) !=
            series[static_cast<std::size_t>(t)])
            return false;
    }
    return true;
}

}  // namespace eulerian
