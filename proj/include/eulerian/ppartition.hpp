#pragma once

#include <algorithm>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "eulerian/forest.hpp"
#include "eulerian/numeric.hpp"
#include "eulerian/signed_words.hpp"

namespace eulerian {

// Is f (nonnegative values by vertex) a valid signed partition of the
// labeled forest? Conditions, for every proper ancestor x of y:
//   f(x) <= f(y), strictly when label(x) < label(y);
// and f(root) >= 1 for every positively labeled root. Checked on all
// comparable pairs directly, not just edges.
inline bool is_partition(const PlaneForest& forest, const SignedLabeling& w,
                         std::span<const int> f) {
    const int n = forest.vertex_count();
    if (static_cast<int>(f.size()) != n ||
        static_cast<int>(w.labels.size()) != n)
        throw std::invalid_argument("is_partition: size mismatch");
    for (int r : forest.roots())
        if (w.labels[r] > 0 && f[r] < 1) return false;
    for (int y = 0; y < n; ++y)
        for (int x = forest.parent(y); x >= 0; x = forest.parent(x)) {
            if (f[x] > f[y]) return false;
            if (f[x] == f[y] && w.labels[x] < w.labels[y]) return false;
        }
    return true;
}

// Number of valid partitions with all values in [0, t], by exhausting every
// value map. Oracle-grade: use only on small instances.
inline unsigned long long partition_count_bruteforce(const PlaneForest& forest,
                                                     const SignedLabeling& w,
                                                     int t) {
    if (t < 0)
        throw std::invalid_argument("partition_count_bruteforce: t < 0");
    const int n = forest.vertex_count();
    std::vector<int> f(static_cast<std::size_t>(n), 0);
    unsigned long long total = 0;
    for (;;) {
        if (is_partition(forest, w, f)) ++total;
        int i = n - 1;
        while (i >= 0 && f[i] == t) {
            f[i] = 0;
            --i;
        }
        if (i < 0) return total;
        ++f[i];
    }
}

// Same count by dynamic programming over the trees: ways[v][a] = fillings of
// v's subtree given f(v) = a, children folded in through suffix sums, one
// factor per component. Values can exceed 64 bits at series-verification
// sizes, hence the big-integer result.
inline Int partition_count(const PlaneForest& forest, const SignedLabeling& w,
                           int t) {
    if (t < 0) throw std::invalid_argument("partition_count: t < 0");
    const int n = forest.vertex_count();
    if (static_cast<int>(w.labels.size()) != n)
        throw std::invalid_argument("partition_count: labeling size mismatch");

    std::vector<std::vector<Int>> ways(static_cast<std::size_t>(n));
    auto solve = [&](auto&& self, int v) -> void {
        ways[v].assign(static_cast<std::size_t>(t) + 1, Int(1));
        for (int c : forest.children(v)) {
            self(self, c);
            const bool strict = w.labels[v] < w.labels[c];
            std::vector<Int> suffix(static_cast<std::size_t>(t) + 2, Int(0));
            for (int b = t; b >= 0; --b) suffix[b] = suffix[b + 1] + ways[c][b];
            for (int a = 0; a <= t; ++a) {
                const int lo = a + (strict ? 1 : 0);
                if (lo > t)
                    ways[v][a] = 0;
                else
                    ways[v][a] *= suffix[lo];
            }
            ways[c].clear();
        }
    };

    Int total(1);
    for (int r : forest.roots()) {
        solve(solve, r);
        Int sum(0);
        for (int a = w.labels[r] > 0 ? 1 : 0; a <= t; ++a) sum += ways[r][a];
        total *= sum;
    }
    return total;
}

namespace detail {

inline void check_word_distinct(std::span<const int> word, const char* who) {
    if (word.empty()) throw std::domain_error(std::string(who) + ": empty word");
    std::vector<int> sorted(word.begin(), word.end());
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (sorted[i] == 0)
            throw std::domain_error(std::string(who) + ": zero letter");
        if (i && sorted[i] == sorted[i - 1])
            throw std::domain_error(std::string(who) + ": repeated letter");
    }
}

}  // namespace detail

// Maps g compatible with the word: g_1 >= g_2 >= ... >= g_n with strict drop
// across each descent (w_i > w_{i+1}), g_1 <= t, g_n >= 1 when the word ends
// positive. This closed form counts them as C(n + t - des_b, n).
inline Int compatible_count(std::span<const int> word, int t) {
    detail::check_word_distinct(word, "compatible_count");
    if (t < 0) throw std::invalid_argument("compatible_count: t < 0");
    const long n = static_cast<long>(word.size());
    return binomial(n + t - des_b(word), n);
}

// The same count by direct search over value assignments. Oracle-grade.
inline unsigned long long compatible_count_bruteforce(std::span<const int> word,
                                                      int t) {
    detail::check_word_distinct(word, "compatible_count_bruteforce");
    if (t < 0)
        throw std::invalid_argument("compatible_count_bruteforce: t < 0");
    const int n = static_cast<int>(word.size());
    auto rec = [&](auto&& self, int i, int hi) -> unsigned long long {
        if (i == n) return 1;
        const int lo = i == n - 1 && word[n - 1] > 0 ? 1 : 0;
        unsigned long long total = 0;
        for (int v = lo; v <= hi; ++v) {
            const bool strict = i + 1 < n && word[i] > word[i + 1];
            total += self(self, i + 1, v - (strict ? 1 : 0));
        }
        return total;
    };
    return rec(rec, 0, t);
}

// Is the value sequence g compatible with the word? Weakly decreasing,
// strictly across each descent, and ending at >= 1 when the word ends
// positive (values are assumed nonnegative).
inline bool is_compatible(std::span<const int> word, std::span<const int> g) {
    if (word.size() != g.size())
        throw std::invalid_argument("is_compatible: size mismatch");
    const int n = static_cast<int>(word.size());
    for (int j = 0; j + 1 < n; ++j) {
        if (g[j] < g[j + 1]) return false;
        if (g[j] == g[j + 1] && word[j] > word[j + 1]) return false;
    }
    if (n > 0 && word[n - 1] > 0 && g[n - 1] < 1) return false;
    return true;
}

// Number of type-B descents at position i or later (1-based), including the
// final-position descent when the word ends positive.
inline int descents_at_or_after(std::span<const int> word, int i) {
    if (word.empty())
        throw std::domain_error("descents_at_or_after: empty word");
    const int n = static_cast<int>(word.size());
    if (i < 1 || i > n)
        throw std::out_of_range("descents_at_or_after: position out of range");
    int count = word[n - 1] > 0 ? 1 : 0;
    for (int j = i; j < n; ++j)
        if (word[j - 1] > word[j]) ++count;
    return count;
}

struct Decomposition {
    SignedWord word;            // labels along the extension
    std::vector<int> vertices;  // the linear extension itself
};

// The unique linear extension whose compatible maps include f: vertices
// sorted by value descending, ties broken by label ascending. The result is
// checked to be a linear extension with f compatible along it; a failure
// there means a broken invariant, not bad input, hence logic_error.
inline Decomposition decompose(const PlaneForest& forest,
                               const SignedLabeling& w,
                               std::span<const int> f) {
    if (!is_partition(forest, w, f))
        throw std::invalid_argument("decompose: f is not a valid partition");
    const int n = forest.vertex_count();

    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (f[a] != f[b]) return f[a] > f[b];
        return w.labels[a] < w.labels[b];
    });

    std::vector<int> pos(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) pos[order[j]] = j;
    for (int v = 0; v < n; ++v) {
        const int p = forest.parent(v);
        if (p >= 0 && pos[p] < pos[v])
            throw std::logic_error("decompose: order is not a linear extension");
    }

    SignedWord word(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) word[j] = w.labels[order[j]];
    for (int j = 0; j + 1 < n; ++j) {
        const int gj = f[order[j]], gk = f[order[j + 1]];
        if (gj < gk || (gj == gk && word[j] > word[j + 1]))
            throw std::logic_error("decompose: values not compatible with the word");
    }
    if (n > 0 && word[n - 1] > 0 && f[order[n - 1]] < 1)
        throw std::logic_error("decompose: positive tail with value 0");

    return {std::move(word), std::move(order)};
}

}  // namespace eulerian
