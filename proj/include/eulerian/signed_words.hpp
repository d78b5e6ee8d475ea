#pragma once

#include <algorithm>
#include <bit>
#include <map>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "eulerian/detail.hpp"
#include "eulerian/numeric.hpp"
#include "eulerian/parallel.hpp"
#include "eulerian/polynomial.hpp"

namespace eulerian {

// A signed word: nonzero integers, sign and absolute value per letter.
using SignedWord = std::vector<int>;

// Multiset of positive values with multiplicities; every occurrence of a
// value gets an independent sign unless the value carries a forced sign.
class MultisetSpec {
public:
    MultisetSpec(std::vector<std::pair<int, int>> value_multiplicities,
                 std::map<int, int> forced_signs = {})
        : forced_(std::move(forced_signs)) {
        for (auto [value, mult] : value_multiplicities) {
            if (value < 1)
                throw std::invalid_argument("MultisetSpec: values must be positive");
            if (mult < 1)
                throw std::invalid_argument("MultisetSpec: multiplicities must be positive");
            for (int k = 0; k < mult; ++k) letters_.push_back(value);
        }
        if (letters_.empty())
            throw std::invalid_argument("MultisetSpec: empty multiset");
        std::sort(value_multiplicities.begin(), value_multiplicities.end());
        for (std::size_t i = 1; i < value_multiplicities.size(); ++i)
            if (value_multiplicities[i].first == value_multiplicities[i - 1].first)
                throw std::invalid_argument("MultisetSpec: duplicate value entry");
        std::sort(letters_.begin(), letters_.end());
        for (auto [value, sign] : forced_) {
            if (sign != 1 && sign != -1)
                throw std::invalid_argument("MultisetSpec: forced sign must be +-1");
            if (!std::count(letters_.begin(), letters_.end(), value))
                throw std::invalid_argument("MultisetSpec: forced value not in multiset");
        }
    }

    // {1^2, 2^2, ..., n^2}, all signs free.
    static MultisetSpec p_class(int n) {
        check_n(n);
        std::vector<std::pair<int, int>> vm;
        for (int v = 1; v <= n; ++v) vm.emplace_back(v, 2);
        return MultisetSpec(std::move(vm));
    }

    // {1^2, ..., (n-1)^2, n}, all signs free.
    static MultisetSpec u_class(int n) {
        check_n(n);
        std::vector<std::pair<int, int>> vm;
        for (int v = 1; v < n; ++v) vm.emplace_back(v, 2);
        vm.emplace_back(n, 1);
        return MultisetSpec(std::move(vm));
    }

    // u_class with the largest value forced negative.
    static MultisetSpec v_class(int n) {
        check_n(n);
        std::vector<std::pair<int, int>> vm;
        for (int v = 1; v < n; ++v) vm.emplace_back(v, 2);
        vm.emplace_back(n, 1);
        return MultisetSpec(std::move(vm), {{n, -1}});
    }

    // One entry per occurrence, ascending.
    const std::vector<int>& letters() const { return letters_; }

    // +1 / -1 when forced, 0 when the sign is free.
    int forced_sign(int value) const {
        auto it = forced_.find(value);
        return it == forced_.end() ? 0 : it->second;
    }

    // Number of signed words: distinct arrangements times sign choices.
    Int count() const {
        Int total;
        mpz_fac_ui(total.get_mpz_t(),
                   static_cast<unsigned long>(letters_.size()));
        int free_occurrences = 0;
        std::size_t i = 0;
        while (i < letters_.size()) {
            std::size_t j = i;
            while (j < letters_.size() && letters_[j] == letters_[i]) ++j;
            Int f;
            mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(j - i));
            total /= f;
            if (forced_sign(letters_[i]) == 0)
                free_occurrences += static_cast<int>(j - i);
            i = j;
        }
        return total * pow_int(Int(2), static_cast<unsigned long>(free_occurrences));
    }

private:
    static void check_n(int n) {
        if (n < 1) throw std::invalid_argument("MultisetSpec: n must be >= 1");
    }

    std::vector<int> letters_;
    std::map<int, int> forced_;
};

namespace detail {

// Shared core: arrangements in lexicographic order on absolute values, and
// for each arrangement all sign patterns; bit j of the pattern counter flips
// the j-th unconstrained position (leftmost first), set bit = negative.
// Only arrangements with index congruent to `part` mod `parts` are visited,
// which is how descent_polynomial splits work across threads.
template <typename F>
bool visit_signed_words_part(const MultisetSpec& spec, long parts, long part,
                             F&& f) {
    std::vector<int> arrangement = spec.letters();
    const int m = static_cast<int>(arrangement.size());
    if (m > 62)
        throw std::invalid_argument("visit_signed_words: word too long");
    std::vector<int> word(m);
    std::vector<int> free_pos;
    free_pos.reserve(m);
    long index = 0;
    do {
        if (index++ % parts != part) continue;
        free_pos.clear();
        for (int i = 0; i < m; ++i) {
            const int fs = spec.forced_sign(arrangement[i]);
            word[i] = fs < 0 ? -arrangement[i] : arrangement[i];
            if (fs == 0) free_pos.push_back(i);
        }
        const int u = static_cast<int>(free_pos.size());
        const unsigned long long patterns = 1ULL << u;
        for (unsigned long long c = 0; c < patterns; ++c) {
            for (int j = 0; j < u; ++j) {
                const int p = free_pos[j];
                word[p] = (c >> j) & 1 ? -arrangement[p] : arrangement[p];
            }
            if (!keep_going(f, std::span<const int>(word))) return false;
        }
    } while (std::next_permutation(arrangement.begin(), arrangement.end()));
    return true;
}

template <typename F>
bool visit_even_signed_part(int n, long parts, long part, F&& f) {
    if (n < 1)
        throw std::invalid_argument("visit_even_signed: n must be >= 1");
    if (n > 62)
        throw std::invalid_argument("visit_even_signed: n too large");
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i + 1;
    std::vector<int> word(n);
    long index = 0;
    do {
        if (index++ % parts != part) continue;
        const unsigned long long patterns = 1ULL << n;
        for (unsigned long long c = 0; c < patterns; ++c) {
            if (std::popcount(c) & 1) continue;
            for (int j = 0; j < n; ++j)
                word[j] = (c >> j) & 1 ? -perm[j] : perm[j];
            if (!keep_going(f, std::span<const int>(word))) return false;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return true;
}

}  // namespace detail

// Visits every signed arrangement of the multiset: arrangements of absolute
// values in lexicographic order, each with all sign patterns on the
// unconstrained occurrences (first such position flips fastest, negative on
// a set bit). Callback semantics as in visit_inversion_sequences.
template <typename F>
bool visit_signed_words(const MultisetSpec& spec, F&& f) {
    return detail::visit_signed_words_part(spec, 1, 0, f);
}

// Visits the even-signed permutations of {1..n}: permutations in
// lexicographic order, each with all sign patterns carrying an even number
// of minus signs.
template <typename F>
bool visit_even_signed(int n, F&& f) {
    return detail::visit_even_signed_part(n, 1, 0, f);
}

// Type-B descent positions: i in {1, .., n-1} with w_i > w_{i+1}, plus n
// when the last letter is positive. Positions are 1-based.
inline std::vector<int> des_b_set(std::span<const int> word) {
    if (word.empty()) throw std::domain_error("des_b_set: empty word");
    std::vector<int> out;
    const int n = static_cast<int>(word.size());
    for (int i = 1; i < n; ++i)
        if (word[i - 1] > word[i]) out.push_back(i);
    if (word[n - 1] > 0) out.push_back(n);
    return out;
}

inline int des_b(std::span<const int> word) {
    if (word.empty()) throw std::domain_error("des_b: empty word");
    const int n = static_cast<int>(word.size());
    int count = word[n - 1] > 0 ? 1 : 0;
    for (int i = 1; i < n; ++i)
        if (word[i - 1] > word[i]) ++count;
    return count;
}

// Variant convention: counts i with w_i > w_{i+1}, plus one when the first
// letter is negative.
inline int des_alt(std::span<const int> word) {
    if (word.empty()) throw std::domain_error("des_alt: empty word");
    const int n = static_cast<int>(word.size());
    int count = word[0] < 0 ? 1 : 0;
    for (int i = 1; i < n; ++i)
        if (word[i - 1] > word[i]) ++count;
    return count;
}

// w_1 .. w_n  ->  -w_n .. -w_1. Carries des_alt to des_b and back.
inline SignedWord reverse_negate(std::span<const int> word) {
    SignedWord out(word.size());
    for (std::size_t i = 0; i < word.size(); ++i)
        out[i] = -word[word.size() - 1 - i];
    return out;
}

// Type-D descents for an even-signed permutation: i with w_i > w_{i+1},
// plus position 0 when w_1 + w_2 < 0.
inline int des_d(std::span<const int> word) {
    if (word.empty()) throw std::domain_error("des_d: empty word");
    int negatives = 0;
    for (int v : word)
        if (v < 0) ++negatives;
    if (negatives % 2)
        throw std::domain_error("des_d: odd number of negative letters");
    const int n = static_cast<int>(word.size());
    int count = n >= 2 && word[0] + word[1] < 0 ? 1 : 0;
    for (int i = 1; i < n; ++i)
        if (word[i - 1] > word[i]) ++count;
    return count;
}

enum class SignedFamily { p, u, v, d };

// Distribution polynomial of the family's descent statistic: des_b over the
// p/u/v multiset classes, des_d over even-signed permutations. Work splits
// across threads by arrangement index; counts merge by addition, so jobs
// never affects the result.
inline Polynomial descent_polynomial(SignedFamily family, int n, int jobs = 1) {
    if (n < 1)
        throw std::invalid_argument("descent_polynomial: n must be >= 1");
    const long parts = jobs <= 1 ? 1 : 4L * jobs;

    if (family == SignedFamily::d) {
        auto counts = parallel_fold_counts(
            jobs, parts, static_cast<std::size_t>(n) + 2,
            [&](long task, std::vector<unsigned long long>& table) {
                detail::visit_even_signed_part(
                    n, parts, task,
                    [&](std::span<const int> w) { ++table[des_d(w)]; });
            });
        return Polynomial::from_counts(counts);
    }

    const MultisetSpec spec = family == SignedFamily::p ? MultisetSpec::p_class(n)
                              : family == SignedFamily::u
                                  ? MultisetSpec::u_class(n)
                                  : MultisetSpec::v_class(n);
    const std::size_t m = spec.letters().size();
    auto counts = parallel_fold_counts(
        jobs, parts, m + 2,
        [&](long task, std::vector<unsigned long long>& table) {
            detail::visit_signed_words_part(
                spec, parts, task,
                [&](std::span<const int> w) { ++table[des_b(w)]; });
        });
    return Polynomial::from_counts(counts);
}

}  // namespace eulerian
