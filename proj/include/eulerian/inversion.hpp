#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "eulerian/detail.hpp"
#include "eulerian/parallel.hpp"
#include "eulerian/polynomial.hpp"

namespace eulerian {

enum class SRuleKind {
    natural,        // s = (1, 2, 3, ...)
    doubled,        // s = (2, 4, 6, ...)
    paper_i,        // s = (1, 4, 3, 8, 5, 12, ...)
    paper_iprime,   // s = (2, 2, 6, 4, 10, 6, ...)
    halved_iprime,  // s = (1, 1, 3, 2, 5, 3, ...)
    explicit_list,
};

// Rule producing the positive integer sequence s = (s_1, s_2, ...) that
// bounds an inversion sequence: entry e_i ranges over 0 <= e_i < s_i.
class SRule {
public:
    static SRule natural() { return SRule(SRuleKind::natural); }
    static SRule doubled() { return SRule(SRuleKind::doubled); }
    // Odd positions keep their index, even positions double it.
    static SRule paper_i() { return SRule(SRuleKind::paper_i); }
    // Odd positions double their index, even positions keep it.
    static SRule paper_iprime() { return SRule(SRuleKind::paper_iprime); }
    // paper_iprime with every term halved: odd positions keep their index,
    // even positions use half of it.
    static SRule halved_iprime() { return SRule(SRuleKind::halved_iprime); }

    static SRule explicit_list(std::vector<int> values) {
        for (int v : values)
            if (v < 1)
                throw std::invalid_argument(
                    "SRule: explicit terms must be positive");
        SRule r(SRuleKind::explicit_list);
        r.values_ = std::move(values);
        return r;
    }

    SRuleKind kind() const { return kind_; }

    // s_i for 1-based i. Explicit rules throw std::out_of_range past the
    // end of their list.
    int term(int i) const {
        if (i < 1) throw std::invalid_argument("SRule::term: index must be >= 1");
        switch (kind_) {
            case SRuleKind::natural: return i;
            case SRuleKind::doubled: return 2 * i;
            case SRuleKind::paper_i: return i % 2 ? i : 2 * i;
            case SRuleKind::paper_iprime: return i % 2 ? 2 * i : i;
            case SRuleKind::halved_iprime: return i % 2 ? i : i / 2;
            case SRuleKind::explicit_list:
                if (i > static_cast<int>(values_.size()))
                    throw std::out_of_range("SRule::term: past end of explicit list");
                return values_[static_cast<std::size_t>(i) - 1];
        }
        throw std::logic_error("SRule::term: bad kind");
    }

    std::string name() const {
        switch (kind_) {
            case SRuleKind::natural: return "natural";
            case SRuleKind::doubled: return "doubled";
            case SRuleKind::paper_i: return "paper-I";
            case SRuleKind::paper_iprime: return "paper-Iprime";
            case SRuleKind::halved_iprime: return "halved-Iprime";
            case SRuleKind::explicit_list: {
                std::string s = "explicit:";
                for (std::size_t i = 0; i < values_.size(); ++i) {
                    if (i) s += ',';
                    s += std::to_string(values_[i]);
                }
                return s;
            }
        }
        return {};
    }

    static std::optional<SRule> parse(std::string_view text) {
        if (text == "natural") return natural();
        if (text == "doubled") return doubled();
        if (text == "paper-I") return paper_i();
        if (text == "paper-Iprime") return paper_iprime();
        if (text == "halved-Iprime") return halved_iprime();
        constexpr std::string_view prefix = "explicit:";
        if (text.substr(0, prefix.size()) == prefix) {
            std::vector<int> vals;
            std::string_view rest = text.substr(prefix.size());
            while (!rest.empty()) {
                const std::size_t comma = rest.find(',');
                const std::string_view tok = rest.substr(0, comma);
                int v = 0;
                for (char ch : tok) {
                    if (ch < '0' || ch > '9') return std::nullopt;
                    v = v * 10 + (ch - '0');
                    if (v > 1'000'000) return std::nullopt;
                }
                if (tok.empty() || v < 1) return std::nullopt;
                vals.push_back(v);
                if (comma == std::string_view::npos) break;
                rest = rest.substr(comma + 1);
            }
            if (vals.empty()) return std::nullopt;
            return explicit_list(std::move(vals));
        }
        return std::nullopt;
    }

private:
    explicit SRule(SRuleKind kind) : kind_(kind) {}

    SRuleKind kind_;
    std::vector<int> values_;
};

inline bool is_valid_inversion_sequence(std::span<const int> e,
                                        const SRule& rule) {
    for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] < 0 || e[i] >= rule.term(static_cast<int>(i) + 1)) return false;
    return true;
}

namespace detail {

// Lexicographic odometer over entries [fixed, n) of e, bounds taken from s;
// entries [0, fixed) stay as given. Emits e itself before each increment.
template <typename F>
bool run_odometer(std::vector<int>& e, const std::vector<int>& s, int fixed,
                  F&& f) {
    const int n = static_cast<int>(e.size());
    for (;;) {
        if (!keep_going(f, std::span<const int>(e))) return false;
        int i = n - 1;
        while (i >= fixed && e[i] == s[i] - 1) {
            e[i] = 0;
            --i;
        }
        if (i < fixed) return true;
        ++e[i];
    }
}

}  // namespace detail

// Visits every length-n inversion sequence under the rule, in lexicographic
// order, as a std::span<const int>. The callback may return void, or bool
// where false stops the walk; returns false when stopped early.
template <typename F>
bool visit_inversion_sequences(const SRule& rule, int n, F&& f) {
    if (n < 0) throw std::invalid_argument("visit_inversion_sequences: n < 0");
    std::vector<int> e(n, 0), s(n);
    for (int i = 0; i < n; ++i) s[i] = rule.term(i + 1);
    return detail::run_odometer(e, s, 0, f);
}

// Ascent positions i in {0, .., n-1}: e_i/s_i < e_{i+1}/s_{i+1} with the
// sentinel e_0 = 0, s_0 = 1. Compared by exact cross-multiplication; entries
// and bounds fit an int, so the products fit long long with room to spare.
inline std::vector<int> ascent_set(std::span<const int> e, const SRule& rule) {
    std::vector<int> out;
    long long prev_e = 0, prev_s = 1;
    for (std::size_t i = 0; i < e.size(); ++i) {
        const long long si = rule.term(static_cast<int>(i) + 1);
        if (prev_e * si < static_cast<long long>(e[i]) * prev_s)
            out.push_back(static_cast<int>(i));
        prev_e = e[i];
        prev_s = si;
    }
    return out;
}

inline int ascent_number(std::span<const int> e, const SRule& rule) {
    int count = 0;
    long long prev_e = 0, prev_s = 1;
    for (std::size_t i = 0; i < e.size(); ++i) {
        const long long si = rule.term(static_cast<int>(i) + 1);
        if (prev_e * si < static_cast<long long>(e[i]) * prev_s) ++count;
        prev_e = e[i];
        prev_s = si;
    }
    return count;
}

// Sum of n - i over ascent positions i.
inline long long amaj(std::span<const int> e, const SRule& rule) {
    const long long n = static_cast<long long>(e.size());
    long long total = 0;
    for (int i : ascent_set(e, rule)) total += n - i;
    return total;
}

// Sum of the entries.
inline long long weight(std::span<const int> e) {
    long long total = 0;
    for (int v : e) total += v;
    return total;
}

// -weight(e) plus, for each ascent position i, the tail sum s_{i+1}+..+s_n.
inline long long lhp(std::span<const int> e, const SRule& rule) {
    const int n = static_cast<int>(e.size());
    std::vector<long long> tail(static_cast<std::size_t>(n) + 1, 0);
    for (int i = n - 1; i >= 0; --i) tail[i] = tail[i + 1] + rule.term(i + 1);
    long long total = -weight(e);
    for (int i : ascent_set(e, rule)) total += tail[i];
    return total;
}

// Type-D ascent positions for sequences under the doubled rule: positions
// i in {1, .., n-1} with e_i/i < e_{i+1}/(i+1), plus position 0 whenever
// 2 e_1 + e_2 >= 3 (with e_2 read as 0 when n = 1).
inline std::vector<int> ascent_set_d(std::span<const int> e,
                                     const SRule& rule) {
    if (rule.kind() != SRuleKind::doubled)
        throw std::domain_error("ascent_set_d: rule must be doubled");
    std::vector<int> out;
    const int n = static_cast<int>(e.size());
    if (n >= 1) {
        const long long e2 = n >= 2 ? e[1] : 0;
        if (2LL * e[0] + e2 >= 3) out.push_back(0);
    }
    for (int i = 1; i < n; ++i)
        if (static_cast<long long>(e[i - 1]) * (i + 1) <
            static_cast<long long>(e[i]) * i)
            out.push_back(i);
    return out;
}

inline int ascent_number_d(std::span<const int> e, const SRule& rule) {
    return static_cast<int>(ascent_set_d(e, rule).size());
}

enum class AscentStatistic { ascents, type_d_ascents };

// Distribution polynomial of the chosen ascent statistic over all length-n
// sequences under the rule. Sequences are generated lazily; with jobs > 1
// the walk is split by a fixed prefix of the first entries and per-thread
// count tables are summed, so the result never depends on jobs.
inline Polynomial ascent_polynomial(const SRule& rule, int n,
                                    AscentStatistic stat = AscentStatistic::ascents,
                                    int jobs = 1) {
    if (n < 0) throw std::invalid_argument("ascent_polynomial: n < 0");
    if (stat == AscentStatistic::type_d_ascents &&
        rule.kind() != SRuleKind::doubled)
        throw std::domain_error("ascent_polynomial: type-D ascents need the doubled rule");

    std::vector<int> s(n);
    for (int i = 0; i < n; ++i) s[i] = rule.term(i + 1);

    int fixed = 0;
    long tasks = 1;
    if (jobs > 1) {
        const long want = 8L * jobs;
        while (fixed < n && tasks < want) tasks *= s[fixed++];
    }

    auto counts = parallel_fold_counts(
        jobs, tasks, static_cast<std::size_t>(n) + 2,
        [&](long task, std::vector<unsigned long long>& table) {
            std::vector<int> e(n, 0);
            long rem = task;
            for (int i = fixed - 1; i >= 0; --i) {
                e[i] = static_cast<int>(rem % s[i]);
                rem /= s[i];
            }
            if (stat == AscentStatistic::ascents) {
                detail::run_odometer(e, s, fixed, [&](std::span<const int> seq) {
                    int c = 0;
                    long long pe = 0, ps = 1;
                    for (int i = 0; i < n; ++i) {
                        if (pe * s[i] < static_cast<long long>(seq[i]) * ps) ++c;
                        pe = seq[i];
                        ps = s[i];
                    }
                    ++table[c];
                });
            } else {
                detail::run_odometer(e, s, fixed, [&](std::span<const int> seq) {
                    int c = 0;
                    if (n >= 1) {
                        const long long e2 = n >= 2 ? seq[1] : 0;
                        if (2LL * seq[0] + e2 >= 3) ++c;
                    }
                    for (int i = 1; i < n; ++i)
                        if (static_cast<long long>(seq[i - 1]) * (i + 1) <
                            static_cast<long long>(seq[i]) * i)
                            ++c;
                    ++table[c];
                });
            }
        });
    return Polynomial::from_counts(counts);
}

}  // namespace eulerian
