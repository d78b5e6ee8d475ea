#pragma once

#include <algorithm>
#include <chrono>
#include <functional>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "eulerian/families.hpp"
#include "eulerian/forest.hpp"
#include "eulerian/inversion.hpp"
#include "eulerian/polynomial.hpp"
#include "eulerian/ppartition.hpp"
#include "eulerian/series.hpp"
#include "eulerian/signed_words.hpp"
#include "eulerian/sturm.hpp"

namespace eulerian {

struct VerificationReport {
    std::string identity;        // which identity was checked
    std::string params;          // instance parameters, e.g. "n=3"
    bool pass = false;
    std::string counterexample;  // empty on pass; both sides on fail
    double elapsed_ms = 0.0;
    unsigned long long objects = 0;  // objects enumerated / points compared
};

using ReportSink = std::function<void(const VerificationReport&)>;

enum class Suite { conj327, thm31, thm33, ppartition, series, realroots, all };

inline std::optional<Suite> parse_suite(std::string_view s) {
    if (s == "conj327") return Suite::conj327;
    if (s == "thm31") return Suite::thm31;
    if (s == "thm33") return Suite::thm33;
    if (s == "ppartition") return Suite::ppartition;
    if (s == "series") return Suite::series;
    if (s == "realroots") return Suite::realroots;
    if (s == "all") return Suite::all;
    return std::nullopt;
}

struct VerifyOptions {
    int n_max = -1;       // -1: per-check defaults
    long truncation = -1; // -1: per-check defaults
    int jobs = 1;
    bool allow_huge = false;
};

// Times individual checks and forwards their reports to the sink.
class CheckRunner {
public:
    struct Outcome {
        bool ok = true;
        std::string counterexample;
        unsigned long long objects = 0;
    };

    CheckRunner(VerifyOptions opts, ReportSink sink)
        : opts_(std::move(opts)), sink_(std::move(sink)) {}

    const VerifyOptions& options() const { return opts_; }
    bool all_pass() const { return all_pass_; }

    template <typename Fn>
    void run(std::string identity, std::string params, Fn&& fn) {
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome = fn();
        const auto stop = std::chrono::steady_clock::now();
        VerificationReport report{
            std::move(identity),
            std::move(params),
            outcome.ok,
            outcome.ok ? std::string() : std::move(outcome.counterexample),
            std::chrono::duration<double, std::milli>(stop - start).count(),
            outcome.objects};
        all_pass_ = all_pass_ && report.pass;
        if (sink_) sink_(report);
    }

    // Effective upper bound for a check with a per-check default, honoring
    // --n-max and the feasibility cap (beyond it needs --allow-huge).
    int bound(int check_default, int cap) const {
        const int n_eff = opts_.n_max < 0 ? check_default : opts_.n_max;
        if (n_eff > cap && !opts_.allow_huge)
            throw std::invalid_argument(
                "verify: n-max above " + std::to_string(cap) +
                " for this suite requires --allow-huge");
        return n_eff;
    }

    long truncation(long check_default) const {
        return opts_.truncation < 0 ? check_default : opts_.truncation;
    }

private:
    VerifyOptions opts_;
    ReportSink sink_;
    bool all_pass_ = true;
};

namespace detail {

inline unsigned long long clamp_count(const Int& v) {
    return v.fits_ulong_p() ? v.get_ui() : ~0ULL;
}

inline CheckRunner::Outcome compare_polys(std::string_view lhs_name,
                                          const Polynomial& lhs,
                                          std::string_view rhs_name,
                                          const Polynomial& rhs) {
    CheckRunner::Outcome out;
    out.objects = clamp_count(lhs(Int(1))) + clamp_count(rhs(Int(1)));
    if (lhs != rhs) {
        std::ostringstream os;
        os << lhs_name << " = " << lhs << " vs " << rhs_name << " = " << rhs;
        out.ok = false;
        out.counterexample = os.str();
    }
    return out;
}

// All plane forests with exactly `pairs` vertices, as parenthesis strings:
// a forest is a first tree of every size k followed by every smaller forest.
inline std::vector<std::string> all_forest_strings(int pairs) {
    if (pairs == 0) return {std::string()};
    std::vector<std::string> out;
    for (int k = 1; k <= pairs; ++k)
        for (const std::string& tree : all_forest_strings(k - 1))
            for (const std::string& rest : all_forest_strings(pairs - k))
                out.push_back("(" + tree + ")" + rest);
    return out;
}

inline PlaneForest random_forest(std::mt19937& rng, int vertices) {
    PlaneForest f;
    for (int v = 0; v < vertices; ++v) {
        std::uniform_int_distribution<int> pick(0, v);  // v itself = new root
        const int p = pick(rng);
        if (p == v)
            f.add_root();
        else
            f.add_child(p);
    }
    return f;
}

inline SignedLabeling random_labeling(std::mt19937& rng, int vertices) {
    std::vector<int> magnitudes(static_cast<std::size_t>(vertices));
    for (int i = 0; i < vertices; ++i) magnitudes[i] = i + 1;
    std::shuffle(magnitudes.begin(), magnitudes.end(), rng);
    SignedLabeling w;
    w.labels.resize(static_cast<std::size_t>(vertices));
    std::uniform_int_distribution<int> coin(0, 1);
    for (int i = 0; i < vertices; ++i)
        w.labels[i] = coin(rng) ? -magnitudes[i] : magnitudes[i];
    return w;
}

inline std::string word_text(std::span<const int> w) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) os << ',';
        os << w[i];
    }
    os << ')';
    return os.str();
}

}  // namespace detail

namespace checks {

// Descent distribution over the P multiset class against the ascent
// distribution of paper-I sequences of twice the length.
inline void equidistribution_p_i(CheckRunner& r) {
    const int n_max = r.bound(4, 4);
    for (int n = 1; n <= n_max; ++n)
        r.run("P=I(2n)", "n=" + std::to_string(n), [&] {
            const Polynomial lhs =
                descent_polynomial(SignedFamily::p, n, r.options().jobs);
            const Polynomial rhs = ascent_polynomial(
                SRule::paper_i(), 2 * n, AscentStatistic::ascents,
                r.options().jobs);
            return detail::compare_polys("P", lhs, "I(2n)", rhs);
        });
}

// V multiset class against paper-I sequences of odd length 2n-1.
inline void equidistribution_v(CheckRunner& r) {
    const int n_max = r.bound(4, 4);
    for (int n = 1; n <= n_max; ++n)
        r.run("V=I(2n-1)", "n=" + std::to_string(n), [&] {
            const Polynomial lhs =
                descent_polynomial(SignedFamily::v, n, r.options().jobs);
            const Polynomial rhs = ascent_polynomial(
                SRule::paper_i(), 2 * n - 1, AscentStatistic::ascents,
                r.options().jobs);
            return detail::compare_polys("V", lhs, "I(2n-1)", rhs);
        });
}

// P and U classes against paper-Iprime sequences.
inline void equidistribution_p_u_iprime(CheckRunner& r) {
    const int n_max = r.bound(4, 4);
    for (int n = 1; n <= n_max; ++n) {
        r.run("P=Iprime(2n)", "n=" + std::to_string(n), [&] {
            const Polynomial lhs =
                descent_polynomial(SignedFamily::p, n, r.options().jobs);
            const Polynomial rhs = ascent_polynomial(
                SRule::paper_iprime(), 2 * n, AscentStatistic::ascents,
                r.options().jobs);
            return detail::compare_polys("P", lhs, "Iprime(2n)", rhs);
        });
        r.run("U=Iprime(2n-1)", "n=" + std::to_string(n), [&] {
            const Polynomial lhs =
                descent_polynomial(SignedFamily::u, n, r.options().jobs);
            const Polynomial rhs = ascent_polynomial(
                SRule::paper_iprime(), 2 * n - 1, AscentStatistic::ascents,
                r.options().jobs);
            return detail::compare_polys("U", lhs, "Iprime(2n-1)", rhs);
        });
    }
}

// The type-D family: frozen n=3 coefficients, and T_n against twice the
// even-signed descent polynomial.
inline void type_d(CheckRunner& r) {
    r.run("T3-value", "n=3", [&] {
        const Polynomial t3 = ascent_polynomial(
            SRule::doubled(), 3, AscentStatistic::type_d_ascents,
            r.options().jobs);
        return detail::compare_polys("T(3)", t3, "expected",
                                     Polynomial{2, 22, 22, 2});
    });
    const int n_max = r.bound(5, 8);
    for (int n = 1; n <= n_max; ++n)
        r.run("T=2D", "n=" + std::to_string(n), [&] {
            const Polynomial lhs = ascent_polynomial(
                SRule::doubled(), n, AscentStatistic::type_d_ascents,
                r.options().jobs);
            const Polynomial rhs =
                Int(2) * descent_polynomial(SignedFamily::d, n, r.options().jobs);
            return detail::compare_polys("T", lhs, "2*D", rhs);
        });
}

// The label-pair collapse: sign- and descent-preserving bijection from
// labeled extensions of the pair forest onto the P multiset class.
inline void label_collapse(CheckRunner& r) {
    const int n_max = r.bound(3, 4);
    for (int n = 1; n <= n_max; ++n) {
        r.run("label-collapse", "n=" + std::to_string(n), [&] {
            CheckRunner::Outcome out;
            const PlaneForest forest = PlaneForest::pair_forest(n);
            std::vector<SignedWord> collapsed;
            bool preserved = true;
            std::string bad;
            visit_labelings(
                ForestLabelFamily::pair_types, n, [&](const SignedLabeling& w) {
                    visit_labeled_extensions(
                        forest, w, [&](std::span<const int> word) {
                            SignedWord image = collapse_label_pairs(word);
                            if (des_b(word) != des_b(image)) {
                                preserved = false;
                                bad = "descents differ at " +
                                      detail::word_text(word) + " -> " +
                                      detail::word_text(image);
                            }
                            for (std::size_t j = 0; j < image.size(); ++j)
                                if ((word[j] < 0) != (image[j] < 0)) {
                                    preserved = false;
                                    bad = "sign flip at " + detail::word_text(word);
                                }
                            collapsed.push_back(std::move(image));
                        });
                });
            std::vector<SignedWord> target;
            visit_signed_words(MultisetSpec::p_class(n),
                               [&](std::span<const int> word) {
                                   target.emplace_back(word.begin(), word.end());
                               });
            out.objects = collapsed.size() + target.size();
            std::sort(collapsed.begin(), collapsed.end());
            std::sort(target.begin(), target.end());
            if (!preserved) {
                out.ok = false;
                out.counterexample = bad;
            } else if (collapsed != target) {
                out.ok = false;
                out.counterexample =
                    "collapsed words are not the P multiset class (" +
                    std::to_string(collapsed.size()) + " vs " +
                    std::to_string(target.size()) + " words)";
            }
            return out;
        });
        r.run("F=P", "n=" + std::to_string(n), [&] {
            const Polynomial lhs = forest_descent_polynomial(
                ForestLabelFamily::pair_types, n, r.options().jobs);
            const Polynomial rhs =
                descent_polynomial(SignedFamily::p, n, r.options().jobs);
            return detail::compare_polys("F", lhs, "P", rhs);
        });
    }
}

namespace detail_forest {

// One forest/labeling instance of the partition generating function check:
// sum of x^des_b over labeled extensions, divided by (1-x)^{V+1}, must match
// the partition counts coefficientwise; each extension's own series must
// match its compatible-map counts, with the direct search agreeing with the
// closed form on a prefix.
inline bool forest_series_instance(const PlaneForest& forest,
                                   const SignedLabeling& w, long T,
                                   int oracle_t_max, std::string& why,
                                   unsigned long long& objects) {
    const int m = forest.vertex_count();
    std::vector<unsigned long long> des_counts(static_cast<std::size_t>(m) + 2,
                                               0);
    bool ok = true;
    visit_labeled_extensions(forest, w, [&](std::span<const int> word) {
        ++objects;
        ++des_counts[des_b(word)];
        const int d = des_b(word);
        // per-extension series: C(m + t - d, m) vs x^d / (1-x)^{m+1}
        const std::vector<Int> expanded =
            expand_rational(Polynomial::monomial(d), m + 1, T);
        for (long t = 0; t <= T && ok; ++t)
            if (compatible_count(word, static_cast<int>(t)) !=
                expanded[static_cast<std::size_t>(t)]) {
                ok = false;
                why = "extension series mismatch at " +
                      eulerian::detail::word_text(word) +
                      ", t=" + std::to_string(t);
            }
        for (int t = 0; t <= oracle_t_max && ok; ++t)
            if (Int(static_cast<unsigned long>(
                    compatible_count_bruteforce(word, t))) !=
                compatible_count(word, t)) {
                ok = false;
                why = "compatible-map count mismatch at " +
                      eulerian::detail::word_text(word) +
                      ", t=" + std::to_string(t);
            }
        return ok;
    });
    if (!ok) return false;

    const Polynomial numerator = Polynomial::from_counts(des_counts);
    const std::vector<Int> series = expand_rational(numerator, m + 1, T);
    for (long t = 0; t <= T; ++t) {
        const Int direct = partition_count(forest, w, static_cast<int>(t));
        if (direct != series[static_cast<std::size_t>(t)]) {
            std::ostringstream os;
            os << "partition count " << direct.get_str() << " vs series "
               << series[static_cast<std::size_t>(t)].get_str() << " at t=" << t
               << ", labels " << eulerian::detail::word_text(w.labels);
            why = os.str();
            return false;
        }
        ++objects;
    }
    return true;
}

}  // namespace detail_forest

// Partition generating functions over the pair-forest label family and over
// random forests with random labelings.
inline void forest_series(CheckRunner& r) {
    const int n_max = r.bound(3, 4);
    const long T = r.truncation(12);
    for (int n = 1; n <= n_max; ++n)
        r.run("forest-series", "n=" + std::to_string(n), [&] {
            CheckRunner::Outcome out;
            const PlaneForest forest = PlaneForest::pair_forest(n);
            const int oracle_t = n <= 2 ? static_cast<int>(T) : 4;
            visit_labelings(
                ForestLabelFamily::pair_types, n,
                [&](const SignedLabeling& w) {
                    if (!out.ok) return false;
                    if (!detail_forest::forest_series_instance(
                            forest, w, T, oracle_t, out.counterexample,
                            out.objects))
                        out.ok = false;
                    return out.ok;
                });
            return out;
        });

    r.run("forest-series-random", "50 forests, <=6 vertices", [&] {
        CheckRunner::Outcome out;
        std::mt19937 rng(20260819);
        for (int trial = 0; trial < 50 && out.ok; ++trial) {
            std::uniform_int_distribution<int> size(1, 6);
            const PlaneForest forest = detail::random_forest(rng, size(rng));
            const SignedLabeling w =
                detail::random_labeling(rng, forest.vertex_count());
            if (!detail_forest::forest_series_instance(
                    forest, w, T, 4, out.counterexample, out.objects))
                out.ok = false;
        }
        return out;
    });
}

// Every valid value map selects exactly one linear extension, the one its
// sorted order induces.
inline void decomposition(CheckRunner& r) {
    auto check_instance = [](const PlaneForest& forest, const SignedLabeling& w,
                             int t, CheckRunner::Outcome& out) {
        std::vector<std::vector<int>> extensions;
        visit_linear_extensions(forest, [&](std::span<const int> vs) {
            extensions.emplace_back(vs.begin(), vs.end());
        });
        const int m = forest.vertex_count();
        std::vector<int> f(static_cast<std::size_t>(m), 0);
        std::vector<int> g(static_cast<std::size_t>(m));
        SignedWord word(static_cast<std::size_t>(m));
        for (;;) {
            if (is_partition(forest, w, f)) {
                ++out.objects;
                int matches = 0;
                const std::vector<int>* match = nullptr;
                for (const auto& ext : extensions) {
                    for (int j = 0; j < m; ++j) {
                        g[j] = f[ext[j]];
                        word[j] = w.labels[ext[j]];
                    }
                    if (is_compatible(word, g)) {
                        ++matches;
                        match = &ext;
                    }
                }
                const Decomposition dec = decompose(forest, w, f);
                if (matches != 1) {
                    out.ok = false;
                    out.counterexample =
                        "map " + detail::word_text(f) + " on labels " +
                        detail::word_text(w.labels) + " is compatible with " +
                        std::to_string(matches) + " extensions";
                    return;
                }
                if (dec.vertices != *match) {
                    out.ok = false;
                    out.counterexample =
                        "decompose picked a different extension for " +
                        detail::word_text(f);
                    return;
                }
            }
            int i = m - 1;
            while (i >= 0 && f[i] == t) {
                f[i] = 0;
                --i;
            }
            if (i < 0) return;
            ++f[i];
        }
    };

    const int n_max = std::min(r.bound(2, 4), 2);
    for (int n = 1; n <= n_max; ++n)
        r.run("decomposition", "n=" + std::to_string(n) + ", values<=4", [&] {
            CheckRunner::Outcome out;
            visit_labelings(ForestLabelFamily::pair_types, n,
                            [&](const SignedLabeling& w) {
                                if (!out.ok) return false;
                                check_instance(PlaneForest::pair_forest(n), w, 4,
                                               out);
                                return out.ok;
                            });
            return out;
        });

    r.run("decomposition-random", "50 forests, <=5 vertices, values<=4", [&] {
        CheckRunner::Outcome out;
        std::mt19937 rng(493827156);
        for (int trial = 0; trial < 50 && out.ok; ++trial) {
            std::uniform_int_distribution<int> size(1, 5);
            const PlaneForest forest = detail::random_forest(rng, size(rng));
            const SignedLabeling w =
                detail::random_labeling(rng, forest.vertex_count());
            check_instance(forest, w, 4, out);
        }
        return out;
    });
}

// Closed-form partition counts on the building-block trees, plus the dynamic
// program against the brute-force count on every small forest shape.
inline void order_count_forms(CheckRunner& r) {
    r.run("order-count-pair-tree", "i<=3, t<=10", [&] {
        CheckRunner::Outcome out;
        for (int i = 1; i <= 3 && out.ok; ++i) {
            PlaneForest tree;
            const int root = tree.add_root();
            tree.add_child(root);
            Int sum_check(0);
            for (int t = 0; t <= 10 && out.ok; ++t) {
                Int total(0);
                for (int type = 1; type <= 4; ++type) {
                    const auto [ru, rv] = pair_tree_labels(i, type);
                    SignedLabeling w;
                    w.labels = {ru, rv};
                    const Int got = partition_count(tree, w, t);
                    const Int expected =
                        type == 4 ? binomial(t + 2, 2) : binomial(t + 1, 2);
                    ++out.objects;
                    if (got != expected) {
                        out.ok = false;
                        out.counterexample =
                            "pair tree type " + std::to_string(type) +
                            ", i=" + std::to_string(i) + ", t=" +
                            std::to_string(t) + ": " + got.get_str() + " vs " +
                            expected.get_str();
                        break;
                    }
                    total += got;
                }
                if (out.ok && total != Int(t + 1) * Int(2 * t + 1)) {
                    out.ok = false;
                    out.counterexample =
                        "pair tree total at t=" + std::to_string(t) + ": " +
                        total.get_str();
                }
                sum_check += total;
            }
        }
        return out;
    });

    r.run("order-count-singleton", "t<=10", [&] {
        CheckRunner::Outcome out;
        for (int magnitude : {1, 5}) {
            PlaneForest single;
            single.add_root();
            for (int t = 0; t <= 10 && out.ok; ++t) {
                SignedLabeling pos, neg;
                pos.labels = {magnitude};
                neg.labels = {-magnitude};
                const Int got_pos = partition_count(single, pos, t);
                const Int got_neg = partition_count(single, neg, t);
                out.objects += 2;
                if (got_pos != Int(t) || got_neg != Int(t + 1)) {
                    out.ok = false;
                    out.counterexample =
                        "singleton at t=" + std::to_string(t) + ": " +
                        got_pos.get_str() + " / " + got_neg.get_str();
                }
            }
        }
        return out;
    });

    r.run("order-count-oracle", "all forests <=6 vertices, 200 labelings, t<=4",
          [&] {
              CheckRunner::Outcome out;
              std::vector<PlaneForest> forests;
              for (int k = 1; k <= 6; ++k)
                  for (const std::string& s : detail::all_forest_strings(k))
                      forests.push_back(PlaneForest::parse(s));
              std::mt19937 rng(87654321);
              for (int trial = 0; trial < 200 && out.ok; ++trial) {
                  const PlaneForest& forest = forests[trial % forests.size()];
                  const SignedLabeling w =
                      detail::random_labeling(rng, forest.vertex_count());
                  for (int t = 0; t <= 4 && out.ok; ++t) {
                      const Int dp = partition_count(forest, w, t);
                      const unsigned long long direct =
                          partition_count_bruteforce(forest, w, t);
                      ++out.objects;
                      if (dp != Int(static_cast<unsigned long>(direct))) {
                          out.ok = false;
                          out.counterexample =
                              "forest " + forest.to_string() + ", labels " +
                              detail::word_text(w.labels) +
                              ", t=" + std::to_string(t) + ": dp " +
                              dp.get_str() + " vs direct " +
                              std::to_string(direct);
                      }
                  }
              }
              return out;
          });
}

// The two descent conventions agree through reverse-negate, letter by letter
// and in distribution over the sign-closed classes.
inline void descent_conventions(CheckRunner& r) {
    const int n_max = std::min(r.bound(3, 4), 3);
    for (int n = 1; n <= n_max; ++n)
        r.run("descent-conventions", "n=" + std::to_string(n), [&] {
            CheckRunner::Outcome out;
            for (const SignedFamily family : {SignedFamily::p, SignedFamily::u}) {
                const MultisetSpec spec = family == SignedFamily::p
                                              ? MultisetSpec::p_class(n)
                                              : MultisetSpec::u_class(n);
                std::vector<unsigned long long> alt_counts(
                    spec.letters().size() + 2, 0);
                std::vector<unsigned long long> des_counts(
                    spec.letters().size() + 2, 0);
                visit_signed_words(spec, [&](std::span<const int> word) {
                    ++out.objects;
                    const SignedWord flipped = reverse_negate(word);
                    if (des_alt(word) != des_b(flipped)) {
                        out.ok = false;
                        out.counterexample =
                            "des_alt != des_b(reverse_negate) at " +
                            detail::word_text(word);
                        return false;
                    }
                    ++alt_counts[des_alt(word)];
                    ++des_counts[des_b(word)];
                    return true;
                });
                if (out.ok && Polynomial::from_counts(alt_counts) !=
                                  Polynomial::from_counts(des_counts)) {
                    out.ok = false;
                    out.counterexample =
                        "des_alt and des_b distributions differ on a "
                        "sign-closed class";
                }
                if (!out.ok) break;
            }
            return out;
        });
}

// Series identities: each family's distribution polynomial over its stated
// power of (1-x) against the closed product form, and the summed partition
// counts of the singleton families.
inline void series_identities(CheckRunner& r) {
    const int n_max = r.bound(8, 8);
    for (int n = 1; n <= n_max; ++n)
        r.run("series-I", "n=" + std::to_string(n), [&] {
            CheckRunner::Outcome out;
            const Polynomial num = ascent_polynomial(
                SRule::paper_i(), n, AscentStatistic::ascents, r.options().jobs);
            const ClosedForm form{(n + 1) / 2, n / 2, 0, 1};
            const SeriesCheck sc =
                verify_series_identity(num, n + 1, form, r.options().truncation);
            out.objects = static_cast<unsigned long long>(
                              default_truncation(num, n + 1)) + 1;
            if (!sc.ok) {
                out.ok = false;
                out.counterexample = "t=" + std::to_string(sc.first_fail) +
                                     ": " + sc.lhs.get_str() + " vs " +
                                     sc.rhs.get_str();
            }
            return out;
        });

    for (int n = 1; n <= n_max; ++n)
        r.run("series-Iprime", "n=" + std::to_string(n), [&] {
            CheckRunner::Outcome out;
            const Polynomial num =
                ascent_polynomial(SRule::paper_iprime(), n,
                                  AscentStatistic::ascents, r.options().jobs);
            const ClosedForm form{n / 2, (n + 1) / 2, 0, 1};
            const SeriesCheck sc =
                verify_series_identity(num, n + 1, form, r.options().truncation);
            out.objects = static_cast<unsigned long long>(
                              default_truncation(num, n + 1)) + 1;
            if (!sc.ok) {
                out.ok = false;
                out.counterexample = "t=" + std::to_string(sc.first_fail) +
                                     ": " + sc.lhs.get_str() + " vs " +
                                     sc.rhs.get_str();
            }
            return out;
        });

    const int small_max = std::min(n_max, 4);
    for (int n = 1; n <= small_max; ++n) {
        r.run("series-I-even", "n=" + std::to_string(n), [&] {
            CheckRunner::Outcome out;
            const Polynomial num = ascent_polynomial(
                SRule::paper_i(), 2 * n, AscentStatistic::ascents,
                r.options().jobs);
            const SeriesCheck sc = verify_series_identity(
                num, 2 * n + 1, ClosedForm{n, n, 0, 1}, r.options().truncation);
            out.objects =
                static_cast<unsigned long long>(default_truncation(num, 2 * n + 1)) +
                1;
            if (!sc.ok) {
                out.ok = false;
                out.counterexample = "t=" + std::to_string(sc.first_fail) + ": " +
                                     sc.lhs.get_str() + " vs " + sc.rhs.get_str();
            }
            return out;
        });
        r.run("series-F", "n=" + std::to_string(n), [&] {
            CheckRunner::Outcome out;
            const Polynomial num = forest_descent_polynomial(
                ForestLabelFamily::pair_types, n, r.options().jobs);
            const SeriesCheck sc = verify_series_identity(
                num, 2 * n + 1, ClosedForm{n, n, 0, 1}, r.options().truncation);
            out.objects =
                static_cast<unsigned long long>(default_truncation(num, 2 * n + 1)) +
                1;
            if (!sc.ok) {
                out.ok = false;
                out.counterexample = "t=" + std::to_string(sc.first_fail) + ": " +
                                     sc.lhs.get_str() + " vs " + sc.rhs.get_str();
            }
            return out;
        });
        r.run("series-V", "n=" + std::to_string(n), [&] {
            CheckRunner::Outcome out;
            const Polynomial num =
                descent_polynomial(SignedFamily::v, n, r.options().jobs);
            const SeriesCheck sc = verify_series_identity(
                num, 2 * n, ClosedForm{n, n - 1, 0, 1}, r.options().truncation);
            out.objects =
                static_cast<unsigned long long>(default_truncation(num, 2 * n)) + 1;
            if (!sc.ok) {
                out.ok = false;
                out.counterexample = "t=" + std::to_string(sc.first_fail) + ": " +
                                     sc.lhs.get_str() + " vs " + sc.rhs.get_str();
            }
            return out;
        });
        r.run("order-sum-Fprime", "n=" + std::to_string(n), [&] {
            CheckRunner::Outcome out;
            const long T = r.truncation(12);
            const PlaneForest forest = PlaneForest::pair_forest_with_singleton(n);
            for (long t = 0; t <= T && out.ok; ++t) {
                Int total(0);
                visit_labelings(ForestLabelFamily::forced_singleton, n,
                                [&](const SignedLabeling& w) {
                                    total += partition_count(
                                        forest, w, static_cast<int>(t));
                                    ++out.objects;
                                });
                const Int expected =
                    ClosedForm{n, n - 1, 0, 1}.eval(t);
                if (total != expected) {
                    out.ok = false;
                    out.counterexample = "t=" + std::to_string(t) + ": " +
                                         total.get_str() + " vs " +
                                         expected.get_str();
                }
            }
            return out;
        });
        r.run("order-sum-G", "n=" + std::to_string(n), [&] {
            CheckRunner::Outcome out;
            const long T = r.truncation(12);
            const PlaneForest forest = PlaneForest::pair_forest_with_singleton(n);
            for (long t = 0; t <= T && out.ok; ++t) {
                Int total(0);
                visit_labelings(ForestLabelFamily::free_singleton, n,
                                [&](const SignedLabeling& w) {
                                    total += partition_count(
                                        forest, w, static_cast<int>(t));
                                    ++out.objects;
                                });
                const Int expected =
                    ClosedForm{n - 1, n, 0, 1}.eval(t);
                if (total != expected) {
                    out.ok = false;
                    out.counterexample = "t=" + std::to_string(t) + ": " +
                                         total.get_str() + " vs " +
                                         expected.get_str();
                }
            }
            return out;
        });
    }
}

// Lattice chain counts: the halved rule's closed form, the doubling
// substitution between the halved and full rules, and the chain generating
// function against the ascent distribution for three rules.
inline void chain_counts(CheckRunner& r) {
    const int n_max = std::min(r.bound(5, 8), 5);
    r.run("chain-closed-form", "n<=" + std::to_string(n_max) + ", t<=5", [&] {
        CheckRunner::Outcome out;
        for (int n = 1; n <= n_max && out.ok; ++n)
            for (int t = 0; t <= 5 && out.ok; ++t) {
                const unsigned long long direct =
                    ratio_chain_count(SRule::halved_iprime(), n, t);
                const Int expected =
                    ClosedForm{(n + 1) / 2, 0, n / 2, 1}.eval(t);
                ++out.objects;
                if (Int(static_cast<unsigned long>(direct)) != expected) {
                    out.ok = false;
                    out.counterexample =
                        "n=" + std::to_string(n) + ", t=" + std::to_string(t) +
                        ": " + std::to_string(direct) + " vs " +
                        expected.get_str();
                }
            }
        return out;
    });

    r.run("chain-doubling", "n<=" + std::to_string(n_max) + ", t<=5", [&] {
        CheckRunner::Outcome out;
        for (int n = 1; n <= n_max && out.ok; ++n)
            for (int t = 0; t <= 5 && out.ok; ++t) {
                const unsigned long long full =
                    ratio_chain_count(SRule::paper_iprime(), n, t);
                const unsigned long long halved =
                    ratio_chain_count(SRule::halved_iprime(), n, 2 * t);
                ++out.objects;
                if (full != halved) {
                    out.ok = false;
                    out.counterexample =
                        "n=" + std::to_string(n) + ", t=" + std::to_string(t) +
                        ": " + std::to_string(full) + " vs " +
                        std::to_string(halved);
                }
            }
        return out;
    });

    for (const SRule& rule :
         {SRule::natural(), SRule::paper_i(), SRule::paper_iprime()})
        r.run("chain-series", rule.name() + ", n<=" + std::to_string(n_max) +
                                  ", t<=8",
              [&] {
                  CheckRunner::Outcome out;
                  for (int n = 1; n <= n_max && out.ok; ++n) {
                      if (!verify_ratio_chain_identity(rule, n, 8)) {
                          out.ok = false;
                          out.counterexample = "rule " + rule.name() +
                                               ", n=" + std::to_string(n);
                      }
                      out.objects += 9;
                  }
                  return out;
              });
}

// Real-rootedness of the verified distribution polynomials.
inline void real_rootedness(CheckRunner& r) {
    const int deep = std::min(r.bound(6, 8), 6);
    const int wide = std::min(r.bound(6, 8), 4);
    const std::vector<std::pair<Family, int>> plan = {
        {Family::i, deep},      {Family::iprime, deep}, {Family::t, deep},
        {Family::d, deep},      {Family::p, wide},      {Family::u, wide},
        {Family::v, wide},
    };
    for (const auto& [family, cap] : plan)
        r.run("real-rooted", std::string(family_name(family)) +
                                 ", n<=" + std::to_string(cap),
              [&, fam = family, top = cap] {
                  CheckRunner::Outcome out;
                  for (int n = 1; n <= top && out.ok; ++n) {
                      const Polynomial p =
                          family_polynomial(fam, n, r.options().jobs);
                      ++out.objects;
                      if (!is_real_rooted(p)) {
                          out.ok = false;
                          std::ostringstream os;
                          os << family_name(fam) << " at n=" << n << ": " << p;
                          out.counterexample = os.str();
                      }
                  }
                  return out;
              });
}

}  // namespace checks

// Runs one suite, streaming per-check reports to the sink; true when every
// check passed. Throws std::invalid_argument for infeasible option
// combinations (the CLI maps that to a usage error).
inline bool run_suite(Suite suite, const VerifyOptions& opts,
                      const ReportSink& sink) {
    CheckRunner runner(opts, sink);
    switch (suite) {
        case Suite::conj327:
            checks::equidistribution_p_i(runner);
            break;
        case Suite::thm31:
            checks::equidistribution_v(runner);
            break;
        case Suite::thm33:
            checks::equidistribution_p_u_iprime(runner);
            break;
        case Suite::ppartition:
            checks::label_collapse(runner);
            checks::forest_series(runner);
            checks::decomposition(runner);
            checks::order_count_forms(runner);
            checks::descent_conventions(runner);
            break;
        case Suite::series:
            checks::series_identities(runner);
            checks::chain_counts(runner);
            checks::type_d(runner);
            break;
        case Suite::realroots:
            checks::real_rootedness(runner);
            break;
        case Suite::all:
            checks::equidistribution_p_i(runner);
            checks::equidistribution_v(runner);
            checks::equidistribution_p_u_iprime(runner);
            checks::label_collapse(runner);
            checks::forest_series(runner);
            checks::decomposition(runner);
            checks::order_count_forms(runner);
            checks::descent_conventions(runner);
            checks::series_identities(runner);
            checks::chain_counts(runner);
            checks::type_d(runner);
            checks::real_rootedness(runner);
            break;
    }
    return runner.all_pass();
}

}  // namespace eulerian
