#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <map>
#include <random>
#include <vector>

#include "testutil.hpp"

using eulerian::Int;
using eulerian::MultisetSpec;
using eulerian::Polynomial;
using eulerian::SignedFamily;
using eulerian::SignedWord;

TEST_CASE("multiset spec validation") {
    REQUIRE_THROWS_AS(MultisetSpec({}), std::invalid_argument);
    REQUIRE_THROWS_AS(MultisetSpec({{0, 1}}), std::invalid_argument);
    REQUIRE_THROWS_AS(MultisetSpec({{1, 0}}), std::invalid_argument);
    REQUIRE_THROWS_AS(MultisetSpec({{1, 1}, {1, 2}}), std::invalid_argument);
    REQUIRE_THROWS_AS(MultisetSpec({{1, 1}}, {{1, 2}}), std::invalid_argument);
    REQUIRE_THROWS_AS(MultisetSpec({{1, 1}}, {{2, -1}}), std::invalid_argument);
    REQUIRE_THROWS_AS(MultisetSpec::p_class(0), std::invalid_argument);

    const MultisetSpec v2 = MultisetSpec::v_class(2);
    REQUIRE(v2.letters() == std::vector<int>{1, 1, 2});
    REQUIRE(v2.forced_sign(2) == -1);
    REQUIRE(v2.forced_sign(1) == 0);
}

TEST_CASE("class cardinalities") {
    // |P_n| = (2n)! * 2^n, |U_n| = (2n-1)!/2^(n-1) * 2^(2n-1), |V_n| = |U_n|/2
    REQUIRE(MultisetSpec::p_class(1).count() == 4);
    REQUIRE(MultisetSpec::p_class(2).count() == 96);
    REQUIRE(MultisetSpec::p_class(4).count() == 645120);
    REQUIRE(MultisetSpec::u_class(1).count() == 2);
    REQUIRE(MultisetSpec::u_class(2).count() == 24);
    REQUIRE(MultisetSpec::v_class(1).count() == 1);
    REQUIRE(MultisetSpec::v_class(2).count() == 12);
    for (int n = 1; n <= 4; ++n) {
        REQUIRE(MultisetSpec::v_class(n).count() * 2 ==
                MultisetSpec::u_class(n).count());
        Int p_expected;
        mpz_fac_ui(p_expected.get_mpz_t(), static_cast<unsigned long>(2 * n));
        p_expected *= eulerian::pow_int(Int(2), static_cast<unsigned long>(n));
        REQUIRE(MultisetSpec::p_class(n).count() == p_expected);
    }
}

TEST_CASE("enumeration order and coverage") {
    std::vector<SignedWord> words;
    eulerian::visit_signed_words(MultisetSpec::p_class(1),
                                 [&](std::span<const int> w) {
                                     words.emplace_back(w.begin(), w.end());
                                 });
    REQUIRE(words == std::vector<SignedWord>{
                         {1, 1}, {-1, 1}, {1, -1}, {-1, -1}});

    words.clear();
    eulerian::visit_signed_words(MultisetSpec::v_class(1),
                                 [&](std::span<const int> w) {
                                     words.emplace_back(w.begin(), w.end());
                                 });
    REQUIRE(words == std::vector<SignedWord>{{-1}});

    // early stop propagates
    int seen = 0;
    REQUIRE_FALSE(eulerian::visit_signed_words(
        MultisetSpec::p_class(2), [&](std::span<const int>) { return ++seen < 5; }));
    REQUIRE(seen == 5);
}

TEST_CASE("emitted words match an independent generator") {
    struct Case {
        MultisetSpec spec;
        std::map<int, int> multiset;
        std::map<int, int> forced;
    };
    const std::vector<Case> cases = {
        {MultisetSpec::p_class(2), {{1, 2}, {2, 2}}, {}},
        {MultisetSpec::u_class(2), {{1, 2}, {2, 1}}, {}},
        {MultisetSpec::v_class(2), {{1, 2}, {2, 1}}, {{2, -1}}},
        {MultisetSpec({{3, 1}, {5, 2}}, {{3, 1}}),
         {{3, 1}, {5, 2}},
         {{3, 1}}},
    };
    for (const Case& c : cases) {
        std::vector<SignedWord> got;
        eulerian::visit_signed_words(c.spec, [&](std::span<const int> w) {
            got.emplace_back(w.begin(), w.end());
        });
        std::vector<SignedWord> expected =
            testutil::ref_signed_words(c.multiset, c.forced);
        REQUIRE(Int(static_cast<unsigned long>(got.size())) == c.spec.count());
        std::sort(got.begin(), got.end());
        std::sort(expected.begin(), expected.end());
        REQUIRE(std::adjacent_find(got.begin(), got.end()) == got.end());
        REQUIRE(got == expected);

        // multiset conservation: absolute values reproduce the spec's letters
        for (const SignedWord& w : got) {
            std::vector<int> absolutes;
            for (int v : w) absolutes.push_back(std::abs(v));
            std::sort(absolutes.begin(), absolutes.end());
            REQUIRE(absolutes == c.spec.letters());
        }
    }
}

TEST_CASE("des_b fixed examples") {
    REQUIRE(eulerian::des_b_set(std::vector<int>{-1, -1}).empty());
    REQUIRE(eulerian::des_b(std::vector<int>{-1, -1}) == 0);
    REQUIRE(eulerian::des_b_set(std::vector<int>{1, 1}) == std::vector<int>{2});
    REQUIRE(eulerian::des_b(std::vector<int>{1, 1}) == 1);
    REQUIRE(eulerian::des_b_set(std::vector<int>{2, -1, 1, -2}) ==
            std::vector<int>{1, 3});
    REQUIRE(eulerian::des_b(std::vector<int>{2, -1, 1, -2}) == 2);
    // all-negative weakly increasing word has no descents
    REQUIRE(eulerian::des_b(std::vector<int>{-3, -2, -2, -1}) == 0);
    REQUIRE_THROWS_AS(eulerian::des_b(std::vector<int>{}), std::domain_error);
    REQUIRE_THROWS_AS(eulerian::des_b_set(std::vector<int>{}),
                      std::domain_error);
}

TEST_CASE("des_alt fixed examples") {
    REQUIRE(eulerian::des_alt(std::vector<int>{-1, -1}) == 1);
    REQUIRE(eulerian::des_alt(std::vector<int>{1, 2, 3}) == 0);
    REQUIRE(eulerian::des_alt(std::vector<int>{2, -1, 1, -2}) == 2);
    REQUIRE(eulerian::des_alt(std::vector<int>{1, 1}) == 0);
    REQUIRE_THROWS_AS(eulerian::des_alt(std::vector<int>{}), std::domain_error);
}

TEST_CASE("reverse_negate") {
    REQUIRE(eulerian::reverse_negate(std::vector<int>{2, -1, 1, -2}) ==
            SignedWord{2, -1, 1, -2});
    REQUIRE(eulerian::reverse_negate(std::vector<int>{1, 1}) ==
            SignedWord{-1, -1});
    REQUIRE(eulerian::reverse_negate(std::vector<int>{-3}) == SignedWord{3});

    std::mt19937 rng(5150);
    std::uniform_int_distribution<int> len(1, 12), letter(1, 9), coin(0, 1);
    for (int trial = 0; trial < 1000; ++trial) {
        SignedWord w(static_cast<std::size_t>(len(rng)));
        for (int& v : w) v = coin(rng) ? -letter(rng) : letter(rng);
        REQUIRE(eulerian::reverse_negate(eulerian::reverse_negate(w)) == w);
    }
}

TEST_CASE("convention equivalence, exhaustive and random") {
    for (int n = 1; n <= 3; ++n)
        for (const MultisetSpec& spec :
             {MultisetSpec::p_class(n), MultisetSpec::u_class(n)})
            eulerian::visit_signed_words(spec, [&](std::span<const int> w) {
                REQUIRE(eulerian::des_alt(w) ==
                        eulerian::des_b(eulerian::reverse_negate(w)));
            });

    std::mt19937 rng(424242);
    std::uniform_int_distribution<int> len(1, 14), letter(1, 6), coin(0, 1);
    for (int trial = 0; trial < 10000; ++trial) {
        SignedWord w(static_cast<std::size_t>(len(rng)));
        for (int& v : w) v = coin(rng) ? -letter(rng) : letter(rng);
        REQUIRE(eulerian::des_alt(w) ==
                eulerian::des_b(eulerian::reverse_negate(w)));
        REQUIRE(eulerian::des_b(w) <= static_cast<int>(w.size()));
    }
}

TEST_CASE("even-signed enumeration") {
    std::vector<SignedWord> words;
    eulerian::visit_even_signed(2, [&](std::span<const int> w) {
        words.emplace_back(w.begin(), w.end());
    });
    REQUIRE(words == std::vector<SignedWord>{
                         {1, 2}, {-1, -2}, {2, 1}, {-2, -1}});

    for (int n = 1; n <= 5; ++n) {
        long long count = 0;
        eulerian::visit_even_signed(n, [&](std::span<const int> w) {
            ++count;
            int negatives = 0;
            for (int v : w)
                if (v < 0) ++negatives;
            REQUIRE(negatives % 2 == 0);
        });
        long long expected = 1;  // n! * 2^(n-1)
        for (int i = 2; i <= n; ++i) expected *= i;
        expected <<= (n - 1);
        REQUIRE(count == expected);
    }
}

TEST_CASE("des_d fixed examples") {
    REQUIRE(eulerian::des_d(std::vector<int>{1, 2}) == 0);
    REQUIRE(eulerian::des_d(std::vector<int>{2, 1}) == 1);
    REQUIRE(eulerian::des_d(std::vector<int>{-1, -2}) == 2);
    REQUIRE(eulerian::des_d(std::vector<int>{-2, -1}) == 1);
    REQUIRE(eulerian::des_d(std::vector<int>{1}) == 0);
    REQUIRE_THROWS_AS(eulerian::des_d(std::vector<int>{-1}), std::domain_error);
    REQUIRE_THROWS_AS(eulerian::des_d(std::vector<int>{}), std::domain_error);
}

TEST_CASE("descent distribution fixed values") {
    REQUIRE(eulerian::descent_polynomial(SignedFamily::p, 1) ==
            Polynomial{1, 3});
    REQUIRE(eulerian::descent_polynomial(SignedFamily::p, 2) ==
            Polynomial{1, 31, 55, 9});
    REQUIRE(eulerian::descent_polynomial(SignedFamily::v, 2) ==
            Polynomial{1, 8, 3});
    REQUIRE(eulerian::descent_polynomial(SignedFamily::u, 1) ==
            Polynomial{1, 1});
    REQUIRE(eulerian::descent_polynomial(SignedFamily::d, 1) == Polynomial{1});
    REQUIRE(eulerian::descent_polynomial(SignedFamily::d, 2) ==
            Polynomial{1, 2, 1});
    REQUIRE_THROWS_AS(eulerian::descent_polynomial(SignedFamily::p, 0),
                      std::invalid_argument);
}

TEST_CASE("distributions agree with the independent generator") {
    for (int n = 1; n <= 2; ++n) {
        std::map<int, int> multiset;
        for (int v = 1; v <= n; ++v) multiset[v] = 2;
        const Polynomial expected = testutil::ref_distribution(
            testutil::ref_signed_words(multiset, {}),
            [](const SignedWord& w) { return eulerian::des_b(w); });
        REQUIRE(eulerian::descent_polynomial(SignedFamily::p, n) == expected);
    }
    std::map<int, int> u3{{1, 2}, {2, 2}, {3, 1}};
    REQUIRE(eulerian::descent_polynomial(SignedFamily::u, 3) ==
            testutil::ref_distribution(testutil::ref_signed_words(u3, {}),
                                       [](const SignedWord& w) {
                                           return eulerian::des_b(w);
                                       }));
    REQUIRE(eulerian::descent_polynomial(SignedFamily::v, 3) ==
            testutil::ref_distribution(
                testutil::ref_signed_words(u3, {{3, -1}}),
                [](const SignedWord& w) { return eulerian::des_b(w); }));
}

TEST_CASE("distribution totals and symmetry") {
    for (int n = 1; n <= 4; ++n) {
        REQUIRE(eulerian::descent_polynomial(SignedFamily::p, n)(Int(1)) ==
                MultisetSpec::p_class(n).count());
        REQUIRE(eulerian::descent_polynomial(SignedFamily::u, n)(Int(1)) ==
                MultisetSpec::u_class(n).count());
        REQUIRE(eulerian::descent_polynomial(SignedFamily::v, n)(Int(1)) ==
                MultisetSpec::v_class(n).count());
    }
    // D distribution is palindromic
    for (int n = 1; n <= 5; ++n) {
        const Polynomial d = eulerian::descent_polynomial(SignedFamily::d, n);
        for (int k = 0; k <= d.degree(); ++k)
            REQUIRE(d.coeff(k) == d.coeff(d.degree() - k));
    }
}

TEST_CASE("jobs never changes the distribution") {
    for (const SignedFamily family :
         {SignedFamily::p, SignedFamily::u, SignedFamily::v, SignedFamily::d})
        for (int jobs : {2, 7})
            REQUIRE(eulerian::descent_polynomial(family, 3, jobs) ==
                    eulerian::descent_polynomial(family, 3));
}
