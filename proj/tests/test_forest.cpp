#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <vector>

#include "testutil.hpp"

using eulerian::ForestLabelFamily;
using eulerian::Int;
using eulerian::PlaneForest;
using eulerian::Polynomial;
using eulerian::SignedLabeling;
using eulerian::SignedWord;

TEST_CASE("parse and to_string round-trip") {
    for (const char* text : {"", "()", "(())", "(()())", "(())(())",
                             "((()))()", "()()()", "((())(()))"}) {
        const PlaneForest f = PlaneForest::parse(text);
        REQUIRE(f.to_string() == text);
    }
    REQUIRE(PlaneForest::parse(" ( ( ) ) ").to_string() == "(())");
    REQUIRE_THROWS_AS(PlaneForest::parse("("), std::invalid_argument);
    REQUIRE_THROWS_AS(PlaneForest::parse(")"), std::invalid_argument);
    REQUIRE_THROWS_AS(PlaneForest::parse("())("), std::invalid_argument);
    REQUIRE_THROWS_AS(PlaneForest::parse("(a)"), std::invalid_argument);
}

TEST_CASE("structure accessors") {
    const PlaneForest f = PlaneForest::parse("(()())()");
    REQUIRE(f.vertex_count() == 4);
    REQUIRE(f.roots() == std::vector<int>{0, 3});
    REQUIRE(f.parent(0) == -1);
    REQUIRE(f.parent(1) == 0);
    REQUIRE(f.parent(2) == 0);
    REQUIRE(f.children(0) == std::vector<int>{1, 2});
    REQUIRE(f.is_proper_ancestor(0, 1));
    REQUIRE_FALSE(f.is_proper_ancestor(1, 0));
    REQUIRE_FALSE(f.is_proper_ancestor(0, 0));
    REQUIRE_FALSE(f.is_proper_ancestor(0, 3));
}

TEST_CASE("structured forests") {
    const PlaneForest f2 = PlaneForest::pair_forest(2);
    REQUIRE(f2.vertex_count() == 4);
    REQUIRE(f2.roots().size() == 2);
    REQUIRE(f2.to_string() == "(())(())");

    REQUIRE(PlaneForest::pair_forest_with_singleton(1).to_string() == "()");
    const PlaneForest fp3 = PlaneForest::pair_forest_with_singleton(3);
    REQUIRE(fp3.vertex_count() == 5);
    REQUIRE(fp3.roots().size() == 3);
    REQUIRE(fp3.to_string() == "(())(())()");

    REQUIRE_THROWS_AS(PlaneForest::pair_forest(-1), std::invalid_argument);
    REQUIRE_THROWS_AS(PlaneForest::pair_forest_with_singleton(0),
                      std::invalid_argument);
}

TEST_CASE("linear extension enumeration order") {
    std::vector<std::vector<int>> exts;
    auto collect = [&](const PlaneForest& f) {
        exts.clear();
        eulerian::visit_linear_extensions(f, [&](std::span<const int> vs) {
            exts.emplace_back(vs.begin(), vs.end());
        });
    };

    collect(PlaneForest::parse("(())"));
    REQUIRE(exts == std::vector<std::vector<int>>{{1, 0}});

    collect(PlaneForest::parse("(()())"));
    REQUIRE(exts == std::vector<std::vector<int>>{{1, 2, 0}, {2, 1, 0}});

    collect(PlaneForest::parse("()"));
    REQUIRE(exts == std::vector<std::vector<int>>{{0}});

    collect(PlaneForest::pair_forest(2));
    REQUIRE(exts == std::vector<std::vector<int>>{{1, 0, 3, 2},
                                                  {1, 3, 0, 2},
                                                  {1, 3, 2, 0},
                                                  {3, 1, 0, 2},
                                                  {3, 1, 2, 0},
                                                  {3, 2, 1, 0}});

    int seen = 0;
    REQUIRE_FALSE(eulerian::visit_linear_extensions(
        PlaneForest::pair_forest(2),
        [&](std::span<const int>) { return ++seen < 2; }));
    REQUIRE(seen == 2);
}

TEST_CASE("extension count matches the closed form on every small forest") {
    for (int k = 1; k <= 6; ++k)
        for (const std::string& text : testutil::all_forest_strings(k)) {
            const PlaneForest f = PlaneForest::parse(text);
            long long count = 0;
            eulerian::visit_linear_extensions(f, [&](std::span<const int> vs) {
                ++count;
                // validity: every vertex once, descendants before ancestors
                REQUIRE(static_cast<int>(vs.size()) == f.vertex_count());
                std::vector<int> pos(vs.size());
                std::set<int> distinct(vs.begin(), vs.end());
                REQUIRE(static_cast<int>(distinct.size()) == f.vertex_count());
                for (std::size_t j = 0; j < vs.size(); ++j) pos[vs[j]] = j;
                for (int v = 0; v < f.vertex_count(); ++v)
                    if (f.parent(v) >= 0) REQUIRE(pos[v] < pos[f.parent(v)]);
            });
            REQUIRE(f.linear_extension_count() ==
                    Int(static_cast<long>(count)));
        }

    // F_n has (2n)!/2^n extensions
    for (int n = 1; n <= 4; ++n) {
        Int expected;
        mpz_fac_ui(expected.get_mpz_t(), static_cast<unsigned long>(2 * n));
        expected /= eulerian::pow_int(Int(2), static_cast<unsigned long>(n));
        REQUIRE(PlaneForest::pair_forest(n).linear_extension_count() ==
                expected);
    }
    REQUIRE(PlaneForest::pair_forest(2).linear_extension_count() == 6);
}

TEST_CASE("pair tree label types") {
    REQUIRE(eulerian::pair_tree_labels(1, 1) == std::pair<int, int>{2, 1});
    REQUIRE(eulerian::pair_tree_labels(1, 2) == std::pair<int, int>{2, -1});
    REQUIRE(eulerian::pair_tree_labels(1, 3) == std::pair<int, int>{-2, 1});
    REQUIRE(eulerian::pair_tree_labels(1, 4) == std::pair<int, int>{-1, -2});
    REQUIRE(eulerian::pair_tree_labels(3, 2) == std::pair<int, int>{6, -5});
    REQUIRE_THROWS_AS(eulerian::pair_tree_labels(1, 0), std::invalid_argument);
    REQUIRE_THROWS_AS(eulerian::pair_tree_labels(1, 5), std::invalid_argument);
    REQUIRE_THROWS_AS(eulerian::pair_tree_labels(0, 1), std::invalid_argument);
}

TEST_CASE("labeling families: counts, validity, order") {
    auto count_labelings = [](ForestLabelFamily family, int n) {
        long long count = 0;
        eulerian::visit_labelings(family, n,
                                  [&](const SignedLabeling&) { ++count; });
        return count;
    };
    for (int n = 1; n <= 4; ++n) {
        long long pow4 = 1;
        for (int i = 0; i < n; ++i) pow4 *= 4;
        REQUIRE(count_labelings(ForestLabelFamily::pair_types, n) == pow4);
        REQUIRE(count_labelings(ForestLabelFamily::forced_singleton, n) ==
                pow4 / 4);
        REQUIRE(count_labelings(ForestLabelFamily::free_singleton, n) ==
                pow4 / 2);
    }

    // magnitudes are exactly {1..2n} (pair_types) or {1..2n-1} (singleton)
    for (int n = 1; n <= 3; ++n)
        for (const ForestLabelFamily family :
             {ForestLabelFamily::pair_types, ForestLabelFamily::forced_singleton,
              ForestLabelFamily::free_singleton}) {
            const int top =
                family == ForestLabelFamily::pair_types ? 2 * n : 2 * n - 1;
            eulerian::visit_labelings(family, n, [&](const SignedLabeling& w) {
                std::set<int> magnitudes;
                for (int v : w.labels) magnitudes.insert(std::abs(v));
                REQUIRE(static_cast<int>(magnitudes.size()) == top);
                REQUIRE(*magnitudes.begin() == 1);
                REQUIRE(*magnitudes.rbegin() == top);
            });
        }

    // forced singleton at n=1: the one labeling is (-1)
    std::vector<std::vector<int>> labelings;
    eulerian::visit_labelings(ForestLabelFamily::forced_singleton, 1,
                              [&](const SignedLabeling& w) {
                                  labelings.push_back(w.labels);
                              });
    REQUIRE(labelings == std::vector<std::vector<int>>{{-1}});

    // free singleton at n=2: singleton sign fastest, then the type counter
    labelings.clear();
    eulerian::visit_labelings(ForestLabelFamily::free_singleton, 2,
                              [&](const SignedLabeling& w) {
                                  labelings.push_back(w.labels);
                              });
    REQUIRE(labelings == std::vector<std::vector<int>>{{2, 1, 3},
                                                       {2, 1, -3},
                                                       {2, -1, 3},
                                                       {2, -1, -3},
                                                       {-2, 1, 3},
                                                       {-2, 1, -3},
                                                       {-1, -2, 3},
                                                       {-1, -2, -3}});

    // pair_types at n=2: last tree's type counts fastest
    labelings.clear();
    eulerian::visit_labelings(ForestLabelFamily::pair_types, 2,
                              [&](const SignedLabeling& w) {
                                  labelings.push_back(w.labels);
                              });
    REQUIRE(labelings.size() == 16);
    REQUIRE(labelings[0] == std::vector<int>{2, 1, 4, 3});
    REQUIRE(labelings[1] == std::vector<int>{2, 1, 4, -3});
    REQUIRE(labelings[2] == std::vector<int>{2, 1, -4, 3});
    REQUIRE(labelings[3] == std::vector<int>{2, 1, -3, -4});
    REQUIRE(labelings[4] == std::vector<int>{2, -1, 4, 3});
    REQUIRE(labelings[15] == std::vector<int>{-1, -2, -3, -4});

    REQUIRE_THROWS_AS(eulerian::visit_labelings(ForestLabelFamily::pair_types,
                                                0, [](const SignedLabeling&) {}),
                      std::invalid_argument);
}

TEST_CASE("labeled extensions") {
    const PlaneForest f1 = PlaneForest::pair_forest(1);
    auto labeled_words = [&](int type) {
        SignedLabeling w;
        const auto [root, child] = eulerian::pair_tree_labels(1, type);
        w.labels = {root, child};
        std::vector<SignedWord> words;
        eulerian::visit_labeled_extensions(f1, w, [&](std::span<const int> sw) {
            words.emplace_back(sw.begin(), sw.end());
        });
        return words;
    };
    REQUIRE(labeled_words(1) == std::vector<SignedWord>{{1, 2}});
    REQUIRE(labeled_words(2) == std::vector<SignedWord>{{-1, 2}});
    REQUIRE(labeled_words(3) == std::vector<SignedWord>{{1, -2}});
    REQUIRE(labeled_words(4) == std::vector<SignedWord>{{-2, -1}});
    REQUIRE(eulerian::des_b(labeled_words(1)[0]) == 1);
    REQUIRE(eulerian::des_b(labeled_words(3)[0]) == 1);
    REQUIRE(eulerian::des_b(labeled_words(4)[0]) == 0);

    SignedLabeling bad;
    bad.labels = {1};
    REQUIRE_THROWS_AS(eulerian::visit_labeled_extensions(
                          f1, bad, [](std::span<const int>) {}),
                      std::domain_error);
    bad.labels = {1, 0};
    REQUIRE_THROWS_AS(eulerian::visit_labeled_extensions(
                          f1, bad, [](std::span<const int>) {}),
                      std::domain_error);
}

TEST_CASE("label-pair collapse") {
    REQUIRE(eulerian::collapse_label_pairs(std::vector<int>{1, 2}) ==
            SignedWord{1, 1});
    REQUIRE(eulerian::collapse_label_pairs(std::vector<int>{-2, -1}) ==
            SignedWord{-1, -1});
    REQUIRE(eulerian::collapse_label_pairs(std::vector<int>{3, -4, 1, 2}) ==
            SignedWord{2, -2, 1, 1});
    REQUIRE_THROWS_AS(eulerian::collapse_label_pairs(std::vector<int>{1, 2, 3}),
                      std::domain_error);
    REQUIRE_THROWS_AS(
        eulerian::collapse_label_pairs(std::vector<int>{1, 2, 4, 6}),
        std::domain_error);
    REQUIRE_THROWS_AS(
        eulerian::collapse_label_pairs(std::vector<int>{1, -1, 2, 3}),
        std::domain_error);
}

TEST_CASE("forest descent distributions") {
    REQUIRE(eulerian::forest_descent_polynomial(ForestLabelFamily::pair_types,
                                                1) == Polynomial{1, 3});
    REQUIRE(eulerian::forest_descent_polynomial(
                ForestLabelFamily::forced_singleton, 1) == Polynomial{1});
    REQUIRE(eulerian::forest_descent_polynomial(
                ForestLabelFamily::free_singleton, 1) == Polynomial{1, 1});

    // totals: labelings times extensions
    for (int n = 1; n <= 3; ++n) {
        const Int ext =
            PlaneForest::pair_forest(n).linear_extension_count();
        Int pow4 = eulerian::pow_int(Int(4), static_cast<unsigned long>(n));
        REQUIRE(eulerian::forest_descent_polynomial(
                    ForestLabelFamily::pair_types, n)(Int(1)) == pow4 * ext);
    }

    for (int jobs : {2, 5})
        REQUIRE(eulerian::forest_descent_polynomial(
                    ForestLabelFamily::free_singleton, 2, jobs) ==
                eulerian::forest_descent_polynomial(
                    ForestLabelFamily::free_singleton, 2));
}
