#pragma once

#include <optional>
#include <string_view>

#include "eulerian/forest.hpp"
#include "eulerian/inversion.hpp"
#include "eulerian/polynomial.hpp"
#include "eulerian/signed_words.hpp"

namespace eulerian {

// The ten named distribution families on the command-line surface:
//   I      ascents over paper-I inversion sequences of length n
//   Iprime ascents over paper-Iprime inversion sequences of length n
//   T      type-D ascents over doubled-rule inversion sequences of length n
//   D      type-D descents over even-signed permutations of {1..n}
//   P      type-B descents over signed words of {1^2..n^2}
//   U      type-B descents over signed words of {1^2..(n-1)^2, n}
//   V      the U multiset with the largest value forced negative
//   F      type-B descents over labeled extensions, pair_types family
//   Fprime same, forced_singleton family
//   G      same, free_singleton family
enum class Family { i, iprime, t, d, p, u, v, f, fprime, g };

inline std::optional<Family> parse_family(std::string_view s) {
    if (s == "I") return Family::i;
    if (s == "Iprime") return Family::iprime;
    if (s == "T") return Family::t;
    if (s == "D") return Family::d;
    if (s == "P") return Family::p;
    if (s == "U") return Family::u;
    if (s == "V") return Family::v;
    if (s == "F") return Family::f;
    if (s == "Fprime") return Family::fprime;
    if (s == "G") return Family::g;
    return std::nullopt;
}

inline std::string_view family_name(Family f) {
    switch (f) {
        case Family::i: return "I";
        case Family::iprime: return "Iprime";
        case Family::t: return "T";
        case Family::d: return "D";
        case Family::p: return "P";
        case Family::u: return "U";
        case Family::v: return "V";
        case Family::f: return "F";
        case Family::fprime: return "Fprime";
        case Family::g: return "G";
    }
    return {};
}

// Largest n the CLI runs without --allow-huge. The multiset and forest
// families grow like (2n)! / 2^n * 4^n; the sequence families only like
// products of the rule terms.
inline int default_size_guard(Family f) {
    switch (f) {
        case Family::i:
        case Family::iprime:
        case Family::t:
        case Family::d:
            return 8;
        default:
            return 4;
    }
}

inline Polynomial family_polynomial(Family family, int n, int jobs = 1) {
    switch (family) {
        case Family::i:
            return ascent_polynomial(SRule::paper_i(), n,
                                     AscentStatistic::ascents, jobs);
        case Family::iprime:
            return ascent_polynomial(SRule::paper_iprime(), n,
                                     AscentStatistic::ascents, jobs);
        case Family::t:
            return ascent_polynomial(SRule::doubled(), n,
                                     AscentStatistic::type_d_ascents, jobs);
        case Family::d:
            return descent_polynomial(SignedFamily::d, n, jobs);
        case Family::p:
            return descent_polynomial(SignedFamily::p, n, jobs);
        case Family::u:
            return descent_polynomial(SignedFamily::u, n, jobs);
        case Family::v:
            return descent_polynomial(SignedFamily::v, n, jobs);
        case Family::f:
            return forest_descent_polynomial(ForestLabelFamily::pair_types, n,
                                             jobs);
        case Family::fprime:
            return forest_descent_polynomial(ForestLabelFamily::forced_singleton,
                                             n, jobs);
        case Family::g:
            return forest_descent_polynomial(ForestLabelFamily::free_singleton,
                                             n, jobs);
    }
    throw std::invalid_argument("family_polynomial: bad family");
}

}  // namespace eulerian
