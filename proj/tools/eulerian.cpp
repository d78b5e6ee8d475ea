// Command-line front end: distribution polynomials, identity verification
// suites, and raw object enumeration. Exit codes: 0 success, 1 verification
// failure, 2 usage error (bad flags, unknown names, size guards).

#include <cstdlib>
#include <iostream>
#include <optional>
#include <span>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "eulerian/eulerian.hpp"

namespace {

using nlohmann::ordered_json;

int env_jobs() {
    const char* raw = std::getenv("EULERIAN_JOBS");
    if (!raw) return 1;
    char* end = nullptr;
    const long v = std::strtol(raw, &end, 10);
    if (end == raw || *end != '\0' || v < 1 || v > 1024) return 1;
    return static_cast<int>(v);
}

int usage_error(const std::string& message) {
    std::cerr << "error: " << message << "\n";
    return 2;
}

std::string join_ints(std::span<const int> values, char sep) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(values[i]);
    }
    return out;
}

struct PolyArgs {
    std::string family;
    int n = 1;
    std::string format = "plain";
    int jobs = env_jobs();
    bool allow_huge = false;
};

int run_poly(const PolyArgs& args) {
    const auto family = eulerian::parse_family(args.family);
    if (!family) return usage_error("unknown family '" + args.family + "'");
    if (args.n < 1) return usage_error("--n must be >= 1");
    const int guard = eulerian::default_size_guard(*family);
    if (args.n > guard && !args.allow_huge)
        return usage_error("family " + args.family + " with n=" +
                           std::to_string(args.n) + " exceeds the default size guard (" +
                           std::to_string(guard) + "); pass --allow-huge to run anyway");

    const eulerian::Polynomial poly =
        eulerian::family_polynomial(*family, args.n, args.jobs);
    const std::vector<std::string> coeffs = poly.coeff_strings();

    if (args.format == "plain") {
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            if (i) std::cout << ' ';
            std::cout << coeffs[i];
        }
        std::cout << '\n';
    } else if (args.format == "json") {
        ordered_json doc;
        doc["schema"] = "1";
        doc["family"] = args.family;
        doc["n"] = args.n;
        doc["coeffs"] = coeffs;
        std::cout << doc.dump() << '\n';
    } else {  // csv
        std::cout << "k,coefficient\n";
        for (std::size_t i = 0; i < coeffs.size(); ++i)
            std::cout << i << ',' << coeffs[i] << '\n';
    }
    return 0;
}

struct VerifyArgs {
    std::string suite;
    int n_max = -1;
    long truncation = -1;
    int jobs = env_jobs();
    bool allow_huge = false;
};

int run_verify(const VerifyArgs& args) {
    const auto suite = eulerian::parse_suite(args.suite);
    if (!suite) return usage_error("unknown suite '" + args.suite + "'");
    const eulerian::VerifyOptions options{args.n_max, args.truncation, args.jobs,
                                          args.allow_huge};
    try {
        const bool ok = eulerian::run_suite(
            *suite, options, [](const eulerian::VerificationReport& report) {
                ordered_json doc;
                doc["schema"] = "1";
                doc["identity"] = report.identity;
                doc["params"] = report.params;
                doc["status"] = report.pass ? "pass" : "fail";
                if (report.pass)
                    doc["counterexample"] = nullptr;
                else
                    doc["counterexample"] = report.counterexample;
                doc["elapsed_ms"] = report.elapsed_ms;
                doc["objects"] = report.objects;
                std::cout << doc.dump() << std::endl;
            });
        return ok ? 0 : 1;
    } catch (const std::invalid_argument& e) {
        return usage_error(e.what());
    }
}

struct EnumerateArgs {
    std::string kind;
    std::string rule;
    std::string word_class;
    std::string family;
    std::string forest;
    int n = -1;
    long limit = 0;  // 0: unlimited
    std::string format = "plain";
    bool allow_huge = false;
};

class Emitter {
public:
    Emitter(std::string kind, std::string format, long limit)
        : kind_(std::move(kind)), format_(std::move(format)), limit_(limit) {}

    // False once the limit is reached: enumeration should stop.
    bool emit(std::span<const int> values) {
        if (limit_ > 0 && emitted_ >= limit_) return false;
        ++emitted_;
        if (format_ == "plain")
            std::cout << join_ints(values, ' ') << '\n';
        else if (format_ == "csv")
            std::cout << join_ints(values, ',') << '\n';
        else {
            ordered_json doc;
            doc["schema"] = "1";
            doc["kind"] = kind_;
            doc["values"] = std::vector<int>(values.begin(), values.end());
            std::cout << doc.dump() << '\n';
        }
        return limit_ == 0 || emitted_ < limit_;
    }

private:
    std::string kind_;
    std::string format_;
    long limit_;
    long emitted_ = 0;
};

int run_enumerate(const EnumerateArgs& args) {
    Emitter emitter(args.kind, args.format, args.limit);

    if (args.kind == "invseq") {
        if (args.rule.empty()) return usage_error("--kind invseq needs --rule");
        if (args.n < 0) return usage_error("--kind invseq needs --n >= 0");
        const auto rule = eulerian::SRule::parse(args.rule);
        if (!rule) return usage_error("unknown rule '" + args.rule + "'");
        if (args.n > 8 && !args.allow_huge)
            return usage_error("enumerating sequences beyond n=8 needs --allow-huge");
        eulerian::visit_inversion_sequences(
            *rule, args.n,
            [&](std::span<const int> e) { return emitter.emit(e); });
        return 0;
    }

    if (args.kind == "signedword") {
        if (args.word_class.empty())
            return usage_error("--kind signedword needs --class");
        if (args.n < 1) return usage_error("--kind signedword needs --n >= 1");
        if (args.word_class == "D") {
            if (args.n > 8 && !args.allow_huge)
                return usage_error("class D beyond n=8 needs --allow-huge");
            eulerian::visit_even_signed(args.n, [&](std::span<const int> w) {
                return emitter.emit(w);
            });
            return 0;
        }
        std::optional<eulerian::MultisetSpec> spec;
        if (args.word_class == "P")
            spec = eulerian::MultisetSpec::p_class(args.n);
        else if (args.word_class == "U")
            spec = eulerian::MultisetSpec::u_class(args.n);
        else if (args.word_class == "V")
            spec = eulerian::MultisetSpec::v_class(args.n);
        else
            return usage_error("unknown class '" + args.word_class +
                               "' (expected P, U, V, or D)");
        if (args.n > 4 && !args.allow_huge)
            return usage_error("class " + args.word_class +
                               " beyond n=4 needs --allow-huge");
        eulerian::visit_signed_words(
            *spec, [&](std::span<const int> w) { return emitter.emit(w); });
        return 0;
    }

    if (args.kind == "extension") {
        if (args.forest.empty())
            return usage_error("--kind extension needs --forest");
        eulerian::PlaneForest forest;
        try {
            forest = eulerian::PlaneForest::parse(args.forest);
        } catch (const std::invalid_argument& e) {
            return usage_error(e.what());
        }
        if (forest.linear_extension_count() > 10'000'000 && !args.allow_huge)
            return usage_error("forest has more than 10^7 extensions; pass --allow-huge");
        eulerian::visit_linear_extensions(
            forest, [&](std::span<const int> vs) { return emitter.emit(vs); });
        return 0;
    }

    if (args.kind == "labeling") {
        if (args.family.empty())
            return usage_error("--kind labeling needs --family (F, Fprime, or G)");
        if (args.n < 1) return usage_error("--kind labeling needs --n >= 1");
        eulerian::ForestLabelFamily family;
        if (args.family == "F")
            family = eulerian::ForestLabelFamily::pair_types;
        else if (args.family == "Fprime")
            family = eulerian::ForestLabelFamily::forced_singleton;
        else if (args.family == "G")
            family = eulerian::ForestLabelFamily::free_singleton;
        else
            return usage_error("unknown labeling family '" + args.family +
                               "' (expected F, Fprime, or G)");
        if (args.n > 8 && !args.allow_huge)
            return usage_error("labelings beyond n=8 need --allow-huge");
        eulerian::visit_labelings(family, args.n,
                                  [&](const eulerian::SignedLabeling& w) {
                                      return emitter.emit(w.labels);
                                  });
        return 0;
    }

    return usage_error("unknown kind '" + args.kind +
                       "' (expected invseq, signedword, extension, or labeling)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact ascent/descent statistics over inversion sequences, "
                 "signed words, and labeled forests"};
    app.require_subcommand(1);

    PolyArgs poly_args;
    CLI::App* poly = app.add_subcommand(
        "poly", "print a family's distribution polynomial");
    poly->add_option("--family", poly_args.family,
                     "family: I, Iprime, T, D, P, U, V, F, Fprime, G")
        ->required();
    poly->add_option("--n", poly_args.n, "size parameter")->required();
    poly->add_option("--format", poly_args.format, "plain, json, or csv")
        ->check(CLI::IsMember({"plain", "json", "csv"}));
    poly->add_option("--jobs", poly_args.jobs, "worker threads");
    poly->add_flag("--allow-huge", poly_args.allow_huge,
                   "lift the default size guards");

    VerifyArgs verify_args;
    CLI::App* verify = app.add_subcommand(
        "verify", "run an identity suite, one JSON report per check");
    verify->add_option("--suite", verify_args.suite,
                       "suite: conj327, thm31, thm33, ppartition, series, "
                       "realroots, all")
        ->required();
    verify->add_option("--n-max", verify_args.n_max,
                       "override the per-check size bounds");
    verify->add_option("--T", verify_args.truncation,
                       "override the series truncation degree");
    verify->add_option("--jobs", verify_args.jobs, "worker threads");
    verify->add_flag("--allow-huge", verify_args.allow_huge,
                     "lift the default size guards");

    EnumerateArgs enum_args;
    CLI::App* enumerate = app.add_subcommand(
        "enumerate", "list objects one per line, in the library's order");
    enumerate->add_option("--kind", enum_args.kind,
                          "invseq, signedword, extension, or labeling")
        ->required();
    enumerate->add_option("--rule", enum_args.rule,
                          "invseq rule: natural, doubled, paper-I, "
                          "paper-Iprime, halved-Iprime, explicit:s1,s2,...");
    enumerate->add_option("--class", enum_args.word_class,
                          "signedword class: P, U, V, or D");
    enumerate->add_option("--family", enum_args.family,
                          "labeling family: F, Fprime, or G");
    enumerate->add_option("--forest", enum_args.forest,
                          "forest as nested parentheses, e.g. (()())");
    enumerate->add_option("--n", enum_args.n, "size parameter");
    enumerate->add_option("--limit", enum_args.limit,
                          "stop after this many objects (0 = all)");
    enumerate->add_option("--format", enum_args.format, "plain, json, or csv")
        ->check(CLI::IsMember({"plain", "json", "csv"}));
    enumerate->add_flag("--allow-huge", enum_args.allow_huge,
                        "lift the default size guards");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (poly->parsed()) return run_poly(poly_args);
        if (verify->parsed()) return run_verify(verify_args);
        if (enumerate->parsed()) return run_enumerate(enum_args);
    } catch (const std::exception& e) {
        return usage_error(e.what());
    }
    return usage_error("no subcommand");
}
