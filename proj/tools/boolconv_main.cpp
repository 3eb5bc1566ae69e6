// Command-line front end: measure I/O, Boolean convolution and powers,
// Levy/Kolmogorov distances, central-limit convergence tables and the
// seeded verification suite.
//
// Exit codes: 0 success, 1 predicate/verification failure, 2 usage or
// input error, 3 numerical failure.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "boolconv/clt.hpp"
#include "boolconv/measure_json.hpp"
#include "boolconv/transforms.hpp"
#include "boolconv/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitPredicateFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;

// Deterministic numeric formatting: up to 12 significant digits.
std::string fmt12(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

void print_measure(const boolconv::AtomicMeasure& mu) {
    std::cout << boolconv::measure_to_json(mu).dump() << "\n";
}

int run_convolve(const std::string& a, const std::string& b) {
    const auto lhs = boolconv::load_measure_file(a);
    const auto rhs = boolconv::load_measure_file(b);
    print_measure(boolconv::boolean_convolve(lhs, rhs));
    return kExitOk;
}

int run_power(const std::string& path, double t) {
    print_measure(boolconv::boolean_power(boolconv::load_measure_file(path), t));
    return kExitOk;
}

int run_distance(const std::string& a, const std::string& b, const std::string& format) {
    const auto lhs = boolconv::load_measure_file(a);
    const auto rhs = boolconv::load_measure_file(b);
    const double levy = boolconv::levy_distance(lhs, rhs);
    const double kolmogorov = boolconv::kolmogorov_distance(lhs, rhs);
    if (format == "csv") {
        std::cout << "levy,kolmogorov\n" << fmt12(levy) << "," << fmt12(kolmogorov) << "\n";
    } else {
        nlohmann::ordered_json out;
        out["levy"] = levy;
        out["kolmogorov"] = kolmogorov;
        std::cout << out.dump() << "\n";
    }
    return kExitOk;
}

int run_clt(const std::string& path, const std::vector<long long>& ns,
            std::optional<double> k_bound, const std::string& format) {
    if (ns.empty()) throw boolconv::InvalidArgument("clt: need at least one n value");
    for (long long n : ns)
        if (n < 1) throw boolconv::InvalidArgument("clt: n values must be positive");
    std::vector<long long> sorted = ns;
    std::sort(sorted.begin(), sorted.end());

    const auto mu = boolconv::standardize(boolconv::load_measure_file(path));
    const double k = k_bound.value_or(mu.support_radius());
    const auto rows = boolconv::convergence_table(mu, sorted, k);

    if (format == "json") {
        nlohmann::ordered_json out = nlohmann::ordered_json::array();
        for (const auto& row : rows) {
            nlohmann::ordered_json r;
            r["n"] = row.n;
            r["levy"] = row.levy;
            r["kolmogorov"] = row.kolmogorov;
            r["thm1_bound"] = row.thm1_bound;
            if (row.thm2_bound)
                r["thm2_bound"] = *row.thm2_bound;
            else
                r["thm2_bound"] = nullptr;
            r["m4"] = row.m4;
            r["r4_mun"] = row.r4_of_mun;
            out.push_back(std::move(r));
        }
        std::cout << out.dump() << "\n";
    } else {
        std::cout << "n,levy,kolmogorov,thm1_bound,thm2_bound,m4,r4_mun\n";
        for (const auto& row : rows) {
            std::cout << row.n << "," << fmt12(row.levy) << "," << fmt12(row.kolmogorov) << ","
                      << fmt12(row.thm1_bound) << ","
                      << (row.thm2_bound ? fmt12(*row.thm2_bound) : "") << "," << fmt12(row.m4)
                      << "," << fmt12(row.r4_of_mun) << "\n";
        }
    }
    return kExitOk;
}

nlohmann::ordered_json report_to_json(const boolconv::VerificationReport& report) {
    nlohmann::ordered_json out;
    out["seed"] = report.config.seed;
    out["corpus_size"] = report.config.size;
    long passed = 0;
    long failed = 0;
    nlohmann::ordered_json details = nlohmann::ordered_json::array();
    for (const auto& pred : report.predicates) {
        passed += pred.passed;
        failed += pred.failure_count;
        nlohmann::ordered_json d;
        d["predicate"] = pred.name;
        d["checked"] = pred.checked;
        d["passed"] = pred.passed;
        d["failed"] = pred.failure_count;
        d["vacuous"] = pred.vacuous;
        d["failures"] = pred.failures;
        details.push_back(std::move(d));
    }
    out["passed"] = passed;
    out["failed"] = failed;
    out["details"] = std::move(details);
    return out;
}

int run_verify(const std::vector<std::string>& files, std::uint64_t seed, int corpus_size) {
    boolconv::CorpusConfig config;
    config.seed = seed;
    boolconv::VerificationReport report;
    if (files.empty()) {
        if (corpus_size < 1) throw boolconv::InvalidArgument("verify: corpus size must be >= 1");
        config.size = corpus_size;
        report = boolconv::run_verification(config);
    } else {
        std::vector<boolconv::AtomicMeasure> corpus;
        corpus.reserve(files.size());
        for (const std::string& f : files)
            corpus.push_back(boolconv::standardize(boolconv::load_measure_file(f)));
        config.size = static_cast<int>(corpus.size());
        report = boolconv::run_verification(config, corpus);
    }
    std::cout << report_to_json(report).dump(2) << "\n";
    return report.all_ok() ? kExitOk : kExitPredicateFailure;
}

int run_example(long long n, bool emit_only) {
    if (n < 1) throw boolconv::InvalidArgument("example: n must be >= 1");
    const auto closed_form = boolconv::example_measure(n);
    if (emit_only) {
        print_measure(closed_form);
        return kExitOk;
    }
    const auto iterated = boolconv::clt_iterate(boolconv::example_measure(1), n);
    double deviation = 0.0;
    for (std::size_t i = 0; i < closed_form.size(); ++i) {
        deviation = std::max(deviation, std::abs(closed_form.atoms()[i].position -
                                                 iterated.atoms()[i].position));
        deviation = std::max(deviation, std::abs(closed_form.atoms()[i].weight -
                                                 iterated.atoms()[i].weight));
    }
    nlohmann::ordered_json out;
    out["n"] = n;
    out["closed_form"] = boolconv::measure_to_json(closed_form);
    out["iterated"] = boolconv::measure_to_json(iterated);
    out["max_deviation"] = deviation;
    out["levy_to_b"] = boolconv::levy_distance(closed_form, boolconv::bernoulli());
    std::cout << out.dump() << "\n";
    return deviation <= 1e-8 ? kExitOk : kExitPredicateFailure;
}

int run_sharpness(double eps, bool emit_only) {
    const auto mu = boolconv::sharpness_measure(eps);
    if (emit_only) {
        print_measure(mu);
        return kExitOk;
    }
    const double m4 = boolconv::moment(mu, 4);
    const double expected_m4 = 1.0 + 2.0 * eps * eps * eps;
    const double levy = boolconv::levy_distance(mu, boolconv::bernoulli());
    nlohmann::ordered_json out;
    out["epsilon"] = eps;
    out["measure"] = boolconv::measure_to_json(mu);
    out["m4"] = m4;
    out["expected_m4"] = expected_m4;
    out["levy_to_b"] = levy;
    out["lower_bound"] = eps / 4.0;
    out["static_bound"] = boolconv::static_levy_bound(mu);
    std::cout << out.dump() << "\n";
    const bool ok = std::abs(m4 - expected_m4) <= 1e-12 && levy >= eps / 4.0;
    return ok ? kExitOk : kExitPredicateFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Boolean convolution toolkit for finitely supported measures"};
    app.require_subcommand(1);

    std::string path_a;
    std::string path_b;
    std::string distance_format = "json";
    std::string clt_format = "csv";
    std::vector<long long> ns;
    std::optional<double> k_bound;
    double power_t = 1.0;
    std::uint64_t seed = 42;
    int corpus_size = 200;
    long long example_n = 1;
    std::optional<double> epsilon;
    bool emit_only = false;
    std::vector<std::string> verify_files;

    auto* convolve = app.add_subcommand("convolve", "Boolean convolution of two measure files");
    convolve->add_option("a", path_a, "first measure JSON")->required();
    convolve->add_option("b", path_b, "second measure JSON")->required();

    auto* power = app.add_subcommand("power", "Boolean convolution power of a measure file");
    power->add_option("measure", path_a, "measure JSON")->required();
    power->add_option("--t", power_t, "exponent (real, >= 0)")->required();

    auto* distance = app.add_subcommand("distance", "Levy and Kolmogorov distance of two measures");
    distance->add_option("a", path_a, "first measure JSON")->required();
    distance->add_option("b", path_b, "second measure JSON")->required();
    distance->add_option("--format", distance_format, "json or csv");

    auto* clt = app.add_subcommand("clt", "convergence table of the central-limit iterates");
    clt->add_option("measure", path_a, "measure JSON (standardized on load)")->required();
    clt->add_option("--n", ns, "comma-separated list of n values")->required()->delimiter(',');
    clt->add_option("--k-bound", k_bound, "support bound override (default: max |atom|)");
    clt->add_option("--format", clt_format, "csv (default) or json");

    auto* verify = app.add_subcommand("verify", "run the seeded invariant suite");
    verify->add_option("files", verify_files, "optional measure files used as the corpus");
    verify->add_option("--seed", seed, "corpus seed");
    verify->add_option("--corpus-size", corpus_size, "number of random corpus measures");

    auto* example = app.add_subcommand("example", "closed-form families and their bound checks");
    auto* opt_n = example->add_option("--n", example_n, "two-atom family index");
    auto* opt_eps = example->add_option("--epsilon", epsilon,
                                        "six-atom sharpness family parameter, in (0, 1/2)");
    opt_n->excludes(opt_eps);
    example->add_flag("--emit", emit_only, "print only the closed-form measure JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (convolve->parsed()) return run_convolve(path_a, path_b);
        if (power->parsed()) return run_power(path_a, power_t);
        if (distance->parsed()) return run_distance(path_a, path_b, distance_format);
        if (clt->parsed()) return run_clt(path_a, ns, k_bound, clt_format);
        if (verify->parsed()) return run_verify(verify_files, seed, corpus_size);
        if (example->parsed()) {
            if (epsilon) return run_sharpness(*epsilon, emit_only);
            if (opt_n->count() == 0)
                throw boolconv::InvalidArgument("example: pass either --n or --epsilon");
            return run_example(example_n, emit_only);
        }
    } catch (const boolconv::InvalidArgument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const boolconv::InvalidMeasure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const boolconv::DegenerateMeasure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const boolconv::PreconditionViolation& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const boolconv::Error& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return kExitNumerical;
    }
    return kExitUsage;
}
