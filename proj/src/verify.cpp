#include "boolconv/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include "boolconv/clt.hpp"
#include "boolconv/transforms.hpp"

namespace boolconv {

namespace {

constexpr int kMaxSerializedFailures = 8;

double uniform(std::mt19937_64& eng, double lo, double hi) {
    // Engine output mapped to [0, 1) directly; distribution objects are not
    // bit-stable across standard library implementations.
    const double u = static_cast<double>(eng() >> 11) * 0x1.0p-53;
    return lo + u * (hi - lo);
}

std::vector<long long> rate_grid() {
    std::vector<long long> ns;
    for (long long n = 1; n <= (1LL << 14); n *= 2) ns.push_back(n);
    return ns;
}

std::string serialize(const AtomicMeasure& mu) {
    std::ostringstream os;
    os.precision(17);
    os << "[";
    for (std::size_t i = 0; i < mu.size(); ++i) {
        if (i) os << "; ";
        os << "(" << mu.atoms()[i].position << ", " << mu.atoms()[i].weight << ")";
    }
    os << "]";
    return os.str();
}

void record_failure(PredicateResult& res, const std::string& text) {
    ++res.failure_count;
    if (static_cast<int>(res.failures.size()) < kMaxSerializedFailures)
        res.failures.push_back(text);
}

// Largest paired deviation in positions or weights; infinite when the atom
// counts differ.
double max_deviation(const AtomicMeasure& a, const AtomicMeasure& b) {
    if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
    double dev = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        dev = std::max(dev, std::abs(a.atoms()[i].position - b.atoms()[i].position));
        dev = std::max(dev, std::abs(a.atoms()[i].weight - b.atoms()[i].weight));
    }
    return dev;
}

AtomicMeasure iterate_by_pairwise_convolution(const AtomicMeasure& mu, long long n) {
    AtomicMeasure acc = mu;
    for (long long i = 1; i < n; ++i) acc = boolean_convolve(acc, mu);
    return dilate(acc, 1.0 / std::sqrt(static_cast<double>(n)));
}

}  // namespace

std::vector<AtomicMeasure> make_corpus(const CorpusConfig& config) {
    if (config.size < 1) throw InvalidArgument("make_corpus: size must be >= 1");
    if (config.min_atoms < 2 || config.max_atoms < config.min_atoms)
        throw InvalidArgument("make_corpus: bad atom count range");

    std::mt19937_64 eng(config.seed);
    std::vector<AtomicMeasure> corpus;
    corpus.reserve(static_cast<std::size_t>(config.size));
    const int span = config.max_atoms - config.min_atoms + 1;

    while (static_cast<int>(corpus.size()) < config.size) {
        const int k = config.min_atoms + static_cast<int>(eng() % static_cast<std::uint64_t>(span));

        std::vector<double> pos(static_cast<std::size_t>(k));
        for (int attempt = 0;; ++attempt) {
            for (double& x : pos) x = uniform(eng, -config.position_range, config.position_range);
            std::sort(pos.begin(), pos.end());
            bool spaced = true;
            for (std::size_t i = 0; i + 1 < pos.size(); ++i)
                if (pos[i + 1] - pos[i] < config.min_gap) spaced = false;
            if (spaced || attempt > 1000) break;
        }

        std::vector<double> w(static_cast<std::size_t>(k));
        for (int attempt = 0;; ++attempt) {
            double total = 0.0;
            for (double& v : w) {
                v = uniform(eng, 0.0, 1.0);
                total += v;
            }
            for (double& v : w) v /= total;
            if (*std::min_element(w.begin(), w.end()) >= config.min_weight || attempt > 1000)
                break;
        }

        std::vector<Atom> atoms;
        atoms.reserve(pos.size());
        for (std::size_t i = 0; i < pos.size(); ++i) atoms.push_back({pos[i], w[i]});
        const AtomicMeasure standardized = standardize(make_measure(std::move(atoms)));
        if (standardized.support_radius() <= config.max_support_radius)
            corpus.push_back(standardized);
    }
    return corpus;
}

bool VerificationReport::all_ok() const {
    return std::all_of(predicates.begin(), predicates.end(),
                       [](const PredicateResult& p) { return p.ok(); });
}

VerificationReport run_verification(const CorpusConfig& config) {
    return run_verification(config, make_corpus(config));
}

VerificationReport run_verification(const CorpusConfig& config,
                                    const std::vector<AtomicMeasure>& corpus) {
    VerificationReport report;
    report.config = config;
    const AtomicMeasure b = bernoulli();
    const std::vector<long long> ns = rate_grid();

    {
        // Levy distance of each iterate against the cube-root rate bound.
        PredicateResult res;
        res.name = "rate_bound";
        for (const AtomicMeasure& mu : corpus) {
            for (long long n : ns) {
                ++res.checked;
                const double bound = thm1_bound(mu, n);
                if (bound >= 1.0) {
                    // The distance never exceeds 1, so the row has no content.
                    ++res.vacuous;
                    ++res.passed;
                    continue;
                }
                const double dist = levy_distance(clt_iterate(mu, n), b);
                if (dist <= bound + 1e-9)
                    ++res.passed;
                else
                    record_failure(res, "n=" + std::to_string(n) + " levy=" + std::to_string(dist) +
                                            " bound=" + std::to_string(bound) +
                                            " measure=" + serialize(mu));
            }
        }
        report.predicates.push_back(std::move(res));
    }

    {
        // Two-outlier structure of bounded-support iterates.
        PredicateResult res;
        res.name = "structure";
        for (const AtomicMeasure& mu : corpus) {
            const double k_bound = mu.support_radius();
            for (long long n : ns) {
                if (!(std::sqrt(static_cast<double>(n)) > k_bound)) continue;
                ++res.checked;
                try {
                    const StructureReport rep = thm2_structure(mu, k_bound, n);
                    if (rep.all_pass()) {
                        ++res.passed;
                    } else {
                        std::string bad;
                        for (const auto& [name, pass] : rep.checks)
                            if (!pass) bad += " " + name;
                        record_failure(res, "n=" + std::to_string(n) + " failed:" + bad +
                                                " measure=" + serialize(mu));
                    }
                } catch (const StructureViolation& e) {
                    record_failure(res, "n=" + std::to_string(n) + " K=" + std::to_string(k_bound) +
                                            " " + e.what() + " measure=" + serialize(mu));
                }
            }
        }
        report.predicates.push_back(std::move(res));
    }

    {
        // The six-atom family keeps the cube-root exponent sharp.
        PredicateResult res;
        res.name = "sharpness";
        for (double eps : {0.3, 0.2, 0.1, 0.05}) {
            ++res.checked;
            const AtomicMeasure mu = sharpness_measure(eps);
            const double m4 = moment(mu, 4);
            const double expected = 1.0 + 2.0 * eps * eps * eps;
            const double dist = levy_distance(mu, b);
            if (std::abs(m4 - expected) <= 1e-12 && dist >= eps / 4.0)
                ++res.passed;
            else
                record_failure(res, "eps=" + std::to_string(eps) + " m4=" + std::to_string(m4) +
                                        " levy=" + std::to_string(dist));
        }
        report.predicates.push_back(std::move(res));
    }

    {
        // Direct transform identity vs repeated pairwise convolution.
        PredicateResult res;
        res.name = "oracle_equivalence";
        CorpusConfig sub = config;
        sub.size = 50;
        sub.max_atoms = std::min(config.max_atoms, 4);
        sub.seed = config.seed + 1;
        for (const AtomicMeasure& mu : make_corpus(sub)) {
            for (long long n = 1; n <= 8; ++n) {
                ++res.checked;
                const double dev =
                    max_deviation(clt_iterate(mu, n), iterate_by_pairwise_convolution(mu, n));
                if (dev <= 1e-8)
                    ++res.passed;
                else
                    record_failure(res, "n=" + std::to_string(n) + " deviation=" +
                                            std::to_string(dev) + " measure=" + serialize(mu));
            }
        }
        report.predicates.push_back(std::move(res));
    }

    {
        // bernoulli() is a fixed point of the iteration.
        PredicateResult res;
        res.name = "bernoulli_fixed_point";
        for (long long n : ns) {
            ++res.checked;
            const double dev = max_deviation(clt_iterate(b, n), b);
            if (dev <= 1e-10)
                ++res.passed;
            else
                record_failure(res, "n=" + std::to_string(n) + " deviation=" + std::to_string(dev));
        }
        report.predicates.push_back(std::move(res));
    }

    {
        // Fourth cumulant of the iterate is r4 / n.
        PredicateResult res;
        res.name = "cumulant_scaling";
        for (const AtomicMeasure& mu : corpus) {
            const double r4 = boolean_cumulants(mu, 4)[3];
            for (long long n : ns) {
                ++res.checked;
                const double got = boolean_cumulants(clt_iterate(mu, n), 4)[3];
                const double want = r4 / static_cast<double>(n);
                if (std::abs(got - want) <= 1e-8 * std::abs(want))
                    ++res.passed;
                else
                    record_failure(res, "n=" + std::to_string(n) + " r4(mu_n)=" +
                                            std::to_string(got) + " r4/n=" + std::to_string(want) +
                                            " measure=" + serialize(mu));
            }
        }
        report.predicates.push_back(std::move(res));
    }

    return report;
}

}  // namespace boolconv
