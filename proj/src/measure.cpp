#include "boolconv/measure.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace boolconv {

namespace {

constexpr double kNegativeWeightTol = 1e-12;
constexpr double kMassInputTol = 1e-8;
constexpr double kMergeRelTol = 1e-11;
constexpr double kPruneThreshold = 1e-12;

long double ipow(long double x, unsigned k) {
    long double y = 1.0L;
    while (k > 0) {
        if (k & 1u) y *= x;
        x *= x;
        k >>= 1u;
    }
    return y;
}

// Moments of iterates sit within an ulp of the limit values, so the
// cumulant recursion cancels almost everything; extended precision keeps
// the surviving digits meaningful.
long double moment_ld(const AtomicMeasure& mu, unsigned k) {
    if (k == 0) return 1.0L;
    long double m = 0.0L;
    for (const Atom& a : mu.atoms())
        m += static_cast<long double>(a.weight) * ipow(a.position, k);
    return m;
}

}  // namespace

AtomicMeasure::AtomicMeasure(std::vector<Atom> atoms) {
    for (const Atom& a : atoms) {
        if (!std::isfinite(a.position) || !std::isfinite(a.weight))
            throw InvalidMeasure("atom with non-finite position or weight");
        if (a.weight < -kNegativeWeightTol)
            throw InvalidMeasure("negative weight " + std::to_string(a.weight));
    }
    double total = 0.0;
    for (Atom& a : atoms) {
        if (a.weight < 0.0) a.weight = 0.0;
        total += a.weight;
    }
    if (std::abs(total - 1.0) > kMassInputTol)
        throw InvalidMeasure("total mass " + std::to_string(total) + " is not 1");

    std::sort(atoms.begin(), atoms.end(),
              [](const Atom& a, const Atom& b) { return a.position < b.position; });

    // Merge near-duplicates into their weighted mean.
    std::vector<Atom> merged;
    merged.reserve(atoms.size());
    for (const Atom& a : atoms) {
        if (!merged.empty()) {
            Atom& last = merged.back();
            const double tol =
                kMergeRelTol * std::max({1.0, std::abs(last.position), std::abs(a.position)});
            if (a.position - last.position <= tol) {
                const double w = last.weight + a.weight;
                if (w > 0.0)
                    last.position = (last.position * last.weight + a.position * a.weight) / w;
                last.weight = w;
                continue;
            }
        }
        merged.push_back(a);
    }

    std::erase_if(merged, [](const Atom& a) { return a.weight < kPruneThreshold; });
    if (merged.empty()) throw InvalidMeasure("no atoms left after pruning");

    double kept = 0.0;
    for (const Atom& a : merged) kept += a.weight;
    for (Atom& a : merged) a.weight /= kept;

    atoms_ = std::move(merged);
}

double AtomicMeasure::support_radius() const {
    return std::max(std::abs(min_position()), std::abs(max_position()));
}

AtomicMeasure make_measure(std::vector<Atom> atoms) {
    return AtomicMeasure(std::move(atoms));
}

AtomicMeasure bernoulli() {
    return make_measure({{-1.0, 0.5}, {1.0, 0.5}});
}

AtomicMeasure dirac(double a) {
    return make_measure({{a, 1.0}});
}

double moment(const AtomicMeasure& mu, unsigned k) {
    return static_cast<double>(moment_ld(mu, k));
}

std::vector<double> boolean_cumulants(const AtomicMeasure& mu, unsigned upto) {
    if (upto < 1) throw InvalidArgument("boolean_cumulants: need upto >= 1");
    std::vector<long double> m(upto + 1);
    m[0] = 1.0L;
    for (unsigned k = 1; k <= upto; ++k) m[k] = moment_ld(mu, k);
    std::vector<long double> r(upto);
    for (unsigned n = 1; n <= upto; ++n) {
        long double acc = m[n];
        for (unsigned k = 1; k < n; ++k) acc -= r[k - 1] * m[n - k];
        r[n - 1] = acc;
    }
    return std::vector<double>(r.begin(), r.end());
}

AtomicMeasure dilate(const AtomicMeasure& mu, double a) {
    if (!(a > 0.0)) throw InvalidArgument("dilate: factor must be positive");
    std::vector<Atom> atoms = mu.atoms();
    for (Atom& at : atoms) at.position *= a;
    return make_measure(std::move(atoms));
}

AtomicMeasure square_pushforward(const AtomicMeasure& mu) {
    std::vector<Atom> atoms = mu.atoms();
    for (Atom& at : atoms) at.position *= at.position;
    return make_measure(std::move(atoms));
}

AtomicMeasure standardize(const AtomicMeasure& mu) {
    const double m1 = moment(mu, 1);
    const double var = moment(mu, 2) - m1 * m1;
    if (var <= 1e-15 * std::max(1.0, moment(mu, 2)))
        throw DegenerateMeasure("standardize: zero variance");
    const double sigma = std::sqrt(var);
    std::vector<Atom> atoms = mu.atoms();
    for (Atom& a : atoms) a.position = (a.position - m1) / sigma;
    AtomicMeasure out = make_measure(std::move(atoms));
    if (!is_standardized(out, 1e-10))
        throw PrecisionFailure("standardize: result drifted from mean 0 / variance 1");
    return out;
}

bool is_standardized(const AtomicMeasure& mu, double tol) {
    const double m1 = moment(mu, 1);
    const double m2 = moment(mu, 2);
    return std::abs(m1) <= tol && std::abs(m2 - 1.0) <= tol;
}

AtomicMeasure sharpness_measure(double eps) {
    if (!(eps > 0.0 && eps < 0.5))
        throw InvalidArgument("sharpness_measure: eps must lie in (0, 1/2)");
    const double lo = std::sqrt(1.0 - eps);
    const double hi = std::sqrt(1.0 + eps);
    const double side = 0.5 - eps;
    const double tip = 0.5 * eps;
    return make_measure({{-hi, tip}, {-1.0, side}, {-lo, tip}, {lo, tip}, {1.0, side}, {hi, tip}});
}

AtomicMeasure example_measure(long long n) {
    if (n < 1) throw InvalidArgument("example_measure: n must be >= 1");
    const double nn = static_cast<double>(n);
    const double s = std::sqrt(1.0 + 4.0 * nn);
    const double root4n = std::sqrt(4.0 * nn);
    const double p = 0.5 * (s + 1.0) / s;
    const double q = 0.5 * (s - 1.0) / s;
    const double x = (1.0 - s) / root4n;
    const double y = (1.0 + s) / root4n;
    return make_measure({{x, p}, {y, q}});
}

double StepCdf::value_at(double x) const {
    const auto it = std::upper_bound(jumps.begin(), jumps.end(), x);
    if (it == jumps.begin()) return 0.0;
    return cumulative[static_cast<std::size_t>(it - jumps.begin()) - 1];
}

double StepCdf::left_limit_at(double x) const {
    const auto it = std::lower_bound(jumps.begin(), jumps.end(), x);
    if (it == jumps.begin()) return 0.0;
    return cumulative[static_cast<std::size_t>(it - jumps.begin()) - 1];
}

StepCdf cdf(const AtomicMeasure& mu) {
    StepCdf out;
    out.jumps.reserve(mu.size());
    out.cumulative.reserve(mu.size());
    double run = 0.0;
    for (const Atom& a : mu.atoms()) {
        run += a.weight;
        out.jumps.push_back(a.position);
        out.cumulative.push_back(run);
    }
    return out;
}

namespace {

// The sandwich F(x-eps)-eps <= G(x) <= F(x+eps)+eps, as a step function of
// x, can only peak right after an upward jump. Checking the first
// inequality at x = j + eps over jumps j of F, and the second at jumps of
// G, therefore decides feasibility. The test is symmetric in (F, G).
bool levy_feasible(const StepCdf& f, const StepCdf& g, double eps) {
    for (std::size_t i = 0; i < f.jumps.size(); ++i)
        if (f.cumulative[i] - g.value_at(f.jumps[i] + eps) > eps) return false;
    for (std::size_t i = 0; i < g.jumps.size(); ++i)
        if (g.cumulative[i] - f.value_at(g.jumps[i] + eps) > eps) return false;
    return true;
}

}  // namespace

double levy_distance(const AtomicMeasure& mu, const AtomicMeasure& nu) {
    const StepCdf f = cdf(mu);
    const StepCdf g = cdf(nu);
    if (levy_feasible(f, g, 0.0)) return 0.0;
    double lo = 0.0;
    double hi = 1.0 + std::max(mu.max_position(), nu.max_position()) -
                std::min(mu.min_position(), nu.min_position());
    for (int it = 0; it < 60; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (levy_feasible(f, g, mid))
            hi = mid;
        else
            lo = mid;
    }
    return hi;
}

double kolmogorov_distance(const AtomicMeasure& mu, const AtomicMeasure& nu) {
    const StepCdf f = cdf(mu);
    const StepCdf g = cdf(nu);
    double sup = 0.0;
    auto probe = [&](double x) {
        sup = std::max(sup, std::abs(f.value_at(x) - g.value_at(x)));
        sup = std::max(sup, std::abs(f.left_limit_at(x) - g.left_limit_at(x)));
    };
    for (double x : f.jumps) probe(x);
    for (double x : g.jumps) probe(x);
    return sup;
}

}  // namespace boolconv
