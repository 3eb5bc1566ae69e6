#include "boolconv/clt.hpp"

#include <algorithm>
#include <cmath>

#include "boolconv/transforms.hpp"

namespace boolconv {

namespace {

constexpr double kStandardizedTol = 1e-8;
constexpr double kOutlierSlack = 1e-12;
constexpr double kCheckSlack = 1e-12;

}  // namespace

AtomicMeasure clt_iterate(const AtomicMeasure& mu, long long n) {
    if (n < 1) throw InvalidArgument("clt_iterate: n must be >= 1");
    if (!is_standardized(mu, kStandardizedTol))
        throw PreconditionViolation("clt_iterate: input is not standardized");
    if (n == 1) return mu;

    const double s = std::sqrt(static_cast<double>(n));
    const RationalFn f = f_transform(mu);
    const Polynomial den = f.den().scale_argument(s);
    const Polynomial num =
        (1.0 - static_cast<double>(n)) * den.shifted_up() + s * f.num().scale_argument(s);

    AtomicMeasure out = recover_measure(RationalFn(num, den));
    if (out.size() != mu.size())
        throw PrecisionFailure("clt_iterate: atom count changed at n = " + std::to_string(n));
    if (!is_standardized(out, kStandardizedTol))
        throw PrecisionFailure("clt_iterate: iterate drifted from mean 0 / variance 1 at n = " +
                               std::to_string(n));
    return out;
}

double thm1_bound(const AtomicMeasure& mu, long long n) {
    if (n < 1) throw InvalidArgument("thm1_bound: n must be >= 1");
    const double r4 = std::max(moment(mu, 4) - 1.0, 0.0);
    return 3.5 * std::cbrt(r4 / static_cast<double>(n));
}

double static_levy_bound(const AtomicMeasure& mu) {
    if (!is_standardized(mu, kStandardizedTol))
        throw PreconditionViolation("static_levy_bound: input is not standardized");
    return 3.5 * std::cbrt(std::max(moment(mu, 4) - 1.0, 0.0));
}

bool StructureReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.second; });
}

StructureReport thm2_structure(const AtomicMeasure& mu, double k_bound, long long n) {
    if (mu.support_radius() > k_bound * (1.0 + 1e-12))
        throw PreconditionViolation("thm2_structure: support exceeds the stated bound");
    const double sqrt_n = std::sqrt(static_cast<double>(n));
    if (!(sqrt_n > k_bound))
        throw PreconditionViolation("thm2_structure: requires sqrt(n) > k_bound");
    if (!is_standardized(mu, kStandardizedTol))
        throw PreconditionViolation("thm2_structure: input is not standardized");

    const AtomicMeasure iterate = clt_iterate(mu, n);
    const double inner = k_bound / sqrt_n;

    std::vector<Atom> outliers;
    double r = 0.0;
    for (const Atom& a : iterate.atoms()) {
        if (std::abs(a.position) > inner + kOutlierSlack)
            outliers.push_back(a);
        else
            r += a.weight;
    }
    if (outliers.size() != 2 || !(outliers[0].position < 0.0) || !(outliers[1].position > 0.0)) {
        std::string where;
        for (const Atom& a : iterate.atoms())
            where += " (" + std::to_string(a.position) + ", " + std::to_string(a.weight) + ")";
        throw StructureViolation("thm2_structure: expected one outlier on each side of [" +
                                 std::to_string(-inner) + ", " + std::to_string(inner) +
                                 "] at n = " + std::to_string(n) + "; atoms:" + where);
    }

    StructureReport rep;
    rep.n = n;
    rep.k_bound = k_bound;
    rep.x1 = outliers[0].position;
    rep.x2 = outliers[1].position;
    rep.p = outliers[0].weight;
    rep.q = outliers[1].weight;
    rep.r = r;
    rep.levy_to_b = levy_distance(iterate, bernoulli());
    rep.thm2_bound = 2.0 * k_bound / sqrt_n;

    const double lo = 0.5 - 2.0 * inner - kCheckSlack;
    const double hi = 0.5 + 0.5 * inner + kCheckSlack;
    rep.checks = {
        {"x1_near_minus_one", std::abs(-1.0 - rep.x1) <= inner + kCheckSlack},
        {"x2_near_plus_one", std::abs(1.0 - rep.x2) <= inner + kCheckSlack},
        {"p_in_range", rep.p >= lo && rep.p <= hi},
        {"q_in_range", rep.q >= lo && rep.q <= hi},
        {"r_below_bound", rep.r < 4.0 * inner},
        {"levy_within_bound", rep.levy_to_b <= rep.thm2_bound + kCheckSlack},
    };
    return rep;
}

std::vector<ConvergenceRow> convergence_table(const AtomicMeasure& mu,
                                              const std::vector<long long>& ns,
                                              std::optional<double> k_bound) {
    if (ns.empty()) throw InvalidArgument("convergence_table: empty n list");
    if (!std::is_sorted(ns.begin(), ns.end()))
        throw InvalidArgument("convergence_table: n values must be ascending");
    if (!is_standardized(mu, kStandardizedTol))
        throw PreconditionViolation("convergence_table: input is not standardized");

    const AtomicMeasure b = bernoulli();
    std::vector<ConvergenceRow> rows;
    rows.reserve(ns.size());
    for (long long n : ns) {
        const AtomicMeasure iterate = clt_iterate(mu, n);
        ConvergenceRow row;
        row.n = n;
        row.levy = levy_distance(iterate, b);
        row.kolmogorov = kolmogorov_distance(iterate, b);
        row.thm1_bound = thm1_bound(mu, n);
        if (k_bound && std::sqrt(static_cast<double>(n)) > *k_bound)
            row.thm2_bound = 2.0 * (*k_bound) / std::sqrt(static_cast<double>(n));
        row.m4 = moment(iterate, 4);
        row.r4_of_mun = boolean_cumulants(iterate, 4)[3];
        rows.push_back(row);
    }
    return rows;
}

}  // namespace boolconv
