#ifndef BOOLCONV_CLT_HPP
#define BOOLCONV_CLT_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "boolconv/measure.hpp"

namespace boolconv {

/// n-th central-limit iterate: the n-fold Boolean convolution power of a
/// standardized measure, dilated by 1/sqrt(n). Built in one step from the
/// transform identity F_n(z) = (1 - n) z + sqrt(n) F(sqrt(n) z), so the
/// cost and the atom count do not grow with n. Throws PrecisionFailure if
/// the recovered iterate drifts from mean 0 / variance 1 or loses atoms.
AtomicMeasure clt_iterate(const AtomicMeasure& mu, long long n);

/// Rate bound for the distance of the n-th iterate to bernoulli():
/// (7/2) * ((m4 - 1) / n)^(1/3). Finite fourth moment is automatic here.
double thm1_bound(const AtomicMeasure& mu, long long n);

/// Static form of the same bound, (7/2) * (m4 - 1)^(1/3), valid for any
/// standardized measure against bernoulli().
double static_levy_bound(const AtomicMeasure& mu);

/// Decomposition of a bounded-support iterate: two outlying atoms x1 < 0 <
/// x2 near -1 and +1 plus residual mass r inside [-K/sqrt(n), K/sqrt(n)],
/// with the verdicts of the structure inequalities.
struct StructureReport {
    long long n = 0;
    double k_bound = 0.0;  ///< support radius K of the input
    double x1 = 0.0, x2 = 0.0;
    double p = 0.0, q = 0.0, r = 0.0;
    double levy_to_b = 0.0;
    double thm2_bound = 0.0;  ///< 2K/sqrt(n)
    std::vector<std::pair<std::string, bool>> checks;

    bool all_pass() const;
};

/// Runs the iterate and classifies its atoms against the two-outlier
/// structure. Requires supp(mu) within [-k_bound, k_bound], sqrt(n) >
/// k_bound and mu standardized (PreconditionViolation otherwise). Atoms
/// count as outliers when |x| > K/sqrt(n) + 1e-12; anything other than
/// exactly one outlier per side raises StructureViolation.
StructureReport thm2_structure(const AtomicMeasure& mu, double k_bound, long long n);

/// One row of the convergence table for a given n.
struct ConvergenceRow {
    long long n = 0;
    double levy = 0.0;
    double kolmogorov = 0.0;
    double thm1_bound = 0.0;
    std::optional<double> thm2_bound;  ///< present when k_bound given and sqrt(n) > k_bound
    double m4 = 0.0;        ///< fourth moment of the iterate
    double r4_of_mun = 0.0; ///< fourth Boolean cumulant of the iterate
};

/// Distances and bounds of the iterates for each n (ascending, nonempty).
std::vector<ConvergenceRow> convergence_table(const AtomicMeasure& mu,
                                              const std::vector<long long>& ns,
                                              std::optional<double> k_bound);

}  // namespace boolconv

#endif
