#ifndef BOOLCONV_MEASURE_HPP
#define BOOLCONV_MEASURE_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "boolconv/errors.hpp"

namespace boolconv {

struct Atom {
    double position = 0.0;
    double weight = 0.0;
};

/// Finitely supported probability measure: positive weights at strictly
/// ascending positions, total mass one. Construction validates, sorts,
/// merges near-duplicate positions (within 1e-11 * max(1, |x|)), prunes
/// weights below 1e-12 and renormalizes the rest.
class AtomicMeasure {
  public:
    /// Throws InvalidMeasure for weights below -1e-12 or total mass outside
    /// [1 - 1e-8, 1 + 1e-8].
    explicit AtomicMeasure(std::vector<Atom> atoms);

    const std::vector<Atom>& atoms() const { return atoms_; }
    std::size_t size() const { return atoms_.size(); }
    double min_position() const { return atoms_.front().position; }
    double max_position() const { return atoms_.back().position; }
    /// max |x| over the support; the natural bound K.
    double support_radius() const;

  private:
    std::vector<Atom> atoms_;
};

/// Validating constructor used by everything that assembles atom lists.
AtomicMeasure make_measure(std::vector<Atom> atoms);

/// (1/2) at -1 and (1/2) at +1: the symmetric two-point law that the
/// central-limit iteration converges to (and fixes).
AtomicMeasure bernoulli();
/// Unit mass at a.
AtomicMeasure dirac(double a);

/// sum w_i x_i^k; the zeroth moment is 1.
double moment(const AtomicMeasure& mu, unsigned k);

/// First `upto` Boolean cumulants r_1..r_upto, obtained from the moments by
/// the recursion m_n = sum_{k=1..n} r_k m_{n-k} with m_0 = 1 (equivalently,
/// the Laurent coefficients of the self-energy transform at infinity).
std::vector<double> boolean_cumulants(const AtomicMeasure& mu, unsigned upto);

/// Pushforward under x -> a*x, a > 0. The i-th Boolean cumulant scales by
/// a^i.
AtomicMeasure dilate(const AtomicMeasure& mu, double a);

/// Pushforward under x -> x^2 (colliding positions merge).
AtomicMeasure square_pushforward(const AtomicMeasure& mu);

/// Affine pushforward x -> (x - mean)/sqrt(variance); the result has mean 0
/// and variance 1. Throws DegenerateMeasure when the variance vanishes.
AtomicMeasure standardize(const AtomicMeasure& mu);

/// Whether mean and variance are within tol of 0 and 1.
bool is_standardized(const AtomicMeasure& mu, double tol = 1e-8);

/// Six-atom standardized family with fourth moment exactly 1 + 2 eps^3:
/// mass eps/2 at each of +-sqrt(1 +- eps) and 1/2 - eps at +-1. Its
/// distance to bernoulli() stays >= eps/4, which pins the cube-root
/// exponent in the static rate bound as sharp. Requires 0 < eps < 1/2.
AtomicMeasure sharpness_measure(double eps);

/// Closed-form two-atom standardized family indexed by n >= 1:
///   p_n = (sqrt(1+4n)+1) / (2 sqrt(1+4n)) at x_n = (1-sqrt(1+4n))/sqrt(4n),
///   q_n = (sqrt(1+4n)-1) / (2 sqrt(1+4n)) at y_n = (1+sqrt(1+4n))/sqrt(4n).
/// Member n equals the n-th central-limit iterate of member 1.
AtomicMeasure example_measure(long long n);

/// Right-continuous step CDF of an atomic measure.
struct StepCdf {
    std::vector<double> jumps;       // ascending atom positions
    std::vector<double> cumulative;  // running weight sums, last == 1

    /// F(x), right-continuous (includes an atom exactly at x).
    double value_at(double x) const;
    /// F(x-): excludes an atom exactly at x.
    double left_limit_at(double x) const;
};

StepCdf cdf(const AtomicMeasure& mu);

/// Levy distance: the infimum of eps > 0 such that
///   F(x - eps) - eps <= G(x) <= F(x + eps) + eps   for all x.
/// For step CDFs the sandwich can only fail right after an upward jump of
/// one side, so feasibility at a given eps is decided at the jump points of
/// both CDFs (offset by eps); eps itself is found by 60 bisection steps
/// over [0, 1 + diameter], which certifies far better than 1e-9.
double levy_distance(const AtomicMeasure& mu, const AtomicMeasure& nu);

/// sup_x |F(x) - G(x)|, attained at a jump point or its left limit.
double kolmogorov_distance(const AtomicMeasure& mu, const AtomicMeasure& nu);

}  // namespace boolconv

#endif
