#ifndef BOOLCONV_POLYNOMIAL_HPP
#define BOOLCONV_POLYNOMIAL_HPP

#include <complex>
#include <span>
#include <vector>

#include "boolconv/errors.hpp"

namespace boolconv {

/// Dense univariate polynomial with real coefficients, stored in ascending
/// degree. Trailing coefficients that are exactly zero are trimmed, so the
/// zero polynomial has an empty coefficient list and degree() == -1.
class Polynomial {
  public:
    Polynomial() = default;
    explicit Polynomial(std::vector<double> coeffs);

    static Polynomial constant(double c);
    /// c * z^k
    static Polynomial monomial(std::size_t k, double c = 1.0);
    /// Monic product of (z - r) over the given roots.
    static Polynomial from_roots(std::span<const double> roots);

    bool is_zero() const { return coeffs_.empty(); }
    /// Degree after trailing-zero trimming; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    double leading() const;
    /// Coefficient of z^k (zero beyond the degree).
    double coeff(std::size_t k) const;
    const std::vector<double>& coeffs() const { return coeffs_; }

    double operator()(double x) const;
    std::complex<double> operator()(std::complex<double> z) const;

    Polynomial derivative() const;
    /// q with q(z) = p(a*z); coefficient k picks up a factor a^k. a must be
    /// nonzero.
    Polynomial scale_argument(double a) const;
    /// z * p(z); used when assembling rational numerators.
    Polynomial shifted_up() const;

    /// sum_i |c_i| r^i for r = |x|; the natural scale for residual and
    /// near-pole tests.
    double magnitude_at(double x) const;
    double max_abs_coeff() const;

    /// Drop leading coefficients with |c| <= rel_tol * max|c|. Needed where
    /// exact cancellation of the top terms is expected but rounding leaves
    /// dust (e.g. self-energy numerators of centered measures).
    Polynomial without_leading_dust(double rel_tol) const;

    Polynomial operator-() const;
    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(double s, const Polynomial& p);

  private:
    void trim();
    std::vector<double> coeffs_;
};

/// Cauchy bound 1 + max|c_i| / |c_lead|: all roots lie strictly inside.
double cauchy_root_bound(const Polynomial& p);

/// All real roots of a nonconstant polynomial whose roots are known to be
/// real and simple, in ascending order.
///
/// Isolation works by derivative interlacing: the real roots of p' are
/// computed recursively, and each sign change of p between consecutive
/// critical points (or the outer Cauchy bound) brackets exactly one root.
/// Each bracket is bisected to width 1e-13 * max(1, |root|) and polished
/// with one Newton step. If isolation produces fewer brackets than the
/// degree, or a residual check fails, the premise was violated and
/// RootStructureViolation is thrown.
std::vector<double> real_roots(const Polynomial& p);

}  // namespace boolconv

#endif
