#ifndef BOOLCONV_RATIONAL_HPP
#define BOOLCONV_RATIONAL_HPP

#include <complex>

#include "boolconv/polynomial.hpp"

namespace boolconv {

/// Ratio of two polynomials with a monic denominator. No gcd cancellation is
/// ever attempted: degrees stay as constructed, and common roots introduced
/// by arithmetic are tolerated downstream (they recover as zero-weight
/// atoms). Floating-point gcd would be fragile for no benefit at the degrees
/// used here.
class RationalFn {
  public:
    /// The zero function 0/1.
    RationalFn();
    /// Throws InvalidArgument if den is identically zero. Both parts are
    /// rescaled so the denominator is monic.
    RationalFn(Polynomial num, Polynomial den);

    static RationalFn from_polynomial(Polynomial p);

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    /// Horner evaluation num(z)/den(z). Throws PoleEvaluation when den(z)
    /// is within rounding distance of zero.
    std::complex<double> operator()(std::complex<double> z) const;
    double operator()(double x) const;

    /// 1/f with the monic-denominator normalization reapplied. Throws
    /// InvalidArgument for the zero function.
    RationalFn reciprocal() const;

    /// Cross-multiplied sum over the common denominator.
    friend RationalFn operator+(const RationalFn& a, const RationalFn& b);

  private:
    Polynomial num_;
    Polynomial den_;
};

}  // namespace boolconv

#endif
