#include "boolconv/rational.hpp"

#include <cmath>
#include <limits>

namespace boolconv {

namespace {

// den(z) values at or below this multiple of the coefficient magnitude are
// indistinguishable from an exact pole in double precision.
double pole_threshold(const Polynomial& den, double abs_z) {
    return 64.0 * std::numeric_limits<double>::epsilon() * den.magnitude_at(abs_z);
}

}  // namespace

RationalFn::RationalFn() : num_(), den_(Polynomial::constant(1.0)) {}

RationalFn::RationalFn(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw InvalidArgument("RationalFn: denominator is identically zero");
    const double lead = den_.leading();
    if (lead != 1.0) {
        num_ = (1.0 / lead) * num_;
        den_ = (1.0 / lead) * den_;
        // Guarantee an exact 1.0 on top regardless of rounding in the scale.
        std::vector<double> d = den_.coeffs();
        d.back() = 1.0;
        den_ = Polynomial(std::move(d));
    }
}

RationalFn RationalFn::from_polynomial(Polynomial p) {
    return RationalFn(std::move(p), Polynomial::constant(1.0));
}

std::complex<double> RationalFn::operator()(std::complex<double> z) const {
    const std::complex<double> d = den_(z);
    if (std::abs(d) <= pole_threshold(den_, std::abs(z)))
        throw PoleEvaluation("rational evaluation at a pole");
    return num_(z) / d;
}

double RationalFn::operator()(double x) const {
    const double d = den_(x);
    if (std::abs(d) <= pole_threshold(den_, std::abs(x)))
        throw PoleEvaluation("rational evaluation at a pole");
    return num_(x) / d;
}

RationalFn RationalFn::reciprocal() const {
    if (num_.is_zero()) throw InvalidArgument("reciprocal of the zero function");
    return RationalFn(den_, num_);
}

RationalFn operator+(const RationalFn& a, const RationalFn& b) {
    return RationalFn(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

}  // namespace boolconv
