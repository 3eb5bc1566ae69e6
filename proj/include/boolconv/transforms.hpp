#ifndef BOOLCONV_TRANSFORMS_HPP
#define BOOLCONV_TRANSFORMS_HPP

#include "boolconv/measure.hpp"
#include "boolconv/rational.hpp"

namespace boolconv {

/// The three transforms of one measure, kept on consistent unreduced
/// denominators: f = 1/g and k(z) = z - f(z).
struct TransformBundle {
    RationalFn g;  ///< Cauchy transform
    RationalFn f;  ///< reciprocal Cauchy transform
    RationalFn k;  ///< self-energy
    std::size_t source_atoms = 0;
};

/// G(z) = sum w_i / (z - x_i), assembled over the monic common denominator
/// prod (z - x_i). The numerator has degree (atoms - 1) and leading
/// coefficient equal to the total mass.
RationalFn cauchy_transform(const AtomicMeasure& mu);

/// F = 1/G. Real zeros of F sit exactly at the atoms, with weight 1/F' there.
RationalFn f_transform(const AtomicMeasure& mu);

/// K(z) = z - F(z) over F's denominator. Its expansion at infinity carries
/// the Boolean cumulants: K(z) = sum r_n z^{1-n}.
RationalFn k_transform(const AtomicMeasure& mu);

TransformBundle transform_bundle(const AtomicMeasure& mu);

/// Rebuild a measure from its reciprocal Cauchy transform: atom positions
/// are the real roots of f's numerator, and each weight is 1/f'(atom)
/// evaluated by the quotient rule on the unreduced quotient. Spurious
/// numerator roots shared with the denominator come out with vanishing
/// weight and are pruned. Throws NotAMeasure when the root structure or a
/// weight sign rules out a probability measure, and PrecisionFailure when
/// the weights drift from total mass one by more than 1e-6.
AtomicMeasure recover_measure(const RationalFn& f);

/// Boolean convolution: self-energies add. Computed as
/// F = z - (K_mu + K_nu) on the unreduced common denominator, then
/// recovered; before pruning the result carries
/// atoms(mu) + atoms(nu) - 1 numerator roots.
AtomicMeasure boolean_convolve(const AtomicMeasure& mu, const AtomicMeasure& nu);

/// Boolean convolution power with real exponent t >= 0, via the transform
/// identity F_t(z) = (1 - t) z + t F(z) (self-energy scales by t). Every
/// measure is infinitely divisible for this convolution, so the recovery
/// step succeeds for any t >= 0 up to numerical validity. Degrees do not
/// grow with t, which is what makes large-n central-limit iterates cheap.
AtomicMeasure boolean_power(const AtomicMeasure& mu, double t);

/// For standardized mu there is a unique probability measure nu with
/// F_mu(z) = z - G_nu(z); returns that nu (it has one atom fewer, and its
/// support is contained in the support hull of mu). Throws
/// PreconditionViolation when mu is not standardized within 1e-8.
AtomicMeasure auxiliary_measure(const AtomicMeasure& mu);

/// -(1/pi) Im g(x + i eps): the smoothed density seen through the boundary
/// values of a Cauchy transform. Diagnostic only; recovery never uses it.
double stieltjes_density_sample(const RationalFn& g, double x, double eps);

}  // namespace boolconv

#endif
