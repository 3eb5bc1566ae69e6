#include "boolconv/transforms.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace boolconv {

namespace {

constexpr double kWeightRejectTol = 1e-10;
constexpr double kWeightSumTol = 1e-6;
constexpr double kLeadingDustRelTol = 1e-9;

// z * f.den - f.num over f.den; shared by the self-energy and the
// convolution assembly. The top coefficient cancels structurally (the
// self-energy of a probability measure is bounded at infinity), so the
// rounding dust it leaves is stripped.
Polynomial self_energy_numerator(const RationalFn& f) {
    return (f.den().shifted_up() - f.num()).without_leading_dust(1e-12);
}

long double horner_ld(const Polynomial& p, long double x) {
    long double y = 0.0L;
    for (std::size_t i = p.coeffs().size(); i-- > 0;) y = y * x + p.coeffs()[i];
    return y;
}

}  // namespace

RationalFn cauchy_transform(const AtomicMeasure& mu) {
    const auto& atoms = mu.atoms();
    std::vector<double> positions;
    positions.reserve(atoms.size());
    for (const Atom& a : atoms) positions.push_back(a.position);

    const Polynomial den = Polynomial::from_roots(positions);
    Polynomial num;
    for (std::size_t i = 0; i < atoms.size(); ++i) {
        Polynomial others = Polynomial::constant(atoms[i].weight);
        for (std::size_t j = 0; j < atoms.size(); ++j)
            if (j != i) others = others * Polynomial({-positions[j], 1.0});
        num = num + others;
    }
    return RationalFn(num, den);
}

RationalFn f_transform(const AtomicMeasure& mu) {
    return cauchy_transform(mu).reciprocal();
}

RationalFn k_transform(const AtomicMeasure& mu) {
    const RationalFn f = f_transform(mu);
    return RationalFn(self_energy_numerator(f), f.den());
}

TransformBundle transform_bundle(const AtomicMeasure& mu) {
    TransformBundle b;
    b.g = cauchy_transform(mu);
    b.f = b.g.reciprocal();
    b.k = RationalFn(self_energy_numerator(b.f), b.f.den());
    b.source_atoms = mu.size();
    return b;
}

AtomicMeasure recover_measure(const RationalFn& f) {
    std::vector<double> roots;
    try {
        roots = real_roots(f.num());
    } catch (const RootStructureViolation& e) {
        throw NotAMeasure(std::string("recover_measure: ") + e.what());
    }

    const Polynomial dnum = f.num().derivative();
    const Polynomial dden = f.den().derivative();

    std::vector<Atom> atoms;
    atoms.reserve(roots.size());
    double total = 0.0;
    for (double a : roots) {
        const long double den_a = horner_ld(f.den(), a);
        // 1/F'(a) with F' by the quotient rule; written so a spurious root
        // shared with the denominator degrades to weight zero instead of
        // 0/0. Extended precision keeps the weights as accurate as the
        // polished roots.
        const long double slope =
            horner_ld(dnum, a) * den_a - horner_ld(f.num(), a) * horner_ld(dden, a);
        double w = slope != 0.0L ? static_cast<double>(den_a * den_a / slope) : 0.0;
        if (!std::isfinite(w)) w = 0.0;
        if (w < -kWeightRejectTol)
            throw NotAMeasure("recover_measure: weight " + std::to_string(w) + " at atom " +
                              std::to_string(a));
        if (w < 0.0) w = 0.0;
        total += w;
        atoms.push_back({a, w});
    }

    if (std::abs(total - 1.0) > kWeightSumTol)
        throw PrecisionFailure("recover_measure: weights sum to " + std::to_string(total));
    for (Atom& at : atoms) at.weight /= total;
    return make_measure(std::move(atoms));
}

AtomicMeasure boolean_convolve(const AtomicMeasure& mu, const AtomicMeasure& nu) {
    const RationalFn ksum = k_transform(mu) + k_transform(nu);
    const RationalFn f(ksum.den().shifted_up() - ksum.num(), ksum.den());
    return recover_measure(f);
}

AtomicMeasure boolean_power(const AtomicMeasure& mu, double t) {
    if (!(t >= 0.0)) throw InvalidArgument("boolean_power: exponent must be >= 0");
    if (t == 0.0) return dirac(0.0);  // the convolution identity
    if (t == 1.0) return mu;
    const RationalFn f = f_transform(mu);
    const Polynomial num = (1.0 - t) * f.den().shifted_up() + t * f.num();
    return recover_measure(RationalFn(num, f.den()));
}

AtomicMeasure auxiliary_measure(const AtomicMeasure& mu) {
    if (!is_standardized(mu))
        throw PreconditionViolation("auxiliary_measure: input is not standardized");
    const RationalFn f = f_transform(mu);
    // G_nu = z - F_mu. Centering makes the top two coefficients cancel
    // exactly in exact arithmetic; strip the rounding dust they leave.
    const Polynomial gnum = self_energy_numerator(f).without_leading_dust(kLeadingDustRelTol);
    const RationalFn g(gnum, f.den());
    return recover_measure(g.reciprocal());
}

double stieltjes_density_sample(const RationalFn& g, double x, double eps) {
    if (!(eps > 0.0)) throw InvalidArgument("stieltjes_density_sample: eps must be positive");
    const std::complex<double> v = g(std::complex<double>(x, eps));
    return -v.imag() / std::numbers::pi;
}

}  // namespace boolconv
