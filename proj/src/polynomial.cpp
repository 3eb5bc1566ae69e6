#include "boolconv/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace boolconv {

namespace {

constexpr double kRootWidthTol = 1e-13;
constexpr double kResidualRelTol = 1e-9;

}  // namespace

Polynomial::Polynomial(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0.0) coeffs_.pop_back();
}

Polynomial Polynomial::constant(double c) {
    return Polynomial(std::vector<double>{c});
}

Polynomial Polynomial::monomial(std::size_t k, double c) {
    std::vector<double> v(k + 1, 0.0);
    v[k] = c;
    return Polynomial(std::move(v));
}

Polynomial Polynomial::from_roots(std::span<const double> roots) {
    Polynomial p = constant(1.0);
    for (double r : roots) p = p * Polynomial({-r, 1.0});
    return p;
}

double Polynomial::leading() const {
    return coeffs_.empty() ? 0.0 : coeffs_.back();
}

double Polynomial::coeff(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : 0.0;
}

double Polynomial::operator()(double x) const {
    double y = 0.0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) y = y * x + coeffs_[i];
    return y;
}

std::complex<double> Polynomial::operator()(std::complex<double> z) const {
    std::complex<double> y = 0.0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) y = y * z + coeffs_[i];
    return y;
}

Polynomial Polynomial::derivative() const {
    if (coeffs_.size() <= 1) return Polynomial();
    std::vector<double> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        d[i - 1] = static_cast<double>(i) * coeffs_[i];
    return Polynomial(std::move(d));
}

Polynomial Polynomial::scale_argument(double a) const {
    if (a == 0.0) throw InvalidArgument("scale_argument: factor must be nonzero");
    std::vector<double> s(coeffs_);
    double pw = 1.0;
    for (std::size_t i = 1; i < s.size(); ++i) {
        pw *= a;
        s[i] *= pw;
    }
    return Polynomial(std::move(s));
}

Polynomial Polynomial::shifted_up() const {
    if (is_zero()) return Polynomial();
    std::vector<double> s(coeffs_.size() + 1, 0.0);
    std::copy(coeffs_.begin(), coeffs_.end(), s.begin() + 1);
    return Polynomial(std::move(s));
}

double Polynomial::magnitude_at(double x) const {
    const double r = std::abs(x);
    double y = 0.0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) y = y * r + std::abs(coeffs_[i]);
    return y;
}

double Polynomial::max_abs_coeff() const {
    double m = 0.0;
    for (double c : coeffs_) m = std::max(m, std::abs(c));
    return m;
}

Polynomial Polynomial::without_leading_dust(double rel_tol) const {
    const double tol = rel_tol * max_abs_coeff();
    std::vector<double> c(coeffs_);
    while (!c.empty() && std::abs(c.back()) <= tol) c.pop_back();
    return Polynomial(std::move(c));
}

Polynomial Polynomial::operator-() const {
    std::vector<double> c(coeffs_);
    for (double& v : c) v = -v;
    return Polynomial(std::move(c));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<double> c(std::max(a.coeffs_.size(), b.coeffs_.size()), 0.0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
    return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    std::vector<double> c(std::max(a.coeffs_.size(), b.coeffs_.size()), 0.0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] -= b.coeffs_[i];
    return Polynomial(std::move(c));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    std::vector<double> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0.0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Polynomial(std::move(c));
}

Polynomial operator*(double s, const Polynomial& p) {
    std::vector<double> c(p.coeffs_);
    for (double& v : c) v *= s;
    return Polynomial(std::move(c));
}

double cauchy_root_bound(const Polynomial& p) {
    const int deg = p.degree();
    if (deg < 1) throw InvalidArgument("cauchy_root_bound: polynomial must be nonconstant");
    double m = 0.0;
    for (int i = 0; i < deg; ++i) m = std::max(m, std::abs(p.coeff(i)));
    return 1.0 + m / std::abs(p.leading());
}

namespace {

long double horner_ld(const std::vector<double>& coeffs, long double x) {
    long double y = 0.0L;
    for (std::size_t i = coeffs.size(); i-- > 0;) y = y * x + coeffs[i];
    return y;
}

// Bisect a bracketed sign change down to kRootWidthTol * max(1, |root|),
// then take one Newton step. The step runs in extended precision: the
// coefficients are doubles, so long-double Horner evaluates the exact
// target polynomial and the root lands within an ulp.
double refine_root(const Polynomial& p, const Polynomial& dp, double lo, double hi,
                   double flo) {
    const bool lo_neg = flo < 0.0;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (hi - lo <= kRootWidthTol * std::max(1.0, std::abs(mid))) break;
        const double fmid = p(mid);
        if (fmid == 0.0) return mid;
        if ((fmid < 0.0) == lo_neg)
            lo = mid;
        else
            hi = mid;
    }
    long double r = 0.5L * (static_cast<long double>(lo) + static_cast<long double>(hi));
    const long double slope = horner_ld(dp.coeffs(), r);
    if (slope != 0.0L) {
        const long double polished = r - horner_ld(p.coeffs(), r) / slope;
        if (polished >= lo && polished <= hi) r = polished;
    }
    return static_cast<double>(r);
}

}  // namespace

std::vector<double> real_roots(const Polynomial& p) {
    const int deg = p.degree();
    if (deg < 1) throw InvalidArgument("real_roots: polynomial must be nonconstant");
    if (deg == 1) return {-p.coeff(0) / p.coeff(1)};

    const double bound = cauchy_root_bound(p) * (1.0 + 1e-12);
    const std::vector<double> critical = real_roots(p.derivative());

    std::vector<double> pts;
    pts.reserve(critical.size() + 2);
    pts.push_back(-bound);
    for (double c : critical)
        if (c > -bound && c < bound) pts.push_back(c);
    pts.push_back(bound);

    const Polynomial dp = p.derivative();
    std::vector<double> roots;
    roots.reserve(static_cast<std::size_t>(deg));
    double fprev = p(pts.front());
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        const double fnext = p(pts[i + 1]);
        if (fprev == 0.0 || fnext == 0.0) {
            // A root exactly at a critical point means a multiple root.
            throw RootStructureViolation("real_roots: root coincides with a critical point");
        }
        if ((fprev < 0.0) != (fnext < 0.0))
            roots.push_back(refine_root(p, dp, pts[i], pts[i + 1], fprev));
        fprev = fnext;
    }

    if (static_cast<int>(roots.size()) != deg)
        throw RootStructureViolation(
            "real_roots: isolated " + std::to_string(roots.size()) + " roots for degree " +
            std::to_string(deg) + "; input is not real-simple-rooted");

    for (double r : roots) {
        const double residual = std::abs(p(r));
        const double scale = p.magnitude_at(r);
        if (residual > kResidualRelTol * scale + std::numeric_limits<double>::min())
            throw RootStructureViolation("real_roots: residual check failed at root " +
                                         std::to_string(r));
    }
    return roots;
}

}  // namespace boolconv
