#include "bmoa/mobius.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace bmoa {

cplx MobiusMap::operator()(cplx z) const { return sigma(base_, z); }

cplx sigma(const DiscPoint& a, cplx z) {
    if (std::abs(z) > 1.0 + 1e-12) throw std::domain_error("sigma: |z| > 1");
    const cplx denom = cplx(1.0, 0.0) - std::conj(a.value()) * z;
    if (std::abs(denom) < 1e-300) throw std::domain_error("sigma: z = 1/conj(a)");
    return (a.value() - z) / denom;
}

double log_weight(const DiscPoint& a) {
    const double m2 = std::norm(a.value());
    return std::log(2.0 / (1.0 - m2));
}

double poisson_kernel(const DiscPoint& a, double theta) {
    return poisson_kernel(a, cplx(std::cos(theta), std::sin(theta)));
}

double poisson_kernel(const DiscPoint& a, cplx boundary_point) {
    const double num = 1.0 - std::norm(a.value());
    const double den = std::norm(boundary_point - a.value());
    return num / den;
}

double s_factor(double r) {
    if (r <= 0.0 || r >= 1.0) throw std::domain_error("s_factor: r must lie in (0,1)");
    return 2.0 * (1.0 + r) / (1.0 - r);
}

bool in_Q(cplx z, double r, double t) {
    if (r <= 0.0 || r >= 1.0 || t <= 0.0 || t >= 1.0)
        throw std::domain_error("in_Q: parameters must lie in (0,1)");
    const double m = std::abs(z);
    if (m > 1.0 + 1e-12) throw std::domain_error("in_Q: |z| > 1");
    if (m <= r) return true;
    // union of pseudo-hyperbolic discs around |b| <= r: outer radius (r+t)/(1+rt)
    if (m <= (r + t) / (1.0 + r * t)) return true;
    for (int k = 0; k < 64; ++k) {
        const double ang = 2.0 * std::numbers::pi * static_cast<double>(k) / 64.0;
        const DiscPoint b(r * std::cos(ang), r * std::sin(ang));
        if (std::abs(sigma(b, z)) <= t) return true;
    }
    return false;
}

}  // namespace bmoa
