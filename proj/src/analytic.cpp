#include "bmoa/analytic.hpp"

#include <algorithm>
#include <numbers>
#include <stdexcept>

namespace bmoa {

namespace {
constexpr double kDiscPointMargin = 1e-12;
constexpr double kEvalSlack = 1e-12;
}  // namespace

DiscPoint::DiscPoint(cplx value) : value_(value) {
    if (std::abs(value) >= 1.0 - kDiscPointMargin)
        throw std::domain_error("DiscPoint: |a| must be < 1 - 1e-12");
}

AnalyticFunction::AnalyticFunction(std::vector<cplx> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) coeffs_.push_back(cplx(0.0, 0.0));
}

AnalyticFunction AnalyticFunction::monomial(int n, cplx scale) {
    if (n < 0) throw std::invalid_argument("monomial: negative exponent");
    std::vector<cplx> c(static_cast<std::size_t>(n) + 1, cplx(0.0, 0.0));
    c.back() = scale;
    return AnalyticFunction(std::move(c));
}

cplx AnalyticFunction::coefficient(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return cplx(0.0, 0.0);
    return coeffs_[static_cast<std::size_t>(k)];
}

cplx AnalyticFunction::at(cplx z) const {
    if (std::abs(z) > 1.0 + kEvalSlack)
        throw std::domain_error("AnalyticFunction::at: |z| > 1");
    cplx acc(0.0, 0.0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
    return acc;
}

bool AnalyticFunction::is_constant(double tol) const {
    for (std::size_t k = 1; k < coeffs_.size(); ++k)
        if (std::abs(coeffs_[k]) > tol) return false;
    return true;
}

AnalyticFunction AnalyticFunction::operator+(const AnalyticFunction& other) const {
    std::vector<cplx> c(std::max(coeffs_.size(), other.coeffs_.size()), cplx(0.0, 0.0));
    for (std::size_t k = 0; k < coeffs_.size(); ++k) c[k] += coeffs_[k];
    for (std::size_t k = 0; k < other.coeffs_.size(); ++k) c[k] += other.coeffs_[k];
    return AnalyticFunction(std::move(c));
}

AnalyticFunction AnalyticFunction::operator-(const AnalyticFunction& other) const {
    return *this + other.scaled(cplx(-1.0, 0.0));
}

AnalyticFunction AnalyticFunction::operator*(const AnalyticFunction& other) const {
    std::vector<cplx> c(coeffs_.size() + other.coeffs_.size() - 1, cplx(0.0, 0.0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < other.coeffs_.size(); ++j)
            c[i + j] += coeffs_[i] * other.coeffs_[j];
    return AnalyticFunction(std::move(c));
}

AnalyticFunction AnalyticFunction::scaled(cplx factor) const {
    std::vector<cplx> c = coeffs_;
    for (auto& x : c) x *= factor;
    return AnalyticFunction(std::move(c));
}

BoundaryGrid::BoundaryGrid(std::vector<cplx> samples) : samples_(std::move(samples)) {
    if (samples_.size() < 2 || !is_power_of_two(samples_.size()))
        throw std::invalid_argument("BoundaryGrid: size must be a power of two >= 2");
}

cplx BoundaryGrid::node(int j) const {
    const double t = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(size());
    return cplx(std::cos(t), std::sin(t));
}

cplx eval(const AnalyticFunction& f, cplx z) { return f.at(z); }

BoundaryGrid boundary_grid(const AnalyticFunction& f, int M) {
    const int N = f.degree();
    if (M < 2 || !is_power_of_two(static_cast<std::size_t>(M)))
        throw std::invalid_argument("boundary_grid: M must be a power of two");
    if (M < 2 * (N + 1))
        throw std::invalid_argument("boundary_grid: M < 2*(degree+1) violates the anti-aliasing rule");
    // samples_j = sum_k c_k e^{+2 pi i j k / M}: unnormalized inverse DFT of
    // the zero-padded coefficients, which matches Horner at the grid nodes.
    std::vector<cplx> padded(static_cast<std::size_t>(M), cplx(0.0, 0.0));
    std::copy(f.coefficients().begin(), f.coefficients().end(), padded.begin());
    fft_inplace(padded, +1);
    return BoundaryGrid(std::move(padded));
}

BoundaryGrid sample_boundary(const std::function<cplx(cplx)>& g, int M) {
    if (M < 2 || !is_power_of_two(static_cast<std::size_t>(M)))
        throw std::invalid_argument("sample_boundary: M must be a power of two");
    std::vector<cplx> s(static_cast<std::size_t>(M));
    for (int j = 0; j < M; ++j) {
        const double t = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(M);
        s[static_cast<std::size_t>(j)] = g(cplx(std::cos(t), std::sin(t)));
    }
    return BoundaryGrid(std::move(s));
}

BoundaryGrid grid_product(const BoundaryGrid& g1, const BoundaryGrid& g2) {
    if (g1.size() != g2.size())
        throw std::invalid_argument("grid_product: size mismatch");
    std::vector<cplx> s(g1.samples());
    for (std::size_t j = 0; j < s.size(); ++j) s[j] *= g2.samples()[j];
    return BoundaryGrid(std::move(s));
}

AnalyticFunction dilate(const AnalyticFunction& f, double r) {
    if (r < 0.0 || r >= 1.0) throw std::domain_error("dilate: r must lie in [0,1)");
    std::vector<cplx> c = f.coefficients();
    double rk = 1.0;
    for (auto& x : c) {
        x *= rk;
        rk *= r;
    }
    return AnalyticFunction(std::move(c));
}

std::vector<cplx> coefficients_from_grid(const BoundaryGrid& g, int degree) {
    if (degree < 0) throw std::invalid_argument("coefficients_from_grid: negative degree");
    if (degree >= g.size())
        throw std::invalid_argument("coefficients_from_grid: degree >= grid size");
    std::vector<cplx> hat = fft(g.samples());
    const double inv = 1.0 / static_cast<double>(g.size());
    std::vector<cplx> c(static_cast<std::size_t>(degree) + 1);
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = hat[k] * inv;
    return c;
}

}  // namespace bmoa
