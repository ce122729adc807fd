#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "bmoa/fft.hpp"

namespace bmoa {

/// A point a with |a| < 1, used as a Mobius / Garsia base point.
/// Construction rejects |a| >= 1 - 1e-12.
class DiscPoint {
  public:
    explicit DiscPoint(cplx value);
    DiscPoint(double re, double im) : DiscPoint(cplx(re, im)) {}

    cplx value() const { return value_; }
    double abs() const { return std::abs(value_); }

  private:
    cplx value_;
};

/// Analytic function on the unit disc represented by a truncated Taylor
/// series c_0 + c_1 z + ... + c_N z^N. Immutable after construction.
class AnalyticFunction {
  public:
    AnalyticFunction() : coeffs_{cplx(0.0, 0.0)} {}
    explicit AnalyticFunction(std::vector<cplx> coeffs);

    static AnalyticFunction constant(cplx c) { return AnalyticFunction({c}); }
    static AnalyticFunction identity() { return AnalyticFunction({cplx(0), cplx(1)}); }
    static AnalyticFunction monomial(int n, cplx scale = cplx(1));

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<cplx>& coefficients() const { return coeffs_; }
    cplx coefficient(int k) const;

    /// Horner evaluation; rejects |z| > 1 (tiny rounding slack allowed).
    cplx at(cplx z) const;

    bool is_constant(double tol = 0.0) const;

    AnalyticFunction operator+(const AnalyticFunction& other) const;
    AnalyticFunction operator-(const AnalyticFunction& other) const;
    /// Coefficient convolution product.
    AnalyticFunction operator*(const AnalyticFunction& other) const;
    AnalyticFunction scaled(cplx factor) const;

  private:
    std::vector<cplx> coeffs_;
};

/// M uniform samples of a function on the unit circle,
/// samples[j] = g(e^{2*pi*i*j/M}); M is a power of two.
class BoundaryGrid {
  public:
    explicit BoundaryGrid(std::vector<cplx> samples);

    int size() const { return static_cast<int>(samples_.size()); }
    const std::vector<cplx>& samples() const { return samples_; }
    cplx operator[](int j) const { return samples_[static_cast<std::size_t>(j)]; }

    /// The grid node e^{2*pi*i*j/M}.
    cplx node(int j) const;

  private:
    std::vector<cplx> samples_;
};

cplx eval(const AnalyticFunction& f, cplx z);

/// Exact boundary samples of a polynomial. Requires M a power of two with
/// M >= 2*(degree+1) so that downstream coefficient recovery stays alias-free.
BoundaryGrid boundary_grid(const AnalyticFunction& f, int M);

/// Pointwise samples of an arbitrary boundary evaluator (M a power of two).
BoundaryGrid sample_boundary(const std::function<cplx(cplx)>& g, int M);

/// Pointwise product; sizes must match.
BoundaryGrid grid_product(const BoundaryGrid& g1, const BoundaryGrid& g2);

/// (K_r f)(z) = f(r z): coefficients c_k r^k. Requires 0 <= r < 1.
AnalyticFunction dilate(const AnalyticFunction& f, double r);

/// Discrete Fourier inversion of a boundary grid: the first degree+1 Taylor
/// coefficients. Exact for polynomials sampled alias-free.
std::vector<cplx> coefficients_from_grid(const BoundaryGrid& g, int degree);

}  // namespace bmoa
