#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "bmoa/analytic.hpp"
#include "bmoa/mobius.hpp"

namespace bmoa {

/// Discretization of sup_{a in D}: coarse radius/angle grid followed by
/// local refinement around the running argmax. Sampled values are exact
/// evaluations, so the search result is always a lower bound of the sup.
struct SupSearchConfig {
    std::vector<double> radii{0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.95, 0.99};
    int angles_per_radius = 64;
    int refine_rounds = 2;
    int refine_factor = 4;
    double radius_cap = 0.995;

    void validate() const;
};

struct SupResult {
    double value = 0.0;
    cplx argmax{0.0, 0.0};
};

/// Maximize a nonnegative objective over sampled disc points. The objective
/// may return NaN to skip a point (skips are counted if a counter is given).
SupResult sup_search(const std::function<double(cplx)>& objective, const SupSearchConfig& cfg,
                     int* skipped = nullptr);

/// (mean_j |g_j|^p)^{1/p} over the uniform grid; exact for trigonometric
/// polynomials resolved by the grid. Requires p >= 1.
double hardy_norm(const BoundaryGrid& g, double p);

/// Grid sup norm max_j |g_j|.
double grid_sup(const BoundaryGrid& g);

/// Per-base-point quadratures of the Mobius transform f|a = f o sigma_a - f(a).
enum class TransformMethod {
    Auto,               ///< ClosedForm when p == 2, PoissonQuadrature otherwise
    PoissonQuadrature,  ///< mean_t P(a,t)|f(e^{it}) - f(a)|^p
    SigmaPullback,      ///< mean_theta |f(sigma_a(e^{i theta})) - f(a)|^p
    ClosedForm,         ///< p = 2 Garsia identity: P[|f|^2](a) - |f(a)|^2
};

/// Exact p = 2 transform norms from Fourier data. Works either from Taylor
/// coefficients (exact) or from a boundary grid (exact modulo aliasing).
class GarsiaEvaluator {
  public:
    explicit GarsiaEvaluator(const AnalyticFunction& f);
    explicit GarsiaEvaluator(const BoundaryGrid& g);

    /// f(a) for |a| < 1 from the Taylor coefficients.
    cplx value_at(cplx a) const;
    /// Harmonic extension of |f|^2 at a.
    double poisson_sq(cplx a) const;
    /// ||f o sigma_a - f(a)||_2.
    double transform2(cplx a) const;

    int effective_degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<cplx>& coefficients() const { return coeffs_; }

  private:
    void trim();
    std::vector<cplx> coeffs_;    // c_0..c_D
    std::vector<cplx> sq_modes_;  // Fourier modes of |f|^2 for m >= 0
};

/// Grid size demanded by the near-boundary quadrature rule:
/// next power of two >= max(floor_size, 64/(1-|a|)).
int poisson_grid_size(double a_abs, int floor_size = 1024);

/// ||f o sigma_a - f(a)||_p. Methods PoissonQuadrature/SigmaPullback check
/// the near-boundary rule against M and |a| <= 0.995; ClosedForm requires
/// p = 2 and has no quadrature error in a.
double transform_norm(const AnalyticFunction& f, const DiscPoint& a, double p, int M,
                      TransformMethod method = TransformMethod::Auto);

/// Same quantity computed from boundary samples only (f(a) is recovered by
/// the Poisson integral of the grid). p = 2 uses the grid Garsia route.
double transform_norm(const BoundaryGrid& g, const DiscPoint& a, double p);

/// sup_a ||f o sigma_a - f(a)||_p by sampled search; also reports the argmax.
SupResult bmoa_seminorm(const AnalyticFunction& f, double p, const SupSearchConfig& cfg);
SupResult bmoa_seminorm(const BoundaryGrid& g, double p, const SupSearchConfig& cfg);

/// |f(0)| + ||f||_* (p = 2).
double bmoa_norm(const AnalyticFunction& f, const SupSearchConfig& cfg);
double bmoa_norm(const BoundaryGrid& g, const SupSearchConfig& cfg);

/// Per-radius sup_{|a|=r} ||f o sigma_a - f(a)||_2 decay profile.
std::vector<std::pair<double, double>> vmoa_profile(const AnalyticFunction& f,
                                                    const std::vector<double>& radii,
                                                    int angles_per_radius = 64);

}  // namespace bmoa
