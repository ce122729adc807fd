#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "bmoa/analytic.hpp"
#include "bmoa/mobius.hpp"
#include "bmoa/norms.hpp"

namespace bmoa {

/// Thrown when a candidate phi is not a self-map of the disc; carries the
/// boundary point where |phi| was largest.
class SelfMapViolation : public std::domain_error {
  public:
    SelfMapViolation(cplx point, double modulus)
        : std::domain_error("phi is not a self-map of the unit disc"),
          point_(point),
          modulus_(modulus) {}
    cplx boundary_point() const { return point_; }
    double modulus() const { return modulus_; }

  private:
    cplx point_;
    double modulus_;
};

/// Validated symbol pair for W(psi,phi) f = psi * (f o phi).
/// phi_sup_estimate is max |phi| over a dense boundary grid; by the maximum
/// principle this certifies phi(D) within the closed disc, and the pair is
/// rejected when the estimate exceeds 1 + 1e-9.
struct SymbolPair {
    SymbolPair(AnalyticFunction psi_in, AnalyticFunction phi_in);

    AnalyticFunction psi;
    AnalyticFunction phi;
    double phi_sup_estimate = 0.0;

    bool strictly_interior(double margin = 1e-4) const { return phi_sup_estimate < 1.0 - margin; }
};

/// Right-hand side of one estimator: value plus its named breakdown.
struct EstimateReport {
    double value = 0.0;
    std::map<std::string, double> parts;
    nlohmann::json proxy_metadata = nlohmann::json::object();
    std::vector<std::string> warnings;

    nlohmann::json to_json() const;
};

/// Boundary samples of psi(xi) f(phi(xi)). M must resolve
/// deg psi + deg f * deg phi alias-free.
BoundaryGrid apply_wco(const SymbolPair& pair, const AnalyticFunction& f, int M);

/// alpha(a) = |psi(a)| * ||sigma_{phi(a)} o phi o sigma_a||_2.
double alpha(const SymbolPair& pair, const DiscPoint& a);

/// beta(a) = L(phi(a)) * ||psi o sigma_a - psi(a)||_2.
double beta(const SymbolPair& pair, const DiscPoint& a);

/// ||psi phi^n||_* for n = 0..n_max, computed from pointwise grid powers.
std::vector<double> power_seminorm_seq(const SymbolPair& pair, int n_max,
                                       const SupSearchConfig& cfg);

/// Finite limsup proxy: max over indices >= window_start.
struct TailSup {
    double value = 0.0;
    int argmax_index = 0;
    bool nonincreasing = true;  // over the window, with 1e-12 slack
    bool nondecreasing = true;
};
TailSup tail_sup(const std::vector<double>& seq, int window_start);

EstimateReport norm_estimate_powers(const SymbolPair& pair, const SupSearchConfig& cfg,
                                    int n_max = 64);
EstimateReport norm_estimate_classic(const SymbolPair& pair, const SupSearchConfig& cfg);
EstimateReport essnorm_estimate_powers(const SymbolPair& pair, const SupSearchConfig& cfg,
                                       const std::vector<double>& rho_list = {0.9, 0.95, 0.99},
                                       int n_max = 64);
EstimateReport essnorm_estimate_boundary(const SymbolPair& pair, const SupSearchConfig& cfg,
                                         const std::vector<double>& rho_list = {0.9, 0.95, 0.99});

enum class Compactness { Compact, NonCompact, Inconclusive };

std::string to_string(Compactness c);

struct ClassifyThresholds {
    double eps_c = 1e-3;
};

struct ClassifyResult {
    Compactness verdict = Compactness::Inconclusive;
    double power_proxy = 0.0;
    double beta_proxy = 0.0;
    std::vector<double> power_seq;
    std::vector<std::pair<double, double>> beta_shells;  // (rho, sup beta over shell)
    std::vector<std::string> warnings;

    nlohmann::json to_json() const;
};

ClassifyResult classify_compactness(const SymbolPair& pair, const SupSearchConfig& cfg,
                                    ClassifyThresholds thresholds = {}, int n_max = 64);

/// f_a = sigma_b - b with b = phi(a): exact rational evaluator plus the
/// Taylor truncation (|b|^2 - 1) sum_n conj(b)^n w^{n+1}.
struct TestFunctionF {
    cplx b;
    cplx operator()(cplx w) const;
    AnalyticFunction truncated(int degree) const;
};
TestFunctionF test_f(const SymbolPair& pair, const DiscPoint& a);

/// g_a = h^2/h(b) with h(w) = log(2/(1 - conj(b) w)); g_a(b) = L(b).
/// 1 - conj(b) w has positive real part on the disc, so the principal
/// branch is safe.
struct TestFunctionG {
    cplx b;
    cplx h(cplx w) const;
    cplx operator()(cplx w) const;
};
TestFunctionG test_g(const SymbolPair& pair, const DiscPoint& a);

enum class BoundarySet {
    E,       ///< { xi : |sigma_{phi(a)} o phi o sigma_a (xi)| > t }
    ETilde,  ///< { xi : |phi o sigma_a (xi)| > t }
};

/// ( integral over the set of |psi(sigma_a(e^{i theta}))|^4 dtheta/2pi )^{1/4}.
double boundary_set_integral(const SymbolPair& pair, const DiscPoint& a, double t,
                             BoundarySet variant, int M);

/// Finite proxy for lim_{r->1} limsup_{t->1} sup_{|phi(a)|<=r} of the E-set
/// integral, evaluated at fixed r and probed t values.
struct TailQuantityResult {
    double value = 0.0;
    nlohmann::json proxy_metadata = nlohmann::json::object();
};
TailQuantityResult tail_quantity(const SymbolPair& pair, double r,
                                 const std::vector<double>& t_list, const SupSearchConfig& cfg);

/// Grid size for quadratures that pull through sigma_a and sigma_{phi(a)}:
/// next power of two >= max(floor, 64/(1-|a|), 64*deg(phi)/(1-|b|)),
/// capped at 2^cap_log2 (the cap is recorded by callers as undersampling).
int pullback_grid_size(const SymbolPair& pair, double a_abs, double b_abs, int floor_size = 1024,
                       int cap_log2 = 17);

/// Deterministic base-point probe set: radii x angles, capped at 0.995.
std::vector<cplx> base_point_samples(const std::vector<double>& radii, int angles);

/// Largest-rho filtered sup over sampled base points, the limsup proxy shared
/// by the essential-norm estimators. shells hold (rho, sup, count) triples.
struct ShellProxy {
    double value = 0.0;
    double rho_used = 0.0;
    std::vector<double> shell_values;
    std::vector<int> shell_counts;
    bool nonincreasing = true;
    bool nondecreasing = true;
    std::vector<std::string> warnings;
};

}  // namespace bmoa
