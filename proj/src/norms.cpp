#include "bmoa/norms.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace bmoa {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kSearchRadiusLimit = 0.995;

double pow_p(double sq_modulus, double p) {
    // |w|^p from |w|^2
    if (p == 2.0) return sq_modulus;
    return std::pow(sq_modulus, 0.5 * p);
}

}  // namespace

void SupSearchConfig::validate() const {
    if (radii.empty()) throw std::invalid_argument("SupSearchConfig: radii empty");
    for (double r : radii)
        if (r < 0.0 || r >= 1.0) throw std::invalid_argument("SupSearchConfig: radii must lie in [0,1)");
    if (angles_per_radius <= 0 || refine_rounds < 0 || refine_factor <= 0)
        throw std::invalid_argument("SupSearchConfig: counts must be positive");
    if (radius_cap <= 0.0 || radius_cap >= 1.0)
        throw std::invalid_argument("SupSearchConfig: radius_cap must lie in (0,1)");
}

SupResult sup_search(const std::function<double(cplx)>& objective, const SupSearchConfig& cfg,
                     int* skipped) {
    cfg.validate();
    const double cap = std::min(cfg.radius_cap, kSearchRadiusLimit);
    std::vector<double> radii = cfg.radii;
    std::sort(radii.begin(), radii.end());
    for (double& r : radii) r = std::min(r, cap);
    radii.erase(std::unique(radii.begin(), radii.end()), radii.end());

    SupResult best;
    bool have_best = false;
    auto consider = [&](cplx a) {
        const double v = objective(a);
        if (std::isnan(v)) {
            if (skipped) ++(*skipped);
            return;
        }
        if (!have_best || v > best.value) {
            best.value = v;
            best.argmax = a;
            have_best = true;
        }
    };

    for (double r : radii) {
        const int angles = (r == 0.0) ? 1 : cfg.angles_per_radius;
        for (int k = 0; k < angles; ++k) {
            const double t = kTwoPi * static_cast<double>(k) / static_cast<double>(cfg.angles_per_radius);
            consider(cplx(r * std::cos(t), r * std::sin(t)));
        }
    }
    if (!have_best) return SupResult{};  // every sample skipped

    double dr = 0.05;
    for (std::size_t i = 1; i < radii.size(); ++i) dr = std::max(dr, radii[i] - radii[i - 1]);
    double dt = kTwoPi / static_cast<double>(cfg.angles_per_radius);

    const int F = cfg.refine_factor;
    for (int round = 0; round < cfg.refine_rounds; ++round) {
        dr /= static_cast<double>(F);
        dt /= static_cast<double>(F);
        const double r0 = std::abs(best.argmax);
        const double t0 = (r0 == 0.0) ? 0.0 : std::arg(best.argmax);
        for (int i = -F; i <= F; ++i) {
            const double r = std::clamp(r0 + dr * static_cast<double>(i), 0.0, cap);
            for (int j = -F; j <= F; ++j) {
                const double t = t0 + dt * static_cast<double>(j);
                consider(cplx(r * std::cos(t), r * std::sin(t)));
            }
        }
    }
    return best;
}

double hardy_norm(const BoundaryGrid& g, double p) {
    if (p < 1.0) throw std::invalid_argument("hardy_norm: p must be >= 1");
    double acc = 0.0;
    for (const cplx& s : g.samples()) acc += pow_p(std::norm(s), p);
    acc /= static_cast<double>(g.size());
    return std::pow(acc, 1.0 / p);
}

double grid_sup(const BoundaryGrid& g) {
    double m = 0.0;
    for (const cplx& s : g.samples()) m = std::max(m, std::abs(s));
    return m;
}

GarsiaEvaluator::GarsiaEvaluator(const AnalyticFunction& f) {
    const auto& c = f.coefficients();
    const std::size_t n = c.size();
    coeffs_ = c;
    sq_modes_.assign(n, cplx(0.0, 0.0));
    for (std::size_t m = 0; m < n; ++m) {
        cplx acc(0.0, 0.0);
        for (std::size_t k = 0; k + m < n; ++k) acc += c[k + m] * std::conj(c[k]);
        sq_modes_[m] = acc;
    }
    trim();
}

GarsiaEvaluator::GarsiaEvaluator(const BoundaryGrid& g) {
    const std::size_t M = static_cast<std::size_t>(g.size());
    std::vector<cplx> hat = fft(g.samples());
    const double inv = 1.0 / static_cast<double>(M);
    coeffs_.resize(M);
    for (std::size_t k = 0; k < M; ++k) coeffs_[k] = hat[k] * inv;

    std::vector<cplx> sq(M);
    for (std::size_t j = 0; j < M; ++j) sq[j] = cplx(std::norm(g.samples()[j]), 0.0);
    fft_inplace(sq, -1);
    sq_modes_.resize(M / 2 + 1);
    for (std::size_t m = 0; m <= M / 2; ++m) sq_modes_[m] = sq[m] * inv;
    trim();
}

void GarsiaEvaluator::trim() {
    auto cut = [](std::vector<cplx>& v) {
        double top = 0.0;
        for (const cplx& x : v) top = std::max(top, std::abs(x));
        const double thresh = top * 1e-15;
        std::size_t keep = 1;
        for (std::size_t k = 0; k < v.size(); ++k)
            if (std::abs(v[k]) > thresh) keep = k + 1;
        v.resize(keep);
    };
    cut(coeffs_);
    cut(sq_modes_);
}

cplx GarsiaEvaluator::value_at(cplx a) const {
    cplx acc(0.0, 0.0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * a + *it;
    return acc;
}

double GarsiaEvaluator::poisson_sq(cplx a) const {
    // harmonic extension of |f|^2: h_0 + 2 Re sum_{m>=1} h_m a^m
    cplx acc(0.0, 0.0);
    for (std::size_t m = sq_modes_.size(); m-- > 1;) acc = acc * a + sq_modes_[m];
    return sq_modes_[0].real() + 2.0 * (acc * a).real();
}

double GarsiaEvaluator::transform2(cplx a) const {
    const double v = poisson_sq(a) - std::norm(value_at(a));
    return std::sqrt(std::max(0.0, v));
}

int poisson_grid_size(double a_abs, int floor_size) {
    if (a_abs < 0.0 || a_abs >= 1.0) throw std::domain_error("poisson_grid_size: |a| must be < 1");
    const double need = std::max(static_cast<double>(floor_size), 64.0 / (1.0 - a_abs));
    return static_cast<int>(next_power_of_two(static_cast<std::size_t>(std::ceil(need))));
}

namespace {

void require_quadrature_rule(double a_abs, int M, int degree) {
    if (a_abs > kSearchRadiusLimit + 1e-15)
        throw std::domain_error("transform_norm: |a| > 0.995 is outside the quadrature cap");
    if (M < 2 * (degree + 1))
        throw std::invalid_argument("transform_norm: M violates the anti-aliasing rule");
    if (static_cast<double>(M) * (1.0 - a_abs) < 64.0)
        throw std::domain_error("transform_norm: |a| too close to 1 for chosen M");
}

}  // namespace

double transform_norm(const AnalyticFunction& f, const DiscPoint& a, double p, int M,
                      TransformMethod method) {
    if (p < 1.0) throw std::invalid_argument("transform_norm: p must be >= 1");
    if (method == TransformMethod::Auto)
        method = (p == 2.0) ? TransformMethod::ClosedForm : TransformMethod::PoissonQuadrature;
    if (method == TransformMethod::ClosedForm) {
        if (p != 2.0) throw std::invalid_argument("transform_norm: closed form requires p = 2");
        return GarsiaEvaluator(f).transform2(a.value());
    }

    require_quadrature_rule(a.abs(), M, f.degree());
    const cplx fa = f.at(a.value());
    double acc = 0.0;
    if (method == TransformMethod::PoissonQuadrature) {
        const BoundaryGrid g = boundary_grid(f, M);
        for (int j = 0; j < M; ++j) {
            const cplx xi = g.node(j);
            acc += poisson_kernel(a, xi) * pow_p(std::norm(g[j] - fa), p);
        }
    } else {  // SigmaPullback
        for (int j = 0; j < M; ++j) {
            const double t = kTwoPi * static_cast<double>(j) / static_cast<double>(M);
            const cplx xi(std::cos(t), std::sin(t));
            acc += pow_p(std::norm(f.at(sigma(a, xi)) - fa), p);
        }
    }
    acc /= static_cast<double>(M);
    return std::pow(acc, 1.0 / p);
}

double transform_norm(const BoundaryGrid& g, const DiscPoint& a, double p) {
    if (p < 1.0) throw std::invalid_argument("transform_norm: p must be >= 1");
    if (p == 2.0) return GarsiaEvaluator(g).transform2(a.value());

    require_quadrature_rule(a.abs(), g.size(), 0);
    const int M = g.size();
    cplx ga(0.0, 0.0);
    std::vector<double> kernel(static_cast<std::size_t>(M));
    for (int j = 0; j < M; ++j) {
        kernel[static_cast<std::size_t>(j)] = poisson_kernel(a, g.node(j));
        ga += kernel[static_cast<std::size_t>(j)] * g[j];
    }
    ga /= static_cast<double>(M);
    double acc = 0.0;
    for (int j = 0; j < M; ++j)
        acc += kernel[static_cast<std::size_t>(j)] * pow_p(std::norm(g[j] - ga), p);
    acc /= static_cast<double>(M);
    return std::pow(acc, 1.0 / p);
}

SupResult bmoa_seminorm(const AnalyticFunction& f, double p, const SupSearchConfig& cfg) {
    if (p == 2.0) {
        const GarsiaEvaluator ev(f);
        return sup_search([&](cplx a) { return ev.transform2(a); }, cfg);
    }
    // general p: Poisson quadrature on one shared grid sized for the deepest radius
    SupSearchConfig local = cfg;
    local.radius_cap = std::min(cfg.radius_cap, kSearchRadiusLimit);
    const int M = std::max(poisson_grid_size(local.radius_cap),
                           static_cast<int>(next_power_of_two(2 * static_cast<std::size_t>(f.degree() + 1))));
    const BoundaryGrid g = boundary_grid(f, M);
    return sup_search([&](cplx a) { return transform_norm(g, DiscPoint(a), p); }, local);
}

SupResult bmoa_seminorm(const BoundaryGrid& g, double p, const SupSearchConfig& cfg) {
    if (p == 2.0) {
        const GarsiaEvaluator ev(g);
        return sup_search([&](cplx a) { return ev.transform2(a); }, cfg);
    }
    SupSearchConfig local = cfg;
    local.radius_cap = std::min(cfg.radius_cap, 1.0 - 64.0 / static_cast<double>(g.size()));
    return sup_search([&](cplx a) { return transform_norm(g, DiscPoint(a), p); }, local);
}

double bmoa_norm(const AnalyticFunction& f, const SupSearchConfig& cfg) {
    return std::abs(f.at(cplx(0.0, 0.0))) + bmoa_seminorm(f, 2.0, cfg).value;
}

double bmoa_norm(const BoundaryGrid& g, const SupSearchConfig& cfg) {
    cplx c0(0.0, 0.0);
    for (const cplx& s : g.samples()) c0 += s;
    c0 /= static_cast<double>(g.size());
    return std::abs(c0) + bmoa_seminorm(g, 2.0, cfg).value;
}

std::vector<std::pair<double, double>> vmoa_profile(const AnalyticFunction& f,
                                                    const std::vector<double>& radii,
                                                    int angles_per_radius) {
    if (angles_per_radius <= 0) throw std::invalid_argument("vmoa_profile: angles must be positive");
    const GarsiaEvaluator ev(f);
    std::vector<std::pair<double, double>> profile;
    profile.reserve(radii.size());
    for (double r : radii) {
        if (r < 0.0 || r >= 1.0) throw std::domain_error("vmoa_profile: radii must lie in [0,1)");
        double best = 0.0;
        const int angles = (r == 0.0) ? 1 : angles_per_radius;
        for (int k = 0; k < angles; ++k) {
            const double t = kTwoPi * static_cast<double>(k) / static_cast<double>(angles_per_radius);
            best = std::max(best, ev.transform2(cplx(r * std::cos(t), r * std::sin(t))));
        }
        profile.emplace_back(r, best);
    }
    return profile;
}

}  // namespace bmoa
