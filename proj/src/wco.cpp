#include "bmoa/wco.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

#include "bmoa/jsonutil.hpp"

namespace bmoa {

namespace {

constexpr double kBasePointMargin = 1e-12;  // |phi(a)| >= 1 - this is boundary-touching
constexpr double kTwoPi = 2.0 * std::numbers::pi;

cplx clamp_to_closed_disc(cplx w) {
    const double m = std::abs(w);
    return (m > 1.0) ? w / m : w;
}

cplx mobius(cplx b, cplx w) { return (b - w) / (cplx(1.0, 0.0) - std::conj(b) * w); }

double log_weight_raw(double b_abs) { return std::log(2.0 / (1.0 - b_abs * b_abs)); }

/// ||sigma_b o phi o sigma_a||_2 by pullback quadrature.
double sigma_pullback_norm2(const SymbolPair& pair, cplx a, cplx b) {
    const int M = pullback_grid_size(pair, std::abs(a), std::abs(b));
    double acc = 0.0;
    for (int j = 0; j < M; ++j) {
        const double t = kTwoPi * static_cast<double>(j) / static_cast<double>(M);
        const cplx xi(std::cos(t), std::sin(t));
        const cplx s = mobius(a, xi);
        const cplx u = clamp_to_closed_disc(pair.phi.at(clamp_to_closed_disc(s)));
        acc += std::norm(mobius(b, u));
    }
    return std::sqrt(acc / static_cast<double>(M));
}

cplx phi_at_base(const SymbolPair& pair, cplx a, const char* who) {
    const cplx b = pair.phi.at(a);
    if (std::abs(b) >= 1.0 - kBasePointMargin)
        throw std::domain_error(std::string(who) + ": base point with |phi(a)| ~ 1");
    return b;
}

ShellProxy shell_proxy(const SymbolPair& pair, const std::vector<double>& rho_list,
                       const SupSearchConfig& cfg,
                       const std::function<double(cplx a, cplx b)>& quantity,
                       bool filter_on_phi) {
    ShellProxy out;
    if (rho_list.empty()) {
        out.warnings.push_back("empty rho list");
        return out;
    }
    std::vector<double> rhos = rho_list;
    std::sort(rhos.begin(), rhos.end());
    out.shell_values.assign(rhos.size(), 0.0);
    out.shell_counts.assign(rhos.size(), 0);

    if (filter_on_phi && pair.phi_sup_estimate < rhos.front()) {
        out.warnings.push_back("sup |phi| below min rho: boundary-approach limsup is 0");
        return out;
    }

    std::vector<double> radii = cfg.radii;
    radii.insert(radii.end(), {0.98, 0.99, 0.995});
    const auto points = base_point_samples(radii, cfg.angles_per_radius);

    int touching = 0;
    for (const cplx& a : points) {
        const cplx b = pair.phi.at(a);
        if (std::abs(b) >= 1.0 - kBasePointMargin) {
            ++touching;
            continue;
        }
        const double m = filter_on_phi ? std::abs(b) : std::abs(a);
        if (m < rhos.front()) continue;
        const double q = quantity(a, b);
        for (std::size_t i = 0; i < rhos.size(); ++i) {
            if (m < rhos[i]) break;
            out.shell_values[i] = std::max(out.shell_values[i], q);
            ++out.shell_counts[i];
        }
    }
    if (touching > 0)
        out.warnings.push_back(std::to_string(touching) + " boundary-touching base points skipped");

    bool any = false;
    double prev = 0.0;
    bool have_prev = false;
    for (std::size_t i = 0; i < rhos.size(); ++i) {
        if (out.shell_counts[i] == 0) continue;
        any = true;
        out.value = out.shell_values[i];
        out.rho_used = rhos[i];
        if (have_prev) {
            if (out.shell_values[i] > prev + 1e-12) out.nonincreasing = false;
            if (out.shell_values[i] < prev - 1e-12) out.nondecreasing = false;
        }
        prev = out.shell_values[i];
        have_prev = true;
    }
    if (!any) out.warnings.push_back("empty boundary-approach sample: using the 0 convention");
    return out;
}

nlohmann::json shells_json(const ShellProxy& s, const std::vector<double>& rho_list) {
    std::vector<double> rhos = rho_list;
    std::sort(rhos.begin(), rhos.end());
    nlohmann::json arr = nlohmann::json::array();
    for (std::size_t i = 0; i < rhos.size(); ++i)
        arr.push_back({{"rho", round_sig(rhos[i])},
                       {"sup", round_sig(s.shell_values[i])},
                       {"count", s.shell_counts[i]}});
    return arr;
}

}  // namespace

SymbolPair::SymbolPair(AnalyticFunction psi_in, AnalyticFunction phi_in)
    : psi(std::move(psi_in)), phi(std::move(phi_in)) {
    const int M = static_cast<int>(
        next_power_of_two(std::max<std::size_t>(4096, 2 * static_cast<std::size_t>(phi.degree() + 1))));
    double worst = 0.0;
    cplx worst_point(1.0, 0.0);
    for (int j = 0; j < M; ++j) {
        const double t = kTwoPi * static_cast<double>(j) / static_cast<double>(M);
        const cplx xi(std::cos(t), std::sin(t));
        const double m = std::abs(phi.at(xi));
        if (m > worst) {
            worst = m;
            worst_point = xi;
        }
    }
    phi_sup_estimate = worst;
    if (worst > 1.0 + 1e-9) throw SelfMapViolation(worst_point, worst);
    if (phi.is_constant() && std::abs(phi.coefficient(0)) >= 1.0 - kBasePointMargin)
        throw SelfMapViolation(worst_point, worst);
}

nlohmann::json EstimateReport::to_json() const {
    nlohmann::json parts_json = nlohmann::json::object();
    for (const auto& [name, v] : parts) parts_json[name] = round_sig(v);
    return {{"value", round_sig(value)},
            {"parts", parts_json},
            {"proxy_metadata", proxy_metadata},
            {"warnings", warnings}};
}

BoundaryGrid apply_wco(const SymbolPair& pair, const AnalyticFunction& f, int M) {
    const int needed = pair.psi.degree() + f.degree() * pair.phi.degree();
    if (M < 2 * (needed + 1))
        throw std::invalid_argument("apply_wco: M violates the anti-aliasing rule");
    return sample_boundary(
        [&](cplx xi) { return pair.psi.at(xi) * f.at(clamp_to_closed_disc(pair.phi.at(xi))); }, M);
}

double alpha(const SymbolPair& pair, const DiscPoint& a) {
    const cplx b = phi_at_base(pair, a.value(), "alpha");
    const double w = std::abs(pair.psi.at(a.value()));
    if (w == 0.0) return 0.0;
    return w * sigma_pullback_norm2(pair, a.value(), b);
}

double beta(const SymbolPair& pair, const DiscPoint& a) {
    const cplx b = phi_at_base(pair, a.value(), "beta");
    return log_weight_raw(std::abs(b)) * GarsiaEvaluator(pair.psi).transform2(a.value());
}

std::vector<double> power_seminorm_seq(const SymbolPair& pair, int n_max,
                                       const SupSearchConfig& cfg) {
    if (n_max < 0 || n_max > 512)
        throw std::invalid_argument("power_seminorm_seq: n_max must lie in [0,512]");
    const std::size_t needed =
        2 * (static_cast<std::size_t>(pair.psi.degree()) +
             static_cast<std::size_t>(n_max) * static_cast<std::size_t>(pair.phi.degree()) + 1);
    const std::size_t M = next_power_of_two(std::max<std::size_t>(1024, needed));
    if (M > (1u << 20))
        throw std::length_error("power_seminorm_seq: grid would exceed 2^20 samples");

    const BoundaryGrid gpsi = boundary_grid(pair.psi, static_cast<int>(M));
    const BoundaryGrid gphi = boundary_grid(pair.phi, static_cast<int>(M));
    std::vector<cplx> cum = gpsi.samples();

    std::vector<double> seq;
    seq.reserve(static_cast<std::size_t>(n_max) + 1);
    for (int n = 0; n <= n_max; ++n) {
        seq.push_back(bmoa_seminorm(BoundaryGrid(cum), 2.0, cfg).value);
        if (n < n_max)
            for (std::size_t j = 0; j < cum.size(); ++j) cum[j] *= gphi.samples()[j];
    }
    return seq;
}

TailSup tail_sup(const std::vector<double>& seq, int window_start) {
    if (window_start < 0 || window_start >= static_cast<int>(seq.size()))
        throw std::invalid_argument("tail_sup: window is empty");
    TailSup out;
    out.value = seq[static_cast<std::size_t>(window_start)];
    out.argmax_index = window_start;
    for (int k = window_start; k < static_cast<int>(seq.size()); ++k) {
        const double v = seq[static_cast<std::size_t>(k)];
        if (v > out.value) {
            out.value = v;
            out.argmax_index = k;
        }
        if (k > window_start) {
            const double prev = seq[static_cast<std::size_t>(k - 1)];
            const double slack = 1e-12 * std::max(1.0, std::fabs(prev));
            if (v > prev + slack) out.nonincreasing = false;
            if (v < prev - slack) out.nondecreasing = false;
        }
    }
    return out;
}

EstimateReport norm_estimate_powers(const SymbolPair& pair, const SupSearchConfig& cfg, int n_max) {
    EstimateReport report;
    const cplx b0 = pair.phi.at(cplx(0.0, 0.0));
    if (std::abs(b0) >= 1.0 - kBasePointMargin)
        report.warnings.push_back("|phi(0)| within 1e-12 of the boundary");
    const double center = std::abs(pair.psi.at(cplx(0.0, 0.0))) * log_weight_raw(std::abs(b0));

    const std::vector<double> seq = power_seminorm_seq(pair, n_max, cfg);
    int argmax_n = 0;
    double power = 0.0;
    for (int n = 0; n <= n_max; ++n)
        if (seq[static_cast<std::size_t>(n)] > power) {
            power = seq[static_cast<std::size_t>(n)];
            argmax_n = n;
        }

    const GarsiaEvaluator psi_ev(pair.psi);
    int skipped = 0;
    const SupResult beta_sup = sup_search(
        [&](cplx a) {
            const cplx b = pair.phi.at(a);
            if (std::abs(b) >= 1.0 - kBasePointMargin) return std::nan("");
            return log_weight_raw(std::abs(b)) * psi_ev.transform2(a);
        },
        cfg, &skipped);
    if (skipped > 0)
        report.warnings.push_back(std::to_string(skipped) + " boundary-touching base points skipped");

    report.parts = {{"center_term", center}, {"power_term", power}, {"beta_term", beta_sup.value}};
    report.value = center + power + beta_sup.value;
    report.proxy_metadata = {{"n_max", n_max},
                             {"power_argmax_n", argmax_n},
                             {"beta_argmax", json_complex(beta_sup.argmax)}};
    return report;
}

EstimateReport norm_estimate_classic(const SymbolPair& pair, const SupSearchConfig& cfg) {
    EstimateReport report;
    const cplx b0 = pair.phi.at(cplx(0.0, 0.0));
    const double center = std::abs(pair.psi.at(cplx(0.0, 0.0))) * log_weight_raw(std::abs(b0));

    int skipped_alpha = 0;
    const SupResult alpha_sup = sup_search(
        [&](cplx a) {
            const cplx b = pair.phi.at(a);
            if (std::abs(b) >= 1.0 - kBasePointMargin) return std::nan("");
            const double w = std::abs(pair.psi.at(a));
            if (w == 0.0) return 0.0;
            return w * sigma_pullback_norm2(pair, a, b);
        },
        cfg, &skipped_alpha);

    const GarsiaEvaluator psi_ev(pair.psi);
    int skipped_beta = 0;
    const SupResult beta_sup = sup_search(
        [&](cplx a) {
            const cplx b = pair.phi.at(a);
            if (std::abs(b) >= 1.0 - kBasePointMargin) return std::nan("");
            return log_weight_raw(std::abs(b)) * psi_ev.transform2(a);
        },
        cfg, &skipped_beta);
    if (skipped_alpha + skipped_beta > 0)
        report.warnings.push_back(std::to_string(skipped_alpha + skipped_beta) +
                                  " boundary-touching base points skipped");

    report.parts = {{"center_term", center},
                    {"alpha_term", alpha_sup.value},
                    {"beta_term", beta_sup.value}};
    report.value = center + alpha_sup.value + beta_sup.value;
    report.proxy_metadata = {{"alpha_argmax", json_complex(alpha_sup.argmax)},
                             {"beta_argmax", json_complex(beta_sup.argmax)}};
    return report;
}

EstimateReport essnorm_estimate_powers(const SymbolPair& pair, const SupSearchConfig& cfg,
                                       const std::vector<double>& rho_list, int n_max) {
    EstimateReport report;
    const std::vector<double> seq = power_seminorm_seq(pair, n_max, cfg);
    const TailSup tail = tail_sup(seq, n_max / 2);

    const GarsiaEvaluator psi_ev(pair.psi);
    const ShellProxy beta_shell = shell_proxy(
        pair, rho_list, cfg,
        [&](cplx a, cplx b) { return log_weight_raw(std::abs(b)) * psi_ev.transform2(a); }, true);

    report.parts = {{"power_term", tail.value}, {"beta_term", beta_shell.value}};
    report.value = tail.value + beta_shell.value;
    report.proxy_metadata = {{"n_max", n_max},
                             {"n_window_start", n_max / 2},
                             {"power_argmax_index", tail.argmax_index},
                             {"power_tail_nonincreasing", tail.nonincreasing},
                             {"rho_list", rho_list},
                             {"beta_rho_used", round_sig(beta_shell.rho_used)},
                             {"beta_shells", shells_json(beta_shell, rho_list)}};
    report.warnings = beta_shell.warnings;
    return report;
}

EstimateReport essnorm_estimate_boundary(const SymbolPair& pair, const SupSearchConfig& cfg,
                                         const std::vector<double>& rho_list) {
    EstimateReport report;
    auto alpha_quantity = [&](cplx a, cplx b) {
        const double w = std::abs(pair.psi.at(a));
        if (w == 0.0) return 0.0;
        return w * sigma_pullback_norm2(pair, a, b);
    };
    const GarsiaEvaluator psi_ev(pair.psi);
    auto beta_quantity = [&](cplx a, cplx b) {
        return log_weight_raw(std::abs(b)) * psi_ev.transform2(a);
    };

    const ShellProxy alpha_phi = shell_proxy(pair, rho_list, cfg, alpha_quantity, true);
    const ShellProxy beta_phi = shell_proxy(pair, rho_list, cfg, beta_quantity, true);
    const ShellProxy alpha_a = shell_proxy(pair, rho_list, cfg, alpha_quantity, false);
    const ShellProxy beta_a = shell_proxy(pair, rho_list, cfg, beta_quantity, false);

    report.parts = {{"alpha_term", alpha_phi.value}, {"beta_term", beta_phi.value}};
    report.value = alpha_phi.value + beta_phi.value;
    report.proxy_metadata = {{"rho_list", rho_list},
                             {"alpha_rho_used", round_sig(alpha_phi.rho_used)},
                             {"beta_rho_used", round_sig(beta_phi.rho_used)},
                             {"alpha_shells", shells_json(alpha_phi, rho_list)},
                             {"beta_shells", shells_json(beta_phi, rho_list)},
                             {"alpha_term_a_limit", round_sig(alpha_a.value)},
                             {"beta_term_a_limit", round_sig(beta_a.value)}};
    report.warnings = alpha_phi.warnings;
    for (const auto& w : beta_phi.warnings)
        if (std::find(report.warnings.begin(), report.warnings.end(), w) == report.warnings.end())
            report.warnings.push_back(w);
    return report;
}

std::string to_string(Compactness c) {
    switch (c) {
        case Compactness::Compact: return "compact";
        case Compactness::NonCompact: return "non_compact";
        default: return "inconclusive";
    }
}

nlohmann::json ClassifyResult::to_json() const {
    nlohmann::json seq = nlohmann::json::array();
    for (double v : power_seq) seq.push_back(round_sig(v));
    nlohmann::json shells = nlohmann::json::array();
    for (const auto& [rho, v] : beta_shells)
        shells.push_back({{"rho", round_sig(rho)}, {"sup", round_sig(v)}});
    return {{"verdict", to_string(verdict)},
            {"power_proxy", round_sig(power_proxy)},
            {"beta_proxy", round_sig(beta_proxy)},
            {"power_seq", seq},
            {"beta_shells", shells},
            {"warnings", warnings}};
}

ClassifyResult classify_compactness(const SymbolPair& pair, const SupSearchConfig& cfg,
                                    ClassifyThresholds thresholds, int n_max) {
    ClassifyResult out;
    out.power_seq = power_seminorm_seq(pair, n_max, cfg);
    const TailSup tail = tail_sup(out.power_seq, n_max / 2);
    out.power_proxy = tail.value;

    const GarsiaEvaluator psi_ev(pair.psi);
    const std::vector<double> rho_list{0.9, 0.95, 0.99};
    const ShellProxy beta_shell = shell_proxy(
        pair, rho_list, cfg,
        [&](cplx a, cplx b) { return log_weight_raw(std::abs(b)) * psi_ev.transform2(a); }, true);
    out.beta_proxy = beta_shell.value;
    for (std::size_t i = 0; i < rho_list.size(); ++i)
        out.beta_shells.emplace_back(rho_list[i], beta_shell.shell_values[i]);
    out.warnings = beta_shell.warnings;

    const double eps = thresholds.eps_c;
    const bool small = out.power_proxy < eps && out.beta_proxy < eps;
    const bool decaying = tail.nonincreasing && beta_shell.nonincreasing;
    const bool power_large = out.power_proxy > 10.0 * eps && tail.nondecreasing;
    const bool beta_large = out.beta_proxy > 10.0 * eps && beta_shell.nondecreasing;
    if (small && decaying)
        out.verdict = Compactness::Compact;
    else if (power_large || beta_large)
        out.verdict = Compactness::NonCompact;
    else
        out.verdict = Compactness::Inconclusive;
    return out;
}

cplx TestFunctionF::operator()(cplx w) const { return mobius(b, w) - b; }

AnalyticFunction TestFunctionF::truncated(int degree) const {
    if (degree < 1) throw std::invalid_argument("TestFunctionF: degree must be >= 1");
    std::vector<cplx> c(static_cast<std::size_t>(degree) + 1, cplx(0.0, 0.0));
    const cplx factor = cplx(std::norm(b) - 1.0, 0.0);
    cplx bn(1.0, 0.0);
    for (int n = 0; n + 1 <= degree; ++n) {
        c[static_cast<std::size_t>(n) + 1] = factor * bn;
        bn *= std::conj(b);
    }
    return AnalyticFunction(std::move(c));
}

TestFunctionF test_f(const SymbolPair& pair, const DiscPoint& a) {
    return TestFunctionF{phi_at_base(pair, a.value(), "test_f")};
}

cplx TestFunctionG::h(cplx w) const {
    return std::log(cplx(2.0, 0.0) / (cplx(1.0, 0.0) - std::conj(b) * w));
}

cplx TestFunctionG::operator()(cplx w) const {
    const cplx hw = h(w);
    return hw * hw / h(b);
}

TestFunctionG test_g(const SymbolPair& pair, const DiscPoint& a) {
    return TestFunctionG{phi_at_base(pair, a.value(), "test_g")};
}

double boundary_set_integral(const SymbolPair& pair, const DiscPoint& a, double t,
                             BoundarySet variant, int M) {
    if (t <= 0.0 || t >= 1.0) throw std::domain_error("boundary_set_integral: t must lie in (0,1)");
    if (!is_power_of_two(static_cast<std::size_t>(M)))
        throw std::invalid_argument("boundary_set_integral: M must be a power of two");
    const cplx b = phi_at_base(pair, a.value(), "boundary_set_integral");
    double acc = 0.0;
    for (int j = 0; j < M; ++j) {
        const double th = kTwoPi * static_cast<double>(j) / static_cast<double>(M);
        const cplx xi(std::cos(th), std::sin(th));
        const cplx s = mobius(a.value(), xi);
        const cplx u = clamp_to_closed_disc(pair.phi.at(clamp_to_closed_disc(s)));
        const double gate = (variant == BoundarySet::E) ? std::abs(mobius(b, u)) : std::abs(u);
        if (gate > t) {
            const double m2 = std::norm(pair.psi.at(clamp_to_closed_disc(s)));
            acc += m2 * m2;
        }
    }
    return std::pow(acc / static_cast<double>(M), 0.25);
}

TailQuantityResult tail_quantity(const SymbolPair& pair, double r,
                                 const std::vector<double>& t_list, const SupSearchConfig& cfg) {
    if (r <= 0.0 || r >= 1.0) throw std::domain_error("tail_quantity: r must lie in (0,1)");
    if (t_list.empty()) throw std::invalid_argument("tail_quantity: empty t list");
    for (double t : t_list)
        if (t <= r || t >= 1.0) throw std::domain_error("tail_quantity: t values must lie in (r,1)");
    std::vector<double> ts = t_list;
    std::sort(ts.begin(), ts.end());

    const auto points = base_point_samples(cfg.radii, cfg.angles_per_radius);
    std::vector<double> per_t(ts.size(), 0.0);
    int used = 0;
    for (const cplx& a : points) {
        const cplx b = pair.phi.at(a);
        if (std::abs(b) > r) continue;
        ++used;
        const int M = pullback_grid_size(pair, std::abs(a), std::abs(b));
        // shared pullback pass: all t thresholds reuse |sigma_b o phi o sigma_a|
        std::vector<double> gate(static_cast<std::size_t>(M));
        std::vector<double> weight(static_cast<std::size_t>(M));
        for (int j = 0; j < M; ++j) {
            const double th = kTwoPi * static_cast<double>(j) / static_cast<double>(M);
            const cplx xi(std::cos(th), std::sin(th));
            const cplx s = mobius(a, xi);
            const cplx u = clamp_to_closed_disc(pair.phi.at(clamp_to_closed_disc(s)));
            gate[static_cast<std::size_t>(j)] = std::abs(mobius(b, u));
            const double m2 = std::norm(pair.psi.at(clamp_to_closed_disc(s)));
            weight[static_cast<std::size_t>(j)] = m2 * m2;
        }
        for (std::size_t i = 0; i < ts.size(); ++i) {
            double acc = 0.0;
            for (int j = 0; j < M; ++j)
                if (gate[static_cast<std::size_t>(j)] > ts[i]) acc += weight[static_cast<std::size_t>(j)];
            per_t[i] = std::max(per_t[i], std::pow(acc / static_cast<double>(M), 0.25));
        }
    }

    TailQuantityResult out;
    out.value = per_t.back();  // largest probed t: the integral is nonincreasing in t
    nlohmann::json per = nlohmann::json::array();
    for (std::size_t i = 0; i < ts.size(); ++i)
        per.push_back({{"t", round_sig(ts[i])}, {"sup", round_sig(per_t[i])}});
    out.proxy_metadata = {{"r", round_sig(r)},
                          {"t_list", ts},
                          {"per_t", per},
                          {"base_points_used", used}};
    if (used == 0) out.proxy_metadata["warning"] = "no base points with |phi(a)| <= r";
    return out;
}

int pullback_grid_size(const SymbolPair& pair, double a_abs, double b_abs, int floor_size,
                       int cap_log2) {
    double need = std::max(static_cast<double>(floor_size), 64.0 / (1.0 - a_abs));
    const double dphi = std::max(1.0, static_cast<double>(pair.phi.degree()));
    need = std::max(need, 64.0 * dphi / (1.0 - b_abs));
    const std::size_t cap = std::size_t{1} << cap_log2;
    const std::size_t m = next_power_of_two(static_cast<std::size_t>(std::ceil(need)));
    return static_cast<int>(std::min(m, cap));
}

std::vector<cplx> base_point_samples(const std::vector<double>& radii, int angles) {
    std::vector<double> rs = radii;
    std::sort(rs.begin(), rs.end());
    rs.erase(std::unique(rs.begin(), rs.end()), rs.end());
    std::vector<cplx> points;
    for (double r : rs) {
        if (r < 0.0) continue;
        r = std::min(r, 0.995);
        const int n = (r == 0.0) ? 1 : angles;
        for (int k = 0; k < n; ++k) {
            const double t = kTwoPi * static_cast<double>(k) / static_cast<double>(angles);
            points.emplace_back(r * std::cos(t), r * std::sin(t));
        }
    }
    return points;
}

}  // namespace bmoa
