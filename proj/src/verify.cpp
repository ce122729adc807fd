#include "bmoa/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <numbers>
#include <sstream>

#include "bmoa/jsonutil.hpp"
#include "bmoa/pinned.hpp"
#include "bmoa/rng.hpp"

namespace bmoa {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

cplx clamp_disc(cplx w) {
    const double m = std::abs(w);
    return (m > 1.0) ? w / m : w;
}

cplx mobius(cplx b, cplx w) { return (b - w) / (cplx(1.0, 0.0) - std::conj(b) * w); }

double log_weight_raw(double m) { return std::log(2.0 / (1.0 - m * m)); }

double l2_mean(const std::vector<cplx>& v) {
    double acc = 0.0;
    for (const cplx& x : v) acc += std::norm(x);
    return std::sqrt(acc / static_cast<double>(v.size()));
}

/// Boundary arrays pulled through sigma_a: s_j = sigma_a(xi_j) on the circle,
/// u_j = phi(s_j), w_j = sigma_{phi(a)}(u_j).
struct PullbackFrame {
    cplx a, b;
    std::vector<cplx> s, psi_s, u, w;
};

PullbackFrame make_frame(const SymbolPair& pair, cplx a, int M) {
    PullbackFrame f;
    f.a = a;
    f.b = pair.phi.at(a);
    f.s.resize(static_cast<std::size_t>(M));
    f.psi_s.resize(static_cast<std::size_t>(M));
    f.u.resize(static_cast<std::size_t>(M));
    f.w.resize(static_cast<std::size_t>(M));
    for (int j = 0; j < M; ++j) {
        const double t = kTwoPi * static_cast<double>(j) / static_cast<double>(M);
        const cplx xi(std::cos(t), std::sin(t));
        const cplx s = clamp_disc(mobius(a, xi));
        f.s[static_cast<std::size_t>(j)] = s;
        f.psi_s[static_cast<std::size_t>(j)] = pair.psi.at(s);
        const cplx u = clamp_disc(pair.phi.at(s));
        f.u[static_cast<std::size_t>(j)] = u;
        f.w[static_cast<std::size_t>(j)] = mobius(f.b, u);
    }
    return f;
}

/// Inner search config for seminorms of derived grid functions inside checks.
SupSearchConfig check_seminorm_config() { return family_sweep_config(); }

std::vector<cplx> small_base_set() {
    return base_point_samples({0.0, 0.3, 0.6, 0.85, 0.95}, 8);
}

std::string pair_digest(const SymbolFamily& fam, const char* kind, int idx,
                        const SymbolPair& pair) {
    std::ostringstream os;
    os << "family=" << fam.name << ";seed=" << fam.seed << ";kind=" << kind << ";idx=" << idx
       << ";degpsi=" << pair.psi.degree() << ";degphi=" << pair.phi.degree();
    return os.str();
}

std::string fn_digest(const SymbolFamily& fam, int idx, const AnalyticFunction& f) {
    std::ostringstream os;
    os << "family=" << fam.name << ";seed=" << fam.seed << ";kind=fn;idx=" << idx
       << ";deg=" << f.degree();
    return os.str();
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

/// Seminorm of a grid function, with the transform at one distinguished base
/// point folded into the sampled sup.
double grid_seminorm_including(const GarsiaEvaluator& ev, const SupSearchConfig& cfg, cplx a) {
    const SupResult s = sup_search([&](cplx p) { return ev.transform2(p); }, cfg);
    return std::max(s.value, ev.transform2(a));
}

BoundaryGrid wco_fa_grid(const SymbolPair& pair, cplx b, int M) {
    return sample_boundary(
        [&](cplx xi) { return pair.psi.at(xi) * (mobius(b, clamp_disc(pair.phi.at(xi))) - b); },
        M);
}

double beta_sup_value(const SymbolPair& pair, const SupSearchConfig& cfg) {
    const GarsiaEvaluator psi_ev(pair.psi);
    return sup_search(
               [&](cplx a) {
                   const cplx b = pair.phi.at(a);
                   if (std::abs(b) >= 1.0 - 1e-12) return std::nan("");
                   return log_weight_raw(std::abs(b)) * psi_ev.transform2(a);
               },
               cfg)
        .value;
}

// ---------------------------------------------------------------------------
// check evaluators
// ---------------------------------------------------------------------------

std::vector<CheckReport> check_garsia(const SymbolFamily& fam, const VerifyConfig&) {
    std::vector<CheckReport> out;
    const auto fns = fam.functions(fam.count, 50);
    Rng rng(fam.seed ^ 0x6a72736961ULL);
    const int M = 2048;
    for (std::size_t i = 0; i < fns.size(); ++i) {
        const DiscPoint a(rng.complex_disc(0.95));
        const double vA = transform_norm(fns[i], a, 2.0, M, TransformMethod::PoissonQuadrature);
        const double vB = transform_norm(fns[i], a, 2.0, M, TransformMethod::SigmaPullback);
        const double vC = transform_norm(fns[i], a, 2.0, M, TransformMethod::ClosedForm);
        CheckReport r;
        r.check_id = "garsia_identity";
        r.lhs = std::max({vA, vB, vC});
        r.rhs = std::min({vA, vB, vC});
        r.ratio = safe_ratio(r.lhs, r.rhs);
        r.pass = (r.lhs - r.rhs) <= 1e-8 * std::max(r.rhs, 1e-12);
        r.inputs_digest = fn_digest(fam, static_cast<int>(i), fns[i]);
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<CheckReport> check_pointwise_bound(const SymbolFamily& fam, const VerifyConfig& cfg) {
    std::vector<CheckReport> out;
    const auto fns = fam.functions(fam.count, fam.degree_bound);
    const auto zs = base_point_samples({0.0, 0.3, 0.6, 0.8, 0.9, 0.95, 0.99}, 16);
    for (std::size_t i = 0; i < fns.size(); ++i) {
        const double norm = bmoa_norm(fns[i], cfg.sup);
        double worst = 0.0;
        for (const cplx& z : zs)
            worst = std::max(worst, std::abs(fns[i].at(z)) / log_weight_raw(std::abs(z)));
        CheckReport r;
        r.check_id = "pointwise_bound";
        r.lhs = worst;
        r.rhs = norm;
        r.ratio = safe_ratio(worst, norm);
        r.pass = r.ratio <= pinned::kPointwiseBoundC;
        r.inputs_digest = fn_digest(fam, static_cast<int>(i), fns[i]);
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<CheckReport> check_jn(const SymbolFamily& fam, const VerifyConfig&) {
    std::vector<CheckReport> out;
    SupSearchConfig cfg4;
    cfg4.radii = {0.0, 0.2, 0.4, 0.6, 0.8, 0.9};
    cfg4.angles_per_radius = 32;
    cfg4.refine_rounds = 1;
    cfg4.radius_cap = 0.95;
    const auto fns = fam.functions(fam.count, fam.degree_bound);
    for (std::size_t i = 0; i < fns.size(); ++i) {
        const double s4 = bmoa_seminorm(fns[i], 4.0, cfg4).value;
        const double s2 = bmoa_seminorm(fns[i], 2.0, cfg4).value;
        CheckReport r;
        r.check_id = "jn_equivalence";
        r.lhs = s4;
        r.rhs = s2;
        const bool degenerate = s2 < 1e-12 && s4 < 1e-12;
        r.ratio = degenerate ? 1.0 : safe_ratio(s4, s2);
        r.pass = degenerate ||
                 (r.ratio <= pinned::kJohnNirenbergC && r.ratio >= 1.0 / pinned::kJohnNirenbergC);
        if (degenerate) r.notes = "constant symbol";
        r.inputs_digest = fn_digest(fam, static_cast<int>(i), fns[i]);
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<CheckReport> check_littlewood(const SymbolFamily& fam, const VerifyConfig&) {
    std::vector<CheckReport> out;
    Rng rng(fam.seed ^ 0x6c697474ULL);
    for (int i = 0; i < fam.count; ++i) {
        // g in H^2 with g(0) = 0, phi a self-map fixing 0
        const int dg = rng.uniform_int(1, std::max(1, fam.degree_bound));
        std::vector<cplx> gc(static_cast<std::size_t>(dg) + 1, cplx(0.0, 0.0));
        for (int k = 1; k <= dg; ++k) gc[static_cast<std::size_t>(k)] = rng.complex_box(1.0);
        const AnalyticFunction g{std::move(gc)};

        const int dp = rng.uniform_int(1, std::max(1, fam.degree_bound));
        std::vector<cplx> pc(static_cast<std::size_t>(dp) + 1, cplx(0.0, 0.0));
        double sum = 0.0;
        for (int k = 1; k <= dp; ++k) {
            pc[static_cast<std::size_t>(k)] = rng.complex_box(1.0);
            sum += std::abs(pc[static_cast<std::size_t>(k)]);
        }
        const double target = rng.uniform(0.3, 1.0);
        for (auto& c : pc) c *= target / (sum + 1e-12);
        const AnalyticFunction phi{std::move(pc)};

        const int M = static_cast<int>(next_power_of_two(
            std::max<std::size_t>(1024, 2 * static_cast<std::size_t>(dg * dp + 1))));
        const BoundaryGrid comp =
            sample_boundary([&](cplx xi) { return g.at(clamp_disc(phi.at(xi))); }, M);
        const double lhs = hardy_norm(comp, 2.0);
        const double rhs =
            hardy_norm(boundary_grid(phi, M), 2.0) * hardy_norm(boundary_grid(g, M), 2.0);
        CheckReport r;
        r.check_id = "littlewood_composition";
        r.lhs = lhs;
        r.rhs = rhs;
        r.ratio = safe_ratio(lhs, rhs);
        r.pass = r.ratio <= pinned::kLittlewoodC;
        std::ostringstream os;
        os << "family=" << fam.name << ";seed=" << fam.seed << ";kind=littlewood;idx=" << i
           << ";degg=" << dg << ";degphi=" << dp;
        r.inputs_digest = os.str();
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<CheckReport> check_schwarz(const SymbolFamily& fam, const VerifyConfig&) {
    std::vector<CheckReport> out;
    Rng rng(fam.seed ^ 0x73636877ULL);
    for (int i = 0; i < fam.count; ++i) {
        const int dg = rng.uniform_int(1, std::max(1, fam.degree_bound));
        std::vector<cplx> gc(static_cast<std::size_t>(dg) + 1, cplx(0.0, 0.0));
        for (int k = 1; k <= dg; ++k) gc[static_cast<std::size_t>(k)] = rng.complex_box(1.0);
        const AnalyticFunction g{std::move(gc)};

        double worst = 0.0;
        for (double t : {0.5, 0.75, 0.9}) {
            double maxg = 0.0;
            for (int k = 0; k < 4096; ++k) {
                const double th = kTwoPi * static_cast<double>(k) / 4096.0;
                maxg = std::max(maxg, std::abs(g.at(cplx(t * std::cos(th), t * std::sin(th)))));
            }
            if (maxg == 0.0) continue;
            for (double fr : {0.1, 0.3, 0.5, 0.7, 0.9, 1.0}) {
                for (int k = 0; k < 16; ++k) {
                    const double th = kTwoPi * static_cast<double>(k) / 16.0;
                    const cplx z(fr * t * std::cos(th), fr * t * std::sin(th));
                    if (std::abs(z) < 1e-12) continue;
                    worst = std::max(worst, std::abs(g.at(z)) / (2.0 * std::abs(z) * maxg));
                }
            }
        }
        CheckReport r;
        r.check_id = "schwarz_growth";
        r.lhs = worst;
        r.rhs = 1.0;
        r.ratio = worst;
        r.pass = worst <= 1.0 + 1e-4;  // circle max sampled at 4096 angles
        r.inputs_digest = fn_digest(fam, i, g);
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<CheckReport> check_lemma24_i(const SymbolFamily& fam, const VerifyConfig&) {
    std::vector<CheckReport> out;
    const auto pairs = fam.pairs();
    const auto bases = small_base_set();
    const SupSearchConfig sem_cfg = check_seminorm_config();
    int idx = 0;
    for (const auto& pair : pairs) {
        CheckReport r;
        r.check_id = "lemma24_i";
        r.inputs_digest = pair_digest(fam, "pair", idx, pair);
        double worst_ratio = 0.0, worst_lhs = 0.0, worst_rhs = 1.0;
        double max_identity_dev = 0.0;
        bool chain_ok = true;
        int used = 0;
        for (const cplx& a : bases) {
            const cplx b = pair.phi.at(a);
            if (std::abs(b) >= 0.99) continue;
            ++used;
            const double la = log_weight_raw(std::abs(b));
            const double beta_a = beta(pair, DiscPoint(a));
            const double alpha_a = alpha(pair, DiscPoint(a));

            const int Mg = pullback_grid_size(pair, 0.0, std::abs(b));
            const GarsiaEvaluator wf_ev(wco_fa_grid(pair, b, Mg));
            const double sem = grid_seminorm_including(wf_ev, sem_cfg, a);

            // proof chain on one shared frame: alpha(a) equals
            // || psi|a (f_a o phi o sigma_a) - (W f_a)|a ||_2, then the
            // triangle inequality gives alpha <= 2 beta/L + ||(W f_a)|a||_2
            const int Mf = pullback_grid_size(pair, std::abs(a), std::abs(b));
            const PullbackFrame fr = make_frame(pair, a, Mf);
            const cplx psi_a = pair.psi.at(a);
            const cplx wfa_a = psi_a * (mobius(b, clamp_disc(pair.phi.at(a))) - b);
            std::vector<cplx> diff(fr.s.size()), tpsi(fr.s.size()), twfa(fr.s.size());
            for (std::size_t j = 0; j < fr.s.size(); ++j) {
                const cplx fa_val = fr.w[j] - b;  // f_a o phi o sigma_a
                tpsi[j] = fr.psi_s[j] - psi_a;
                twfa[j] = fr.psi_s[j] * fa_val - wfa_a;
                diff[j] = tpsi[j] * fa_val - twfa[j];
            }
            const double identity_route = l2_mean(diff);
            max_identity_dev =
                std::max(max_identity_dev,
                         std::fabs(identity_route - alpha_a) / std::max(alpha_a, 1e-12));
            const double chain_rhs = 2.0 * l2_mean(tpsi) + l2_mean(twfa);
            if (identity_route > chain_rhs * (1.0 + 1e-12) + 1e-12) chain_ok = false;

            const double rhs = beta_a / la + sem;
            const double ratio = safe_ratio(alpha_a, rhs);
            if (ratio > worst_ratio) {
                worst_ratio = ratio;
                worst_lhs = alpha_a;
                worst_rhs = rhs;
            }
        }
        r.lhs = worst_lhs;
        r.rhs = worst_rhs;
        r.ratio = used > 0 ? worst_ratio : 1.0;
        r.pass = chain_ok && max_identity_dev <= 1e-8 && r.ratio <= pinned::kLemma24iC;
        r.notes = "identity_dev=" + format_double(max_identity_dev) +
                  ";chain_ok=" + (chain_ok ? "1" : "0") + ";bases=" + std::to_string(used);
        out.push_back(std::move(r));
        ++idx;
    }
    return out;
}

std::vector<CheckReport> check_lemma24_ii(const SymbolFamily& fam, const VerifyConfig&) {
    std::vector<CheckReport> out;
    const auto pairs = fam.pairs();
    const auto bases = small_base_set();
    const SupSearchConfig sem_cfg = check_seminorm_config();
    int idx = 0;
    for (const auto& pair : pairs) {
        CheckReport r;
        r.check_id = "lemma24_ii";
        r.inputs_digest = pair_digest(fam, "pair", idx, pair);
        double worst_ratio = 0.0, worst_lhs = 0.0, worst_rhs = 1.0;
        int used = 0;
        for (const cplx& a : bases) {
            const cplx b = pair.phi.at(a);
            if (std::abs(b) >= 0.99) continue;
            ++used;
            const double beta_a = beta(pair, DiscPoint(a));
            const double alpha_a = alpha(pair, DiscPoint(a));
            const TestFunctionG g = test_g(pair, DiscPoint(a));
            const double lb = log_weight_raw(std::abs(b));  // g_a(phi(a)) = L(phi(a))

            const int Mg = pullback_grid_size(pair, 0.0, std::abs(b));
            const BoundaryGrid wg = sample_boundary(
                [&](cplx xi) { return pair.psi.at(xi) * g(clamp_disc(pair.phi.at(xi))); }, Mg);
            const double sem = grid_seminorm_including(GarsiaEvaluator(wg), sem_cfg, a);

            const int Mf = pullback_grid_size(pair, std::abs(a), std::abs(b));
            const PullbackFrame fr = make_frame(pair, a, Mf);
            const cplx psi_a = pair.psi.at(a);
            std::vector<cplx> prod(fr.s.size());
            for (std::size_t j = 0; j < fr.s.size(); ++j)
                prod[j] = (fr.psi_s[j] - psi_a) * (g(fr.u[j]) - lb);
            const double cross = l2_mean(prod);

            const double rhs = cross + sem + alpha_a;
            const double ratio = safe_ratio(beta_a, rhs);
            if (ratio > worst_ratio) {
                worst_ratio = ratio;
                worst_lhs = beta_a;
                worst_rhs = rhs;
            }
        }
        r.lhs = worst_lhs;
        r.rhs = worst_rhs;
        r.ratio = used > 0 ? worst_ratio : 1.0;
        r.pass = r.ratio <= pinned::kLemma24iiC;
        r.notes = "bases=" + std::to_string(used);
        out.push_back(std::move(r));
        ++idx;
    }
    return out;
}

std::vector<CheckReport> check_lemma24_iii(const SymbolFamily& fam, const VerifyConfig& cfg) {
    std::vector<CheckReport> out;
    const auto pairs = fam.pairs();
    const auto fns = fam.functions(3, fam.degree_bound);
    const auto bases = base_point_samples({0.0, 0.5, 0.9}, 8);
    std::vector<double> fsem;
    for (const auto& f : fns) fsem.push_back(bmoa_seminorm(f, 2.0, cfg.sup).value);
    int idx = 0;
    for (const auto& pair : pairs) {
        CheckReport r;
        r.check_id = "lemma24_iii";
        r.inputs_digest = pair_digest(fam, "pair", idx, pair);
        double worst_ratio = 0.0, worst_lhs = 0.0, worst_rhs = 1.0;
        for (std::size_t fi = 0; fi < fns.size(); ++fi) {
            const AnalyticFunction& f = fns[fi];
            const int Mw = static_cast<int>(next_power_of_two(std::max<std::size_t>(
                1024, 2 * static_cast<std::size_t>(pair.psi.degree() +
                                                   f.degree() * pair.phi.degree() + 1))));
            const GarsiaEvaluator wf_ev(apply_wco(pair, f, Mw));
            for (const cplx& a : bases) {
                const cplx b = pair.phi.at(a);
                if (std::abs(b) >= 0.99) continue;
                const double lhs = wf_ev.transform2(a);
                const double alpha_a = alpha(pair, DiscPoint(a));
                const double beta_a = beta(pair, DiscPoint(a));
                const int Mf = pullback_grid_size(pair, std::abs(a), std::abs(b));
                const PullbackFrame frame = make_frame(pair, a, Mf);
                const cplx psi_a = pair.psi.at(a);
                const cplx fb = f.at(b);
                std::vector<cplx> prod(frame.s.size());
                for (std::size_t j = 0; j < frame.s.size(); ++j)
                    prod[j] = (frame.psi_s[j] - psi_a) * (f.at(frame.u[j]) - fb);
                const double cross = l2_mean(prod);
                const double rhs = cross + (alpha_a + beta_a) * fsem[fi];
                const double ratio = safe_ratio(lhs, rhs);
                if (ratio > worst_ratio) {
                    worst_ratio = ratio;
                    worst_lhs = lhs;
                    worst_rhs = rhs;
                }
            }
        }
        r.lhs = worst_lhs;
        r.rhs = worst_rhs;
        r.ratio = worst_ratio;
        r.pass = r.ratio <= pinned::kLemma24iiiC;
        out.push_back(std::move(r));
        ++idx;
    }
    return out;
}

std::vector<CheckReport> check_lemma24_iv(const SymbolFamily& fam, const VerifyConfig& cfg) {
    std::vector<CheckReport> out;
    const auto pairs = fam.pairs();
    const auto fns = fam.functions(3, fam.degree_bound);
    const auto bases = base_point_samples({0.0, 0.5, 0.9}, 8);
    std::vector<double> fsem;
    for (const auto& f : fns) fsem.push_back(bmoa_seminorm(f, 2.0, cfg.sup).value);
    int idx = 0;
    for (const auto& pair : pairs) {
        CheckReport r;
        r.check_id = "lemma24_iv";
        r.inputs_digest = pair_digest(fam, "pair", idx, pair);
        const double west = norm_estimate_powers(pair, cfg.sup, cfg.n_max).value;
        const double supbeta = beta_sup_value(pair, cfg.sup);
        double worst_ratio = 0.0, worst_lhs = 0.0, worst_rhs = 1.0;
        for (std::size_t fi = 0; fi < fns.size(); ++fi) {
            const AnalyticFunction& f = fns[fi];
            for (const cplx& a : bases) {
                const cplx b = pair.phi.at(a);
                if (std::abs(b) >= 0.99) continue;
                const int Mf = pullback_grid_size(pair, std::abs(a), std::abs(b));
                const PullbackFrame frame = make_frame(pair, a, Mf);
                const cplx psi_a = pair.psi.at(a);
                const cplx fb = f.at(b);
                std::vector<cplx> prod(frame.s.size());
                for (std::size_t j = 0; j < frame.s.size(); ++j)
                    prod[j] = (frame.psi_s[j] - psi_a) * (f.at(frame.u[j]) - fb);
                const double lhs = l2_mean(prod);
                const double lb = log_weight_raw(std::abs(b));
                const double rhs = fsem[fi] * std::min(supbeta, west / std::sqrt(lb));
                const double ratio = safe_ratio(lhs, rhs);
                if (ratio > worst_ratio) {
                    worst_ratio = ratio;
                    worst_lhs = lhs;
                    worst_rhs = rhs;
                }
            }
        }
        r.lhs = worst_lhs;
        r.rhs = worst_rhs;
        r.ratio = worst_ratio;
        r.pass = r.ratio <= pinned::kLemma24ivC;
        r.notes = "wco_norm_proxy=" + format_double(west);
        out.push_back(std::move(r));
        ++idx;
    }
    return out;
}

std::vector<CheckReport> check_lemma26(const SymbolFamily& fam, const VerifyConfig& cfg) {
    std::vector<CheckReport> out;
    const auto pairs = fam.pairs();
    const auto bases = small_base_set();
    const SupSearchConfig sem_cfg = check_seminorm_config();
    int idx = 0;
    for (const auto& pair : pairs) {
        CheckReport r;
        r.check_id = "lemma26_constant2";
        r.inputs_digest = pair_digest(fam, "pair", idx, pair);
        const std::vector<double> seq = power_seminorm_seq(pair, cfg.n_max, cfg.sup);
        const double rhs = *std::max_element(seq.begin(), seq.end());

        double lhs = 0.0;
        int used = 0;
        for (const cplx& a : bases) {
            const cplx b = pair.phi.at(a);
            if (std::abs(b) >= 0.99) continue;
            ++used;
            const int Mg = pullback_grid_size(pair, 0.0, std::abs(b));
            const GarsiaEvaluator ev(wco_fa_grid(pair, b, Mg));
            lhs = std::max(lhs, grid_seminorm_including(ev, sem_cfg, a));
        }

        // dilation-series identity: the truncation of
        // (|b|^2 - 1) sum_{n<=N} conj(b)^n psi phi^{n+1} converges to W f_a on
        // the grid at geometric rate, within the explicit factor 2.
        const int Ms = 1024;
        const BoundaryGrid psi_g = sample_boundary([&](cplx xi) { return pair.psi.at(xi); }, Ms);
        const BoundaryGrid phi_g =
            sample_boundary([&](cplx xi) { return clamp_disc(pair.phi.at(xi)); }, Ms);
        const double maxpsi = grid_sup(psi_g);
        double series_worst = 0.0;
        bool series_ok = true;
        for (const cplx& a : bases) {
            const cplx b = pair.phi.at(a);
            const double bm = std::abs(b);
            if (bm < 0.05 || bm > 0.95) continue;
            const BoundaryGrid exact = wco_fa_grid(pair, b, Ms);
            std::vector<cplx> partial(static_cast<std::size_t>(Ms), cplx(0.0, 0.0));
            std::vector<cplx> power = phi_g.samples();  // phi^{n+1} at n = 0
            const cplx factor(std::norm(b) - 1.0, 0.0);
            cplx bn(1.0, 0.0);
            int n = 0;
            for (int N : {4, 8, 16}) {
                for (; n <= N; ++n) {
                    for (int j = 0; j < Ms; ++j) {
                        const auto ju = static_cast<std::size_t>(j);
                        partial[ju] += factor * bn * psi_g.samples()[ju] * power[ju];
                    }
                    bn *= std::conj(b);
                    for (int j = 0; j < Ms; ++j) {
                        const auto ju = static_cast<std::size_t>(j);
                        power[ju] *= phi_g.samples()[ju];
                    }
                }
                const double bound = 2.0 * std::pow(bm, N + 1) * maxpsi;
                if (bound < 1e-12) break;
                double err = 0.0;
                for (int j = 0; j < Ms; ++j)
                    err = std::max(err,
                                   std::abs(partial[static_cast<std::size_t>(j)] -
                                            exact.samples()[static_cast<std::size_t>(j)]));
                series_worst = std::max(series_worst, err / bound);
                if (err > bound * (1.0 + 1e-6) + 1e-12) series_ok = false;
            }
        }

        r.lhs = lhs;
        r.rhs = rhs;
        r.ratio = safe_ratio(lhs, rhs);
        r.pass = series_ok && (used == 0 || r.ratio <= pinned::kLemma26Factor);
        r.notes = "series_max_ratio=" + format_double(series_worst) +
                  ";bases=" + std::to_string(used);
        out.push_back(std::move(r));
        ++idx;
    }
    return out;
}

std::vector<CheckReport> check_thm11(const SymbolFamily& fam, const VerifyConfig& cfg) {
    std::vector<CheckReport> out;
    const auto pairs = fam.pairs();
    int idx = 0;
    for (const auto& pair : pairs) {
        const double v_pow = norm_estimate_powers(pair, cfg.sup, cfg.n_max).value;
        const double v_cls = norm_estimate_classic(pair, cfg.sup).value;
        CheckReport r;
        r.check_id = "thm11_two_sided";
        r.lhs = v_pow;
        r.rhs = v_cls;
        const bool degenerate = v_pow < 1e-9 && v_cls < 1e-9;
        r.ratio = degenerate ? 1.0 : safe_ratio(v_pow, v_cls);
        r.pass = degenerate || (r.ratio >= pinned::kThm11BandLo / 1.1 &&
                                r.ratio <= pinned::kThm11BandHi * 1.1);
        if (degenerate) r.notes = "zero operator";
        r.inputs_digest = pair_digest(fam, "pair", idx, pair);
        out.push_back(std::move(r));
        ++idx;
    }
    return out;
}

std::vector<CheckReport> check_thm12(const SymbolFamily& fam, const VerifyConfig& cfg) {
    std::vector<CheckReport> out;
    const auto pairs = fam.pairs();
    const auto bases = small_base_set();
    int idx = 0;
    for (const auto& pair : pairs) {
        const EstimateReport powers =
            essnorm_estimate_powers(pair, cfg.sup, cfg.rho_list, cfg.n_max);
        const double e_pow = powers.value;
        const double e_bnd = essnorm_estimate_boundary(pair, cfg.sup, cfg.rho_list).value;

        // intermediate bound from the VMOA corollary proof:
        // ||sigma_b o phi o sigma_a||_2 <= ||phi o sigma_a - phi(a)||_2 / (1 - |phi(a)|)
        bool sigma_bound_ok = true;
        for (const cplx& a : bases) {
            const cplx b = pair.phi.at(a);
            const double bm = std::abs(b);
            if (bm >= 0.99) continue;
            const int Mf = pullback_grid_size(pair, std::abs(a), bm);
            const PullbackFrame frame = make_frame(pair, a, Mf);
            std::vector<cplx> shifted(frame.u.size());
            for (std::size_t j = 0; j < frame.u.size(); ++j) shifted[j] = frame.u[j] - b;
            const double lhs2 = l2_mean(frame.w);
            const double rhs2 = l2_mean(shifted) / (1.0 - bm);
            if (lhs2 > rhs2 * (1.0 + 1e-9) + 1e-12) sigma_bound_ok = false;
        }

        CheckReport r;
        r.check_id = "thm12_consistency";
        r.lhs = e_pow;
        r.rhs = e_bnd;
        const bool both_compact = e_pow < 1e-6 && e_bnd < 1e-6;
        // Strictly interior phi: both limits are 0, but ||psi phi^n||_* only
        // decays like ||phi||_inf^n and may still sit above the floor at the
        // window start. Accept when the tail is certified geometric:
        // ||psi phi^n||_* <= 2 sup|psi| ||phi||_inf^n.
        bool interior_decay = false;
        if (!both_compact && e_bnd < 1e-6 && pair.strictly_interior()) {
            const int Mp = static_cast<int>(next_power_of_two(
                std::max<std::size_t>(1024, 2 * static_cast<std::size_t>(pair.psi.degree() + 1))));
            const double cap = 2.0 * grid_sup(boundary_grid(pair.psi, Mp)) *
                               std::pow(pair.phi_sup_estimate, cfg.n_max / 2);
            const bool trend = powers.proxy_metadata.value("power_tail_nonincreasing", false);
            interior_decay = trend && e_pow <= cap * (1.0 + 1e-9) + 1e-12;
        }
        const bool degenerate = both_compact || interior_decay;
        r.ratio = degenerate ? 1.0 : safe_ratio(e_pow, e_bnd);
        r.pass = sigma_bound_ok &&
                 (degenerate || (r.ratio >= pinned::kThm12BandLo / 1.1 &&
                                 r.ratio <= pinned::kThm12BandHi * 1.1));
        r.notes = std::string("sigma_bound_ok=") + (sigma_bound_ok ? "1" : "0") +
                  (both_compact ? ";both_compact" : "") +
                  (interior_decay ? ";interior_geometric_decay" : "");
        r.inputs_digest = pair_digest(fam, "pair", idx, pair);
        out.push_back(std::move(r));
        ++idx;
    }
    return out;
}

std::vector<CheckReport> check_lower_bound(const SymbolFamily& fam, const VerifyConfig& cfg) {
    std::vector<CheckReport> out;
    const auto pairs = fam.pairs();
    const SupSearchConfig sem_cfg = check_seminorm_config();
    const int n_wit = std::min(64, cfg.n_max);

    std::vector<double> monomial_norm(static_cast<std::size_t>(n_wit) + 1, 1.0);
    for (int n = 1; n <= n_wit; ++n)
        monomial_norm[static_cast<std::size_t>(n)] =
            bmoa_norm(AnalyticFunction::monomial(n), cfg.sup);

    const auto witness_bases = base_point_samples({0.3, 0.6, 0.85}, 4);
    int idx = 0;
    for (const auto& pair : pairs) {
        CheckReport r;
        r.check_id = "lower_bound_witness";
        r.inputs_digest = pair_digest(fam, "pair", idx, pair);
        const double est = norm_estimate_powers(pair, cfg.sup, cfg.n_max).value;
        const std::vector<double> seq = power_seminorm_seq(pair, n_wit, cfg.sup);
        const cplx psi0 = pair.psi.at(cplx(0.0, 0.0));
        const cplx phi0 = pair.phi.at(cplx(0.0, 0.0));

        double worst = 0.0;
        std::string worst_witness = "none";
        cplx p0n(1.0, 0.0);
        for (int n = 1; n <= n_wit; ++n) {
            p0n *= phi0;
            const double wnorm = std::abs(psi0 * p0n) + seq[static_cast<std::size_t>(n)];
            const double ratio = wnorm / monomial_norm[static_cast<std::size_t>(n)];
            if (ratio > worst) {
                worst = ratio;
                worst_witness = "z^" + std::to_string(n);
            }
        }
        for (const cplx& a : witness_bases) {
            const cplx b = pair.phi.at(a);
            const double bm = std::abs(b);
            if (bm < 0.05 || bm > 0.95) continue;
            const int Mg = poisson_grid_size(bm);
            {
                const TestFunctionF f = test_f(pair, DiscPoint(a));
                const GarsiaEvaluator f_ev(
                    sample_boundary([&](cplx xi) { return f(xi); }, Mg));
                const double fnorm = grid_seminorm_including(f_ev, sem_cfg, a);  // f_a(0) = 0
                const int Mw = pullback_grid_size(pair, 0.0, bm);
                const GarsiaEvaluator wf_ev(wco_fa_grid(pair, b, Mw));
                const double wnorm = std::abs(psi0 * (mobius(b, clamp_disc(phi0)) - b)) +
                                     grid_seminorm_including(wf_ev, sem_cfg, a);
                const double ratio = safe_ratio(wnorm, fnorm);
                if (fnorm > 1e-9 && ratio > worst) {
                    worst = ratio;
                    worst_witness = "f_a";
                }
            }
            {
                const TestFunctionG g = test_g(pair, DiscPoint(a));
                const GarsiaEvaluator g_ev(
                    sample_boundary([&](cplx xi) { return g(xi); }, Mg));
                const double gnorm =
                    std::abs(g(cplx(0.0, 0.0))) + grid_seminorm_including(g_ev, sem_cfg, a);
                const int Mw = pullback_grid_size(pair, 0.0, bm);
                const GarsiaEvaluator wg_ev(sample_boundary(
                    [&](cplx xi) { return pair.psi.at(xi) * g(clamp_disc(pair.phi.at(xi))); },
                    Mw));
                const double wnorm = std::abs(psi0 * g(clamp_disc(phi0))) +
                                     grid_seminorm_including(wg_ev, sem_cfg, a);
                const double ratio = safe_ratio(wnorm, gnorm);
                if (ratio > worst) {
                    worst = ratio;
                    worst_witness = "g_a";
                }
            }
        }

        r.lhs = worst;
        r.rhs = est;
        r.ratio = safe_ratio(worst, est);
        r.pass = (worst == 0.0 && est == 0.0) || r.ratio <= pinned::kLowerBoundWitnessC;
        r.notes = "worst_witness=" + worst_witness;
        out.push_back(std::move(r));
        ++idx;
    }
    return out;
}

std::vector<CheckReport> check_sandwich(const SymbolFamily& fam, const VerifyConfig&) {
    std::vector<CheckReport> out;
    const auto pairs = fam.pairs();
    const auto bases = base_point_samples({0.0, 0.2, 0.4, 0.6, 0.8, 0.9}, 16);
    int idx = 0;
    for (const auto& pair : pairs) {
        CheckReport r;
        r.check_id = "sandwich_remark33";
        r.inputs_digest = pair_digest(fam, "pair", idx, pair);
        double worst_excess = 0.0;  // max of ratio/s and (1/s)/ratio, should stay <= 1
        int points = 0;
        for (double rr : {0.5, 0.9}) {
            const double s = s_factor(rr);
            for (const cplx& a : bases) {
                const cplx b = pair.phi.at(a);
                if (std::abs(b) > rr) continue;
                const PullbackFrame frame = make_frame(pair, a, 1024);
                for (std::size_t j = 0; j < frame.u.size(); ++j) {
                    const double du = 1.0 - std::abs(frame.u[j]);
                    const double dw = 1.0 - std::abs(frame.w[j]);
                    if (du <= 1e-13) continue;  // both sides vanish on the boundary
                    const double ratio = dw / du;
                    worst_excess = std::max({worst_excess, ratio / s, 1.0 / (s * ratio)});
                    ++points;
                }
            }
        }
        r.lhs = worst_excess;
        r.rhs = 1.0;
        r.ratio = worst_excess;
        r.pass = points == 0 || worst_excess <= 1.0 + 1e-9;
        r.notes = "grid_points=" + std::to_string(points);
        out.push_back(std::move(r));
        ++idx;
    }
    return out;
}

std::vector<CheckReport> check_eset(const SymbolFamily& fam, const VerifyConfig&) {
    std::vector<CheckReport> out;
    const auto pairs = fam.pairs();
    const auto bases = base_point_samples({0.0, 0.2, 0.4, 0.6, 0.8, 0.9}, 16);
    int idx = 0;
    for (const auto& pair : pairs) {
        CheckReport r;
        r.check_id = "eset_inclusions";
        r.inputs_digest = pair_digest(fam, "pair", idx, pair);
        long violations = 0;
        long checked = 0;
        for (double rr : {0.5, 0.9}) {
            const double s = s_factor(rr);
            const std::vector<double> ts =
                (rr == 0.5) ? std::vector<double>{0.85, 0.9, 0.99} : std::vector<double>{0.98, 0.99};
            for (const cplx& a : bases) {
                const cplx b = pair.phi.at(a);
                if (std::abs(b) > rr) continue;
                const PullbackFrame frame = make_frame(pair, a, 1024);
                for (double t : ts) {
                    const double t_inner = 1.0 - (1.0 - t) / s;  // ETilde(t_inner) subset E(t)
                    const double t_outer = 1.0 - (1.0 - t) * s;  // E(t) subset ETilde(t_outer)
                    for (std::size_t j = 0; j < frame.u.size(); ++j) {
                        const double mu = std::abs(frame.u[j]);
                        const double mw = std::abs(frame.w[j]);
                        ++checked;
                        if (mu > t_inner + 1e-9 && mw <= t - 1e-9) ++violations;
                        if (mw > t + 1e-9 && mu <= t_outer - 1e-9) ++violations;
                    }
                }
            }
        }
        r.lhs = static_cast<double>(violations);
        r.rhs = static_cast<double>(checked);
        r.ratio = checked > 0 ? static_cast<double>(violations) / static_cast<double>(checked) : 0.0;
        r.pass = violations == 0;
        out.push_back(std::move(r));
        ++idx;
    }
    return out;
}

std::vector<CheckReport> check_lemma42(const SymbolFamily& fam, const VerifyConfig& cfg) {
    std::vector<CheckReport> out;
    const auto pairs = fam.pairs();
    SupSearchConfig tq_cfg;
    tq_cfg.radii = {0.0, 0.2, 0.4, 0.6, 0.8, 0.9, 0.95};
    tq_cfg.angles_per_radius = 32;
    int idx = 0;
    for (const auto& pair : pairs) {
        const TailQuantityResult tq = tail_quantity(pair, 0.9, {0.95, 0.99}, tq_cfg);
        const std::vector<double> seq = power_seminorm_seq(pair, cfg.n_max, cfg.sup);
        const double rhs = tail_sup(seq, cfg.n_max / 2).value;
        CheckReport r;
        r.check_id = "lemma42_tail";
        r.lhs = tq.value;
        r.rhs = rhs;
        r.ratio = safe_ratio(tq.value, rhs);
        const bool both_small = tq.value < 1e-6 && rhs < 1e-6;
        r.pass = both_small || r.ratio <= pinned::kLemma42C;
        r.inputs_digest = pair_digest(fam, "pair", idx, pair);
        out.push_back(std::move(r));
        ++idx;
    }
    return out;
}

std::vector<CheckReport> check_sn(const SymbolFamily& fam, const VerifyConfig& cfg) {
    std::vector<CheckReport> out;
    const auto fns = fam.functions(fam.count, fam.degree_bound);
    // sample points of Q(0.5, 0.5), a compact subset of the disc
    std::vector<cplx> zs;
    for (const cplx& z : base_point_samples({0.0, 0.2, 0.4, 0.6, 0.8}, 16))
        if (in_Q(z, 0.5, 0.5)) zs.push_back(z);
    const std::vector<int> ns{1, 2, 4, 8, 16, 32, 64};
    for (std::size_t i = 0; i < fns.size(); ++i) {
        const AnalyticFunction& f = fns[i];
        const double norm = bmoa_norm(f, cfg.sup);
        CheckReport r;
        r.check_id = "sn_locally_uniform";
        r.inputs_digest = fn_digest(fam, static_cast<int>(i), f);
        if (norm < 1e-12 || f.is_constant(1e-15)) {
            r.pass = true;
            r.ratio = 1.0;
            r.notes = "constant symbol: S_n f = 0";
            out.push_back(std::move(r));
            continue;
        }
        std::vector<double> v;
        for (int n : ns) {
            const double rn = static_cast<double>(n) / (1.0 + static_cast<double>(n));
            const AnalyticFunction sn = f - dilate(f, rn);
            double m = 0.0;
            for (const cplx& z : zs) m = std::max(m, std::abs(sn.at(z)));
            v.push_back(m / norm);
        }
        bool monotone = true;
        double max_upstep = 0.0;
        for (std::size_t k = 1; k < v.size(); ++k) {
            if (v[k] > v[k - 1] * (1.0 + pinned::kSnMonotoneSlack) + 1e-15) monotone = false;
            if (v[k - 1] > 0.0) max_upstep = std::max(max_upstep, v[k] / v[k - 1] - 1.0);
        }
        r.lhs = v.back();
        r.rhs = v.front();
        r.ratio = safe_ratio(v.back(), v.front());
        r.pass = monotone && r.ratio <= pinned::kSnDecayRatio;
        r.notes = std::string("monotone=") + (monotone ? "1" : "0") +
                  ";max_upstep=" + format_double(max_upstep);
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace

SupSearchConfig family_sweep_config() {
    SupSearchConfig cfg;
    cfg.radii = {0.0, 0.2, 0.4, 0.6, 0.8, 0.9, 0.95};
    cfg.angles_per_radius = 32;
    cfg.refine_rounds = 1;
    return cfg;
}

double safe_ratio(double lhs, double rhs) {
    if (lhs == 0.0 && rhs == 0.0) return 1.0;
    return lhs / std::max(rhs, 1e-300);
}

nlohmann::json CheckReport::to_json() const {
    return {{"check_id", check_id}, {"lhs", round_sig(lhs)},
            {"rhs", round_sig(rhs)}, {"ratio", round_sig(ratio)},
            {"pass", pass},          {"inputs_digest", inputs_digest},
            {"notes", notes}};
}

std::vector<SymbolPair> SymbolFamily::pairs() const {
    if (!fixed_pairs.empty()) return fixed_pairs;
    std::vector<SymbolPair> out;
    if (include_deterministic) {
        const AnalyticFunction one = AnalyticFunction::constant(cplx(1.0, 0.0));
        const AnalyticFunction zero = AnalyticFunction::constant(cplx(0.0, 0.0));
        const AnalyticFunction half_c = AnalyticFunction::constant(cplx(0.5, 0.0));
        const AnalyticFunction id = AnalyticFunction::identity();
        const AnalyticFunction half_z = AnalyticFunction({cplx(0.0), cplx(0.5)});
        const AnalyticFunction sq = AnalyticFunction::monomial(2);
        const AnalyticFunction cayley = AnalyticFunction({cplx(0.5), cplx(0.5)});  // (1+z)/2
        const std::vector<AnalyticFunction> psis{one, zero, half_c, id, half_z, sq, cayley};
        const std::vector<AnalyticFunction> phis{id, half_z, sq, cayley, zero, half_c};
        for (const auto& psi : psis)
            for (const auto& phi : phis) out.emplace_back(psi, phi);
    }
    Rng rng(seed);
    for (int i = 0; i < count; ++i) {
        const int dpsi = rng.uniform_int(0, degree_bound);
        std::vector<cplx> pc(static_cast<std::size_t>(dpsi) + 1);
        for (auto& c : pc) c = rng.complex_box(coefficient_scale);
        AnalyticFunction psi{std::move(pc)};

        const int dphi = rng.uniform_int(1, std::max(1, degree_bound));
        std::vector<cplx> qc(static_cast<std::size_t>(dphi) + 1);
        for (auto& c : qc) c = rng.complex_box(1.0);
        const double mode = rng.uniform();
        const double target = rng.uniform(0.3, 0.99);
        double sum = 0.0;
        if (mode < 0.25) {
            // boundary-touching self-map: nonnegative coefficients summing to 1
            for (auto& c : qc) c = cplx(std::abs(c), 0.0);
            for (const auto& c : qc) sum += c.real();
            for (auto& c : qc) c /= (sum + 1e-300);
        } else {
            for (const auto& c : qc) sum += std::abs(c);
            for (auto& c : qc) c *= target / (sum + 1e-300);
        }
        AnalyticFunction phi{std::move(qc)};
        out.emplace_back(std::move(psi), std::move(phi));
    }
    return out;
}

std::vector<AnalyticFunction> SymbolFamily::functions(int n, int max_degree) const {
    std::vector<AnalyticFunction> out;
    const std::vector<AnalyticFunction> fixed{
        AnalyticFunction::identity(), AnalyticFunction::monomial(4),
        AnalyticFunction({cplx(1.0), cplx(1.0)}), AnalyticFunction::constant(cplx(2.0, 0.0))};
    for (const auto& f : fixed) {
        if (static_cast<int>(out.size()) >= n) return out;
        out.push_back(f);
    }
    Rng rng(seed ^ 0x666e73ULL);
    while (static_cast<int>(out.size()) < n) {
        const int d = rng.uniform_int(0, max_degree);
        std::vector<cplx> c(static_cast<std::size_t>(d) + 1);
        for (auto& x : c) x = rng.complex_box(coefficient_scale);
        out.emplace_back(std::move(c));
    }
    return out;
}

SymbolFamily SymbolFamily::single_pair(SymbolPair pair) {
    SymbolFamily fam;
    fam.name = "single";
    fam.count = 0;
    fam.include_deterministic = false;
    fam.fixed_pairs.push_back(std::move(pair));
    return fam;
}

const std::vector<Check>& check_catalog() {
    static const std::vector<Check> catalog = [] {
        std::vector<Check> c;
        c.push_back({"garsia_identity", "transform-norm quadrature methods agree",
                     "quadrature-method agreement (plumbing)", true, check_garsia});
        c.push_back({"pointwise_bound", "|f(z)| <= C L(z) ||f||", "Lemma 2.1", true,
                     check_pointwise_bound});
        c.push_back({"jn_equivalence", "p-seminorms are equivalent on the family", "Lemma 2.2",
                     true, check_jn});
        c.push_back({"littlewood_composition", "||g o phi||_2 <= C ||phi||_2 ||g||_2",
                     "Lemma 2.3 first part", true, check_littlewood});
        c.push_back({"schwarz_growth", "|g(z)| <= 2|z| max_{|w|<=t} |g(w)|",
                     "Lemma 2.3 second part", true, check_schwarz});
        c.push_back({"lemma24_i", "alpha(a) <= C (beta/L + ||W f_a||_*)", "Lemma 2.4(i)", true,
                     check_lemma24_i});
        c.push_back({"lemma24_ii", "beta(a) <= C (cross + ||W g_a||_* + alpha)", "Lemma 2.4(ii)",
                     true, check_lemma24_ii});
        c.push_back({"lemma24_iii", "||(W f)|a||_2 <= C (cross + (alpha+beta)||f||_*)",
                     "Lemma 2.4(iii)", true, check_lemma24_iii});
        c.push_back({"lemma24_iv", "cross <= C ||f||_* min{sup beta, ||W||/sqrt(L)}",
                     "Lemma 2.4(iv)", true, check_lemma24_iv});
        c.push_back({"lemma26_constant2", "sup_a ||W f_a||_* <= 2 sup_n ||psi phi^n||_*",
                     "Lemma 2.6", true, check_lemma26});
        c.push_back({"thm11_two_sided", "powers and classic norm estimates are comparable",
                     "Theorem 1.1 vs formula (1.1)", true, check_thm11});
        c.push_back({"thm12_consistency", "essential-norm estimators agree on VMOA-preserving pairs",
                     "Theorem 1.2 vs Corollary 1.4", true, check_thm12});
        c.push_back({"lower_bound_witness", "||W f||/||f|| <= C * powers estimate for witnesses",
                     "Section 4 lower bound", true, check_lower_bound});
        c.push_back({"sandwich_remark33", "s(r) sandwich for 1 - |sigma_b o phi o sigma_a|",
                     "Section 4, s(r) = 2(1+r)/(1-r)", true, check_sandwich});
        c.push_back({"eset_inclusions", "ETilde/E index-set inclusions at every grid point",
                     "Section 4 proof", false, check_eset});
        c.push_back({"lemma42_tail", "E-set tail quantity <= C limsup_n ||psi phi^n||_*",
                     "Lemma 4.2", true, check_lemma42});
        c.push_back({"sn_locally_uniform", "sup_{Q(r,t)} |S_n f| decreases with n",
                     "Section 4, dilation operators K_n", true, check_sn});
        return c;
    }();
    return catalog;
}

const Check* find_check(const std::string& id) {
    for (const auto& c : check_catalog())
        if (c.id == id) return &c;
    return nullptr;
}

std::vector<CheckReport> run_check(const std::string& id, const SymbolFamily& family,
                                   const VerifyConfig& cfg) {
    const Check* check = find_check(id);
    if (!check) throw std::invalid_argument("unknown check id: " + id);
    return check->evaluator(family, cfg);
}

double estimate_constant(const std::string& id, const SymbolFamily& family,
                         const VerifyConfig& cfg) {
    const Check* check = find_check(id);
    if (!check) throw std::invalid_argument("unknown check id: " + id);
    if (!check->inequality_type)
        throw std::invalid_argument("estimate_constant: check has no meaningful ratio: " + id);
    double worst = 0.0;
    for (const auto& r : check->evaluator(family, cfg)) worst = std::max(worst, r.ratio);
    return worst;
}

void sort_reports(std::vector<CheckReport>& reports) {
    std::stable_sort(reports.begin(), reports.end(), [](const CheckReport& x, const CheckReport& y) {
        if (x.check_id != y.check_id) return x.check_id < y.check_id;
        return x.inputs_digest < y.inputs_digest;
    });
}

std::string to_jsonl(const std::vector<CheckReport>& reports) {
    std::vector<CheckReport> sorted = reports;
    sort_reports(sorted);
    std::string out;
    for (const auto& r : sorted) {
        out += r.to_json().dump();
        out += '\n';
    }
    return out;
}

std::string summary_csv(const std::vector<CheckReport>& reports) {
    std::map<std::string, std::tuple<int, int, double>> by_id;  // n, passed, max_ratio
    for (const auto& r : reports) {
        auto& [n, passed, max_ratio] = by_id[r.check_id];
        ++n;
        if (r.pass) ++passed;
        max_ratio = std::max(max_ratio, r.ratio);
    }
    std::string out = "check_id,n,pass_rate,max_ratio\n";
    for (const auto& [id, agg] : by_id) {
        const auto& [n, passed, max_ratio] = agg;
        char buf[160];
        std::snprintf(buf, sizeof(buf), "%s,%d,%.6f,%.12g\n", id.c_str(), n,
                      static_cast<double>(passed) / static_cast<double>(n), max_ratio);
        out += buf;
    }
    return out;
}

}  // namespace bmoa
