// bmoa: norms, weighted-composition-operator estimates, and lemma checks
// for analytic symbols on the unit disc.

#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "bmoa/jsonutil.hpp"
#include "bmoa/symbolspec.hpp"
#include "bmoa/verify.hpp"
#include "bmoa/wco.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct NormArgs {
    std::string poly, constant, scaled_identity, blaschke, spec;
    bool identity = false;
    std::vector<double> ps{2.0};
};

struct CommonArgs {
    std::string config_path;
    std::string json_out;
    std::string curves_prefix;
};

bmoa::RunConfig load_config(const std::string& path) {
    if (path.empty()) return bmoa::RunConfig{};
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file: " + path);
    json j;
    in >> j;
    return bmoa::RunConfig::from_json(j);
}

bmoa::SymbolSpec spec_from_norm_args(const NormArgs& a) {
    int given = 0;
    for (bool b : {!a.poly.empty(), !a.constant.empty(), !a.scaled_identity.empty(),
                   !a.blaschke.empty(), !a.spec.empty(), a.identity})
        given += b ? 1 : 0;
    if (given != 1)
        throw std::invalid_argument("give exactly one of --poly/--constant/--identity/"
                                    "--scaled-identity/--blaschke/--spec");
    if (a.identity) return bmoa::SymbolSpec::parse("identity");
    if (!a.poly.empty()) return bmoa::SymbolSpec::parse("poly:" + a.poly);
    if (!a.constant.empty()) return bmoa::SymbolSpec::parse("constant:" + a.constant);
    if (!a.scaled_identity.empty())
        return bmoa::SymbolSpec::parse("scaled_identity:" + a.scaled_identity);
    if (!a.blaschke.empty()) return bmoa::SymbolSpec::parse("blaschke:" + a.blaschke);
    return bmoa::SymbolSpec::parse(a.spec);
}

void write_text(const std::string& path, const std::string& text) {
    const fs::path p(path);
    if (p.has_parent_path()) fs::create_directories(p.parent_path());
    std::ofstream out(p, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

void emit_output(const json& report, const CommonArgs& common) {
    const std::string text = report.dump(2) + "\n";
    std::cout << text;
    if (!common.json_out.empty()) write_text(common.json_out, text);
}

int run_norm(const NormArgs& args, const CommonArgs& common) {
    const bmoa::RunConfig cfg = load_config(common.config_path);
    const bmoa::SymbolSpec spec = spec_from_norm_args(args);
    double trunc_err = 0.0;
    const bmoa::AnalyticFunction f = spec.materialize(cfg.truncation, &trunc_err);

    json hardy = json::object();
    const int M = std::max<int>(
        cfg.grid_size,
        static_cast<int>(bmoa::next_power_of_two(2 * static_cast<std::size_t>(f.degree() + 1))));
    const bmoa::BoundaryGrid grid = bmoa::boundary_grid(f, M);
    for (double p : args.ps) {
        char key[32];
        std::snprintf(key, sizeof(key), "%g", p);
        hardy[key] = bmoa::round_sig(bmoa::hardy_norm(grid, p));
    }

    const bmoa::SupResult sem = bmoa::bmoa_seminorm(f, 2.0, cfg.sup);
    const double norm = std::abs(f.at(bmoa::cplx(0.0, 0.0))) + sem.value;
    const std::vector<double> radii{0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.95, 0.99};
    const auto profile = bmoa::vmoa_profile(f, radii, cfg.sup.angles_per_radius);

    json prof = json::array();
    for (const auto& [r, v] : profile)
        prof.push_back({bmoa::round_sig(r), bmoa::round_sig(v)});

    json report{{"command", "norm"},
                {"symbol", spec.describe()},
                {"truncation_degree", f.degree()},
                {"hardy_norms", hardy},
                {"seminorm", bmoa::round_sig(sem.value)},
                {"seminorm_argmax", bmoa::json_complex(sem.argmax)},
                {"norm", bmoa::round_sig(norm)},
                {"vmoa_profile", prof}};
    if (trunc_err > 0.0) report["truncation_error"] = bmoa::round_sig(trunc_err);

    if (!common.curves_prefix.empty()) {
        std::string csv = "r,transform_sup\n";
        for (const auto& [r, v] : profile) {
            char line[64];
            std::snprintf(line, sizeof(line), "%.12g,%.12g\n", r, v);
            csv += line;
        }
        write_text(common.curves_prefix + "_vmoa.csv", csv);
    }
    emit_output(report, common);
    return 0;
}

int run_wco(const std::string& psi_text, const std::string& phi_text, const std::string& which,
            const CommonArgs& common) {
    const bmoa::RunConfig cfg = load_config(common.config_path);
    const bmoa::SymbolSpec psi_spec = bmoa::SymbolSpec::parse(psi_text);
    const bmoa::SymbolSpec phi_spec = bmoa::SymbolSpec::parse(phi_text);
    double psi_err = 0.0, phi_err = 0.0;
    const bmoa::SymbolPair pair(psi_spec.materialize(cfg.truncation, &psi_err),
                                phi_spec.materialize(cfg.truncation, &phi_err));

    json report{{"command", "wco"},
                {"which", which},
                {"psi", psi_spec.describe()},
                {"phi", phi_spec.describe()},
                {"phi_sup_estimate", bmoa::round_sig(pair.phi_sup_estimate)}};
    if (psi_err > 0.0) report["psi_truncation_error"] = bmoa::round_sig(psi_err);
    if (phi_err > 0.0) report["phi_truncation_error"] = bmoa::round_sig(phi_err);

    if (which == "norm") {
        report["powers_estimate"] = bmoa::norm_estimate_powers(pair, cfg.sup, cfg.n_max).to_json();
        report["classic_estimate"] = bmoa::norm_estimate_classic(pair, cfg.sup).to_json();
    } else if (which == "essnorm") {
        report["powers_estimate"] =
            bmoa::essnorm_estimate_powers(pair, cfg.sup, cfg.rho_list, cfg.n_max).to_json();
        report["boundary_estimate"] =
            bmoa::essnorm_estimate_boundary(pair, cfg.sup, cfg.rho_list).to_json();
    } else {  // classify
        const bmoa::ClassifyResult res = bmoa::classify_compactness(pair, cfg.sup, {}, cfg.n_max);
        report["classification"] = res.to_json();
        std::cout << "verdict: " << bmoa::to_string(res.verdict) << "\n";
    }

    if (!common.curves_prefix.empty()) {
        const auto seq = bmoa::power_seminorm_seq(pair, cfg.n_max, cfg.sup);
        std::string csv = "n,power_seminorm\n";
        for (std::size_t n = 0; n < seq.size(); ++n) {
            char line[64];
            std::snprintf(line, sizeof(line), "%zu,%.12g\n", n, seq[n]);
            csv += line;
        }
        write_text(common.curves_prefix + "_powers.csv", csv);
    }
    emit_output(report, common);
    return 0;
}

int run_check(const std::string& id, int count, std::uint64_t seed, const std::string& pair_text,
              const std::string& outdir, const CommonArgs& common) {
    const bmoa::RunConfig run_cfg = load_config(common.config_path);
    bmoa::VerifyConfig cfg;
    cfg.n_max = run_cfg.n_max;
    cfg.rho_list = run_cfg.rho_list;

    bmoa::SymbolFamily family;
    family.seed = seed;
    family.count = count;
    if (!pair_text.empty()) {
        const std::size_t comma = pair_text.find(',');
        if (comma == std::string::npos)
            throw std::invalid_argument("--pair expects 'psiSpec,phiSpec'");
        const auto psi = bmoa::SymbolSpec::parse(pair_text.substr(0, comma));
        const auto phi = bmoa::SymbolSpec::parse(pair_text.substr(comma + 1));
        family = bmoa::SymbolFamily::single_pair(
            bmoa::SymbolPair(psi.materialize(run_cfg.truncation),
                             phi.materialize(run_cfg.truncation)));
    }

    std::vector<std::string> ids;
    if (id == "all") {
        for (const auto& c : bmoa::check_catalog()) ids.push_back(c.id);
    } else {
        if (!bmoa::find_check(id)) throw std::invalid_argument("unknown check id: " + id);
        ids.push_back(id);
    }

    std::vector<bmoa::CheckReport> reports;
    for (const auto& cid : ids) {
        auto batch = bmoa::run_check(cid, family, cfg);
        reports.insert(reports.end(), batch.begin(), batch.end());
    }
    bmoa::sort_reports(reports);

    const std::string jsonl = bmoa::to_jsonl(reports);
    const std::string csv = bmoa::summary_csv(reports);
    const fs::path dir(outdir);
    fs::create_directories(dir);
    write_text((dir / "checks.jsonl").string(), jsonl);
    write_text((dir / "checks_summary.csv").string(), csv);
    std::cout << csv;
    if (!common.json_out.empty()) write_text(common.json_out, jsonl);

    for (const auto& r : reports)
        if (!r.pass) return 1;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"numerical toolkit for BMOA norms and weighted composition operators"};
    app.require_subcommand(1);

    CommonArgs common;
    NormArgs norm_args;

    auto* norm = app.add_subcommand("norm", "Hardy/BMOA norms and the VMOA profile of a symbol");
    norm->add_option("--poly", norm_args.poly, "comma-separated Taylor coefficients");
    norm->add_option("--constant", norm_args.constant, "constant symbol");
    norm->add_flag("--identity", norm_args.identity, "the identity map z");
    norm->add_option("--scaled-identity", norm_args.scaled_identity, "s for z -> s z");
    norm->add_option("--blaschke", norm_args.blaschke, "b for sigma_b (Taylor-truncated)");
    norm->add_option("--spec", norm_args.spec, "kind:params symbol spec");
    norm->add_option("--p", norm_args.ps, "Hardy exponents to report");

    std::string psi_text, phi_text, which = "norm";
    auto* wco = app.add_subcommand("wco", "norm/essential-norm estimates and compactness");
    wco->add_option("--psi", psi_text, "weight symbol spec")->required();
    wco->add_option("--phi", phi_text, "self-map symbol spec")->required();
    wco->add_option("which", which, "norm | essnorm | classify")
        ->check(CLI::IsMember({"norm", "essnorm", "classify"}));

    std::string check_id = "all", pair_text, outdir;
    int count = 200;
    std::uint64_t seed = 7;
    if (const char* env = std::getenv("BMOA_OUT_DIR")) outdir = env;
    if (outdir.empty()) outdir = ".";
    auto* check = app.add_subcommand("check", "run lemma/theorem checks over a symbol family");
    check->add_option("id", check_id, "check id or 'all'");
    check->add_option("--count", count, "number of random pairs/functions");
    check->add_option("--seed", seed, "family seed");
    check->add_option("--pair", pair_text, "restrict to one pair: 'psiSpec,phiSpec'");
    check->add_option("--outdir", outdir, "directory for checks.jsonl / checks_summary.csv");

    for (auto* sub : {norm, wco, check}) {
        sub->add_option("--config", common.config_path, "JSON run configuration");
        sub->add_option("--json", common.json_out, "write the JSON report here");
        sub->add_option("--emit-curves", common.curves_prefix, "CSV curve output path prefix");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (norm->parsed()) return run_norm(norm_args, common);
        if (wco->parsed()) return run_wco(psi_text, phi_text, which, common);
        return run_check(check_id, count, seed, pair_text, outdir, common);
    } catch (const bmoa::SelfMapViolation& e) {
        std::cerr << "error: " << e.what() << " (max |phi| = " << e.modulus() << " at "
                  << e.boundary_point().real() << (e.boundary_point().imag() < 0 ? "-" : "+")
                  << std::abs(e.boundary_point().imag()) << "i)\n";
        return 4;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "numeric error: " << e.what() << "\n";
        return 3;
    }
}
