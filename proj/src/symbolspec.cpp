#include "bmoa/symbolspec.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace bmoa {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    out.push_back(cur);
    return out;
}

bool looks_numeric(const std::string& s) {
    if (s.empty()) return false;
    return s.find_first_not_of("+-0123456789.eEi") == std::string::npos;
}

}  // namespace

cplx parse_complex(const std::string& text) {
    std::string s = text;
    s.erase(std::remove_if(s.begin(), s.end(), [](char c) { return c == ' '; }), s.end());
    if (s.empty()) throw std::invalid_argument("empty complex literal");

    // forms: "a", "bi", "a+bi", "a-bi"
    if (s.back() == 'i') {
        // find the split between real and imaginary parts (sign not in exponent)
        std::size_t split_pos = std::string::npos;
        for (std::size_t k = s.size() - 1; k > 0; --k) {
            if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
                split_pos = k;
                break;
            }
        }
        std::string re = "0", im;
        if (split_pos == std::string::npos) {
            im = s.substr(0, s.size() - 1);
        } else {
            re = s.substr(0, split_pos);
            im = s.substr(split_pos, s.size() - split_pos - 1);
        }
        if (im.empty() || im == "+") im = "1";
        if (im == "-") im = "-1";
        try {
            return cplx(std::stod(re), std::stod(im));
        } catch (const std::exception&) {
            throw std::invalid_argument("bad complex literal: " + text);
        }
    }
    try {
        std::size_t used = 0;
        const double v = std::stod(s, &used);
        if (used != s.size()) throw std::invalid_argument("");
        return cplx(v, 0.0);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad complex literal: " + text);
    }
}

SymbolSpec SymbolSpec::parse(const std::string& text) {
    SymbolSpec spec;
    const std::size_t colon = text.find(':');
    std::string kind = (colon == std::string::npos) ? text : text.substr(0, colon);
    const std::string params = (colon == std::string::npos) ? "" : text.substr(colon + 1);

    if (colon == std::string::npos && looks_numeric(kind)) {
        spec.kind = Kind::Constant;
        spec.params = {parse_complex(kind)};
        return spec;
    }

    auto parse_params = [&](std::size_t min_n, std::size_t max_n) {
        if (params.empty()) {
            if (min_n > 0) throw std::invalid_argument("symbol spec '" + text + "' needs parameters");
            return;
        }
        for (const auto& piece : split(params, ',')) spec.params.push_back(parse_complex(piece));
        if (spec.params.size() < min_n || spec.params.size() > max_n)
            throw std::invalid_argument("symbol spec '" + text + "': wrong parameter count");
    };

    if (kind == "poly") {
        spec.kind = Kind::Poly;
        parse_params(1, 4096);
    } else if (kind == "identity") {
        spec.kind = Kind::Identity;
        parse_params(0, 0);
    } else if (kind == "constant") {
        spec.kind = Kind::Constant;
        parse_params(1, 1);
    } else if (kind == "scaled_identity") {
        spec.kind = Kind::ScaledIdentity;
        parse_params(1, 1);
    } else if (kind == "blaschke") {
        spec.kind = Kind::Blaschke;
        parse_params(1, 1);
    } else {
        throw std::invalid_argument("unknown symbol kind: " + kind);
    }
    return spec;
}

AnalyticFunction SymbolSpec::materialize(int truncation_degree, double* truncation_error) const {
    if (truncation_error) *truncation_error = 0.0;
    switch (kind) {
        case Kind::Poly:
            return AnalyticFunction(params);
        case Kind::Identity:
            return AnalyticFunction::identity();
        case Kind::Constant:
            return AnalyticFunction::constant(params[0]);
        case Kind::ScaledIdentity:
            return AnalyticFunction({cplx(0.0, 0.0), params[0]});
        case Kind::Blaschke: {
            const cplx b = params[0];
            const double bm = std::abs(b);
            if (bm >= 1.0 - 1e-12)
                throw std::invalid_argument("blaschke: |b| must be < 1");
            const int N = std::max(1, truncation_degree);
            // sigma_b(z) = b - (1-|b|^2) sum_{k>=1} conj(b)^{k-1} z^k
            std::vector<cplx> c(static_cast<std::size_t>(N) + 1);
            c[0] = b;
            const double head = 1.0 - bm * bm;
            cplx bk(1.0, 0.0);
            for (int k = 1; k <= N; ++k) {
                c[static_cast<std::size_t>(k)] = -head * bk;
                bk *= std::conj(b);
            }
            const double err = (1.0 + bm) * std::pow(bm, N);
            if (truncation_error) *truncation_error = err;
            // rescale so the truncation is still a certified self-map
            AnalyticFunction f{std::move(c)};
            return f.scaled(cplx(1.0 / (1.0 + err), 0.0));
        }
    }
    throw std::logic_error("unreachable");
}

std::string SymbolSpec::describe() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::Poly: os << "poly"; break;
        case Kind::Identity: os << "identity"; break;
        case Kind::Constant: os << "constant"; break;
        case Kind::ScaledIdentity: os << "scaled_identity"; break;
        case Kind::Blaschke: os << "blaschke"; break;
    }
    if (!params.empty()) {
        os << ":";
        for (std::size_t i = 0; i < params.size(); ++i) {
            if (i) os << ",";
            os << params[i].real();
            if (params[i].imag() != 0.0) os << (params[i].imag() > 0 ? "+" : "") << params[i].imag() << "i";
        }
    }
    return os.str();
}

void RunConfig::validate() const {
    if (grid_size < 2 || !is_power_of_two(static_cast<std::size_t>(grid_size)))
        throw std::invalid_argument("RunConfig: grid_size must be a power of two");
    if (truncation < 1 || n_max < 0) throw std::invalid_argument("RunConfig: counts must be positive");
    sup.validate();
    for (double rho : rho_list)
        if (rho <= 0.0 || rho >= 1.0) throw std::invalid_argument("RunConfig: rho must lie in (0,1)");
}

RunConfig RunConfig::from_json(const nlohmann::json& j) {
    RunConfig cfg;
    cfg.grid_size = j.value("grid_size", cfg.grid_size);
    cfg.truncation = j.value("truncation", cfg.truncation);
    cfg.n_max = j.value("n_max", cfg.n_max);
    cfg.seed = j.value("seed", cfg.seed);
    cfg.output_format = j.value("output_format", cfg.output_format);
    if (j.contains("rho_list")) cfg.rho_list = j["rho_list"].get<std::vector<double>>();
    if (j.contains("sup_search")) {
        const auto& s = j["sup_search"];
        if (s.contains("radii")) cfg.sup.radii = s["radii"].get<std::vector<double>>();
        cfg.sup.angles_per_radius = s.value("angles_per_radius", cfg.sup.angles_per_radius);
        cfg.sup.refine_rounds = s.value("refine_rounds", cfg.sup.refine_rounds);
        cfg.sup.refine_factor = s.value("refine_factor", cfg.sup.refine_factor);
        cfg.sup.radius_cap = s.value("radius_cap", cfg.sup.radius_cap);
    }
    cfg.validate();
    return cfg;
}

nlohmann::json RunConfig::to_json() const {
    return {{"grid_size", grid_size},
            {"truncation", truncation},
            {"n_max", n_max},
            {"seed", seed},
            {"output_format", output_format},
            {"rho_list", rho_list},
            {"sup_search",
             {{"radii", sup.radii},
              {"angles_per_radius", sup.angles_per_radius},
              {"refine_rounds", sup.refine_rounds},
              {"refine_factor", sup.refine_factor},
              {"radius_cap", sup.radius_cap}}}};
}

}  // namespace bmoa
