#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "bmoa/analytic.hpp"
#include "bmoa/norms.hpp"

namespace bmoa {

/// Textual symbol description: "kind:params" with kinds poly, identity,
/// constant, scaled_identity, blaschke. A bare number parses as a constant.
/// Complex params use the literal forms "1.5", "2i", "0.3+0.25i".
struct SymbolSpec {
    enum class Kind { Poly, Identity, Constant, ScaledIdentity, Blaschke };

    Kind kind = Kind::Identity;
    std::vector<cplx> params;

    static SymbolSpec parse(const std::string& text);

    /// Materialize as a polynomial. blaschke(b) = sigma_b is truncated at
    /// truncation_degree and rescaled into a certified self-map; the
    /// truncation error bound (1+|b|)|b|^N is written to *truncation_error.
    AnalyticFunction materialize(int truncation_degree, double* truncation_error = nullptr) const;

    std::string describe() const;
};

cplx parse_complex(const std::string& text);

/// Run-wide configuration mirrored by the JSON config file.
struct RunConfig {
    int grid_size = 1024;
    int truncation = 128;
    SupSearchConfig sup;
    int n_max = 64;
    std::vector<double> rho_list{0.9, 0.95, 0.99};
    std::uint64_t seed = 7;
    std::string output_format = "json";

    void validate() const;
    static RunConfig from_json(const nlohmann::json& j);
    nlohmann::json to_json() const;
};

}  // namespace bmoa
