#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "bmoa/wco.hpp"

namespace bmoa {

/// Outcome of one inequality/identity check on one family instance.
struct CheckReport {
    std::string check_id;
    double lhs = 0.0;
    double rhs = 0.0;
    double ratio = 1.0;  // lhs/rhs with 0/0 -> 1
    bool pass = false;
    std::string inputs_digest;
    std::string notes;

    nlohmann::json to_json() const;
};

double safe_ratio(double lhs, double rhs);

/// Seeded producer of symbol pairs and test functions. Generation is
/// deterministic in (seed, count, degree_bound, coefficient_scale).
struct SymbolFamily {
    std::string name = "default";
    std::uint64_t seed = 7;
    int count = 200;
    int degree_bound = 8;
    double coefficient_scale = 1.0;
    bool include_deterministic = true;

    /// When set, generation is bypassed and these pairs are used as-is.
    std::vector<SymbolPair> fixed_pairs;

    std::vector<SymbolPair> pairs() const;
    std::vector<AnalyticFunction> functions(int n, int max_degree) const;

    static SymbolFamily single_pair(SymbolPair pair);
};

/// Search config for family sweeps: lighter than the norms-module default so
/// the 200-pair batteries stay fast. The pinned constants are measured with
/// it, so checks and sweeps must keep using the same config.
SupSearchConfig family_sweep_config();

struct VerifyConfig {
    SupSearchConfig sup = family_sweep_config();
    int n_max = 64;
    std::vector<double> rho_list{0.9, 0.95, 0.99};
};

struct Check {
    std::string id;
    std::string description;
    std::string paper_location;
    bool inequality_type = true;  // estimate_constant is meaningful
    std::function<std::vector<CheckReport>(const SymbolFamily&, const VerifyConfig&)> evaluator;
};

const std::vector<Check>& check_catalog();
const Check* find_check(const std::string& id);

/// One report per family instance; deterministic given the family seed.
/// Throws std::invalid_argument for unknown ids.
std::vector<CheckReport> run_check(const std::string& id, const SymbolFamily& family,
                                   const VerifyConfig& cfg);

/// Smallest C making the inequality hold family-wide (max lhs/rhs).
/// Rejected for checks without a meaningful ratio.
double estimate_constant(const std::string& id, const SymbolFamily& family,
                         const VerifyConfig& cfg);

/// Order-independent aggregation: reports sorted by inputs_digest.
void sort_reports(std::vector<CheckReport>& reports);

std::string to_jsonl(const std::vector<CheckReport>& reports);

/// check_id,n,pass_rate,max_ratio rows (one per check id, sorted).
std::string summary_csv(const std::vector<CheckReport>& reports);

}  // namespace bmoa
