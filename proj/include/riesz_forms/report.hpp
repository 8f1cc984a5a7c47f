// Machine-readable verification reports and the suite configuration.
#pragma once

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace riesz_forms {

inline constexpr const char* kVersion = "0.1.0";

struct SuiteConfig {
    std::string suite = "all";
    std::optional<int> n;          // restrict to one dimension
    std::optional<int> p;          // restrict to one degree
    int n_max = 6;
    int k_max = 3;
    std::string family = "all";    // riesz | scalar | knapp-stein | self-dual | custom | all
    std::string custom_a;          // ascending rational coefficients, comma separated
    std::string custom_b;
    int grid_n = 256;
    double extent = 8.0;
    double tolerance = 5e-2;
    double lambda = -1.0;          // numeric evaluation parameter
    std::string format = "text";   // text | json | csv
    std::string out;               // output path; empty writes to stdout
    std::string dump;              // optional CSV slice dump (numeric suite)

    nlohmann::json to_json() const;
};

struct CaseResult {
    nlohmann::json params;
    std::string status;  // pass | fail | inapplicable
    std::string detail;
};

struct Report {
    std::string suite;
    std::string version = kVersion;
    nlohmann::json config;
    std::vector<CaseResult> cases;

    int passed() const;
    int failed() const;
    int inapplicable() const;
    int exit_code() const { return failed() == 0 ? 0 : 1; }

    nlohmann::json to_json() const;
    static Report from_json(const nlohmann::json& j);
    std::string text() const;
};

}  // namespace riesz_forms
