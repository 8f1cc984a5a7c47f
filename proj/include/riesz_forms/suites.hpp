// Named verification suites behind the command-line front end.
#pragma once

#include <riesz_forms/conformal.hpp>
#include <riesz_forms/harness.hpp>
#include <riesz_forms/report.hpp>
#include <riesz_forms/riesz_family.hpp>
#include <riesz_forms/semigroup.hpp>

namespace riesz_forms {

// riesz | scalar | knapp-stein | self-dual | custom (with coefficient lists)
RieszParams make_family(const std::string& name, int n, int p, const std::string& custom_a = "",
                        const std::string& custom_b = "");

// executes one of: identities | bernstein-sato | residues | convolution |
// recurrence | intertwining | positivity | numeric | all;
// throws std::invalid_argument for an unknown suite name
Report run_suite(const SuiteConfig& cfg);

// residue table rows for the CLI `table` subcommand
nlohmann::json residue_table(int n, int p, int k_max, const std::string& family,
                             const std::string& custom_a = "", const std::string& custom_b = "");
std::string format_residue_table(const nlohmann::json& rows, const std::string& format);

}  // namespace riesz_forms
