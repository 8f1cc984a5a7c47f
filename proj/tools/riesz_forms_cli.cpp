// Command-line front end: verification suites, residue/operator tables and
// the numeric cross-check harness.
//
// Exit codes: 0 all cases pass, 1 some case failed, 2 usage/config error.
#include <riesz_forms/suites.hpp>

#include <CLI11.hpp>
#include <omp.h>

#include <cstdlib>
#include <fstream>
#include <iostream>

namespace {

void apply_thread_cap() {
    const char* env = std::getenv("RIESZ_FORMS_THREADS");
    if (!env) return;
    int t = std::atoi(env);
    if (t > 0) omp_set_num_threads(t);
}

void write_output(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open output file " + path);
    os << text;
}

int emit_report(const riesz_forms::Report& rep, const riesz_forms::SuiteConfig& cfg) {
    if (cfg.format == "json")
        write_output(rep.to_json().dump(2) + "\n", cfg.out);
    else
        write_output(rep.text(), cfg.out);
    return rep.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
    apply_thread_cap();

    CLI::App app{"riesz-forms: operator-calculus toolkit for Riesz distributions on differential forms"};
    app.require_subcommand(1);

    riesz_forms::SuiteConfig cfg;
    int table_n = 4, table_p = 0, table_k_max = 3;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--family", cfg.family, "riesz | scalar | knapp-stein | self-dual | custom | all");
        cmd->add_option("--A", cfg.custom_a, "custom family: ascending rational coefficients of A(l)");
        cmd->add_option("--B", cfg.custom_b, "custom family: ascending rational coefficients of B(l)");
        cmd->add_option("--format", cfg.format, "text | json | csv")->check(CLI::IsMember({"text", "json", "csv"}));
        cmd->add_option("--out", cfg.out, "write the report to a file instead of stdout");
    };

    CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("--suite", cfg.suite,
                       "identities | bernstein-sato | residues | convolution | recurrence | "
                       "intertwining | positivity | numeric | all")
        ->required();
    verify->add_option("--n", cfg.n, "restrict to one ambient dimension");
    verify->add_option("--p", cfg.p, "restrict to one form degree");
    verify->add_option("--n-max", cfg.n_max, "largest dimension in the default ranges");
    verify->add_option("--k-max", cfg.k_max, "largest operator order / residue index");
    verify->add_option("--grid-n", cfg.grid_n, "largest grid size for the numeric suite");
    verify->add_option("--extent", cfg.extent, "half-width of the sampling cube");
    verify->add_option("--tolerance", cfg.tolerance, "numeric comparison tolerance");
    verify->add_option("--lambda", cfg.lambda, "numeric spectral parameter");
    add_common(verify);

    CLI::App* table = app.add_subcommand("table", "residue/operator table for a parameter family");
    table->add_option("--n", table_n, "ambient dimension")->required();
    table->add_option("--p", table_p, "form degree")->required();
    table->add_option("--k-max", table_k_max, "largest residue index");
    add_common(table);

    CLI::App* numeric = app.add_subcommand("numeric", "FFT multiplier vs direct quadrature cross-check");
    numeric->add_option("--p", cfg.p, "restrict to one form degree");
    numeric->add_option("--grid-n", cfg.grid_n, "largest grid size");
    numeric->add_option("--extent", cfg.extent, "half-width of the sampling cube");
    numeric->add_option("--tolerance", cfg.tolerance, "comparison tolerance");
    numeric->add_option("--lambda", cfg.lambda, "spectral parameter of the kernel");
    numeric->add_option("--dump", cfg.dump, "CSV slice dump of the last computed field");
    add_common(numeric);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return 0;  // --help
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        if (verify->parsed()) return emit_report(riesz_forms::run_suite(cfg), cfg);
        if (numeric->parsed()) {
            cfg.suite = "numeric";
            return emit_report(riesz_forms::run_suite(cfg), cfg);
        }
        if (table->parsed()) {
            if (cfg.family == "all") cfg.family = "knapp-stein";
            nlohmann::json rows =
                riesz_forms::residue_table(table_n, table_p, table_k_max, cfg.family, cfg.custom_a, cfg.custom_b);
            write_output(riesz_forms::format_residue_table(rows, cfg.format), cfg.out);
            return 0;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
