#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cli_app.hpp"

int main(int argc, char** argv) {
    using trigspline::cli::RunConfig;
    RunConfig config;
    std::vector<std::string> fixed_m;
    double alpha = 0.0;

    CLI::App app{"Trigonometric interpolation splines: construction, sampling, verification and classification sweeps"};
    app.add_option("command", config.command, "Command to run")
        ->required()
        ->check(CLI::IsMember(trigspline::cli::command_names()));
    app.add_option("input", config.input_path, "Data file: JSON {\"values\": [...]} or one-column CSV")->required();
    app.add_option("--sign", config.sign, "Sign-distribution element A1..D4")->capture_default_str();
    app.add_option("--r", config.r_values, "Smoothness parameter; repeat for several runs")->capture_default_str();
    app.add_option("--i1", config.i1, "Crosslink grid index (0 or 1)")->capture_default_str();
    app.add_option("--i2", config.i2, "Interpolation grid index (0 or 1)")->capture_default_str();
    auto* alpha_opt = app.add_option("--alpha", alpha, "Factor parameter alpha (default 2pi/N)");
    app.add_option("--tol", config.tol, "Truncation tolerance")->capture_default_str();
    app.add_option("--m-max", config.m_max, "Cap on explicit aliasing terms")->capture_default_str();
    auto* fixed_opt = app.add_option("--fixed-m", fixed_m,
                                     "Fixed-M truncation with M terms (default 10000); required when r = 0")
                          ->expected(0, 1);
    app.add_option("--samples", config.samples, "Sample count for sample/compare-analog")->capture_default_str();
    app.add_option("--format", config.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    app.add_option("--out", config.output_path, "Output file (default: standard output)");
    app.add_option("--t", config.t_values, "Evaluation point for build-eval; repeatable");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << trigspline::to_string(trigspline::ErrorCode::InvalidArgument) << ": " << e.what()
                  << '\n';
        return 1;
    }
    if (alpha_opt->count() > 0) config.alpha = alpha;
    if (fixed_opt->count() > 0)
    {
        config.fixed_m = trigspline::TruncationPolicy::kDefaultFixedTerms;
        if (!fixed_m.empty() && !fixed_m.front().empty()) {
            try {
                config.fixed_m = std::stol(fixed_m.front());
            } catch (const std::exception&) {
                std::cerr << "error: InvalidArgument: --fixed-m expects an integer\n";
                return 1;
            }
        }
    }

    return trigspline::cli::run(config, std::cout, std::cerr);
}
