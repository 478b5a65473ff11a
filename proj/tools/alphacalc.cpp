#include <CLI11.hpp>

#include <iostream>

#include "alphacalc/runner.hpp"

using namespace alphacalc;

int main(int argc, char** argv) {
    CLI::App app{"alphacalc: exact quantized alpha-invariants of polarized blow-up surfaces"};
    app.require_subcommand(1);

    RunConfig config;
    std::string k_text = "1";
    std::string format = "text";
    std::string output;

    auto add_common = [&](CLI::App* cmd, bool needs_divisor) {
        cmd->add_option("--spec", config.spec_path, "surface description file")
            ->required();
        cmd->add_option("--format", format, "output format: text, json or csv")
            ->check(CLI::IsMember({"text", "json", "csv"}));
        cmd->add_option("--output,-o", output, "write the report to a file");
        if (needs_divisor)
            cmd->add_option("--divisor", config.divisor_label,
                            "named divisor to use (default L)");
    };

    CLI::App* build = app.add_subcommand(
        "build", "construct the surface and print its lattice data");
    add_common(build, false);

    CLI::App* ample = app.add_subcommand(
        "ample", "Nakai-Moishezon positivity check against the named curves");
    add_common(ample, true);

    CLI::App* alpha = app.add_subcommand(
        "alpha", "compute alpha_k over a range of k by exact integer programming");
    add_common(alpha, true);
    alpha->add_option("--k", k_text, "k or lo..hi (inclusive), lo >= 1");
    alpha->add_flag("--expect-closed-form", config.expect_closed_form,
                    "compare against the closed form of the bundled surface "
                    "(1/8 for even k, k/(8k-1) for odd k)");

    CLI::App* oracle = app.add_subcommand(
        "oracle", "cross-check alpha_k against exhaustive enumeration (small k)");
    add_common(oracle, true);
    oracle->add_option("--k", k_text, "k or lo..hi (inclusive), lo >= 1");

    CLI::App* verify = app.add_subcommand(
        "verify", "check a certificate divisor: class equality with kL and its lct");
    add_common(verify, true);
    verify->add_option("--k", k_text, "the level k the certificate refers to");
    verify->add_option("--certificate", config.certificate_path,
                       "JSON file mapping curve labels to \"p/q\" coefficients")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (build->parsed()) config.command = Command::Build;
    if (ample->parsed()) config.command = Command::Ample;
    if (alpha->parsed()) config.command = Command::Alpha;
    if (oracle->parsed()) config.command = Command::Oracle;
    if (verify->parsed()) config.command = Command::Verify;

    if (format == "json") config.output_format = OutputFormat::Json;
    else if (format == "csv") config.output_format = OutputFormat::Csv;
    else config.output_format = OutputFormat::Text;
    if (!output.empty()) config.output_path = output;

    try {
        config.k_range = parse_k_range(k_text);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    return run(config, std::cout, std::cerr);
}
