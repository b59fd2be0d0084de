// Command-line front end: check / verify-tables / catalog.
#include <fstream>
#include <iostream>

#include "CLI11.hpp"

#include "esf/cli.hpp"

namespace {

using namespace esf;

cli::FlagOverrides make_overrides(const std::string& format, const std::string& chi_mode,
                                  const std::string& bound_mode, const std::string& beta) {
    cli::FlagOverrides flags;
    if (!format.empty()) {
        if (format == "text") flags.format = cli::Format::text;
        else if (format == "json") flags.format = cli::Format::json;
        else throw Error(ErrorKind::config, "--format must be text or json");
    }
    if (!chi_mode.empty()) {
        if (chi_mode == "standard") flags.chi_mode = ChiMode::standard;
        else if (chi_mode == "paper-compat") flags.chi_mode = ChiMode::paper_compat;
        else throw Error(ErrorKind::config, "--chi-mode must be standard or paper-compat");
    }
    if (!bound_mode.empty()) {
        if (bound_mode == "degx") flags.bound_mode = BoundMode::deg_x;
        else if (bound_mode == "tau2") flags.bound_mode = BoundMode::tau_sq;
        else if (bound_mode == "mu2") flags.bound_mode = BoundMode::mu_sq;
        else throw Error(ErrorKind::config, "--bound-mode must be degx, tau2 or mu2");
    }
    if (!beta.empty()) {
        flags.beta = beta == "auto" ? BetaSpec::automatic()
                                    : BetaSpec::fixed(Rat::from_string(beta));
    }
    return flags;
}

void load_catalog(Catalog& catalog, const std::string& path) {
    if (!path.empty()) {
        std::ifstream in(path);
        if (!in) throw Error(ErrorKind::config, "cannot open catalog file '" + path + "'");
        nlohmann::json doc;
        try {
            doc = nlohmann::json::parse(in);
        } catch (const nlohmann::json::exception& e) {
            throw Error(ErrorKind::config, std::string("invalid catalog JSON: ") + e.what());
        }
        cli::load_catalog_file(catalog, doc);
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Numerical irreducibility criteria for equisingular families of curves"};
    app.require_subcommand(1);

    std::string config_path, format, chi_mode, bound_mode, beta, catalog_path;

    CLI::App* check = app.add_subcommand(
        "check", "Evaluate the criterion for a JSON configuration ('-' reads standard input)");
    check->add_option("config", config_path, "configuration file")->required();
    check->add_option("--format", format, "text|json");
    check->add_option("--chi-mode", chi_mode, "standard|paper-compat");
    check->add_option("--bound-mode", bound_mode, "degx|tau2|mu2");
    check->add_option("--beta", beta, "auto|p/q");
    check->add_option("--catalog", catalog_path, "extension catalog file");

    CLI::App* verify = app.add_subcommand(
        "verify-tables", "Recompute and cross-check the closed-form criterion constants");

    std::string filter;
    CLI::App* catalog_cmd = app.add_subcommand("catalog", "Print the singularity catalog");
    catalog_cmd->add_option("filter", filter, "keep entries whose name contains this");
    catalog_cmd->add_option("--format", format, "text|json");
    catalog_cmd->add_option("--catalog", catalog_path, "extension catalog file");

    CLI11_PARSE(app, argc, argv);

    try {
        if (check->parsed()) {
            cli::FlagOverrides flags = make_overrides(format, chi_mode, bound_mode, beta);
            Catalog catalog;
            load_catalog(catalog, catalog_path);
            if (config_path == "-") return cli::cmd_check(std::cin, flags, catalog, std::cout);
            std::ifstream in(config_path);
            if (!in) throw Error(ErrorKind::config, "cannot open '" + config_path + "'");
            return cli::cmd_check(in, flags, catalog, std::cout);
        }
        if (verify->parsed()) return cli::cmd_verify_tables(std::cout);
        if (catalog_cmd->parsed()) {
            cli::FlagOverrides flags = make_overrides(format, "", "", "");
            Catalog catalog;
            load_catalog(catalog, catalog_path);
            return cli::cmd_catalog(catalog, flags.format.value_or(cli::Format::text), std::cout,
                                    filter);
        }
    } catch (const Error& e) {
        std::cerr << "error (" << error_kind_name(e.kind()) << "): " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 3;
}
