#ifndef ESF_CLI_HPP
#define ESF_CLI_HPP

#include <iosfwd>
#include <optional>
#include <string>

#include "json.hpp"

#include "esf/criteria.hpp"

namespace esf::cli {

enum class Format { text, json };

struct RunConfig {
    SurfaceModel model = SurfaceModel::p2();
    DivisorClass divisor = DivisorClass::rank_one(1);
    std::vector<SingularitySpec> specs;
    EvalOptions options;
    Format format = Format::text;
};

/// Command-line flags that override fields of the configuration document.
struct FlagOverrides {
    std::optional<Format> format;
    std::optional<ChiMode> chi_mode;
    std::optional<BoundMode> bound_mode;
    std::optional<BetaSpec> beta;
};

/// Parses and validates a configuration document (see docs/runconfig.schema.json).
RunConfig parse_run_config(const nlohmann::json& doc);

/// Loads extension entries from a catalog data file (docs/catalog.schema.json).
void load_catalog_file(Catalog& catalog, const nlohmann::json& doc);

SingularityType singularity_type_from_json(const nlohmann::json& j);
nlohmann::ordered_json singularity_type_to_json(const SingularityType& t);

nlohmann::ordered_json report_to_json(const CriterionReport& report);
std::string report_to_text(const CriterionReport& report);
nlohmann::ordered_json error_to_json(const Error& e);

int exit_code(Verdict v);

/// check subcommand: reads the configuration from `in`, writes the report
/// to `out`, returns the process exit status (0/1/2, or 3 on errors).
int cmd_check(std::istream& in, const FlagOverrides& flags, const Catalog& catalog,
              std::ostream& out);

/// Recomputes the closed-form criterion constants and cross-checks them;
/// returns 0 when everything matches.
int cmd_verify_tables(std::ostream& out);

/// Prints the catalog (overlay entries plus built-in representatives);
/// a non-empty filter keeps entries whose name contains it.
int cmd_catalog(const Catalog& catalog, Format format, std::ostream& out,
                const std::string& filter = "");

} // namespace esf::cli

#endif
