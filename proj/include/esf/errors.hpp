#ifndef ESF_ERRORS_HPP
#define ESF_ERRORS_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace esf {

enum class ErrorKind {
    syntax,              // malformed polynomial text, position annotated
    not_at_origin,       // local equation with non-zero constant term
    not_isolated,        // Milnor number infinite
    unknown_type,        // catalog name not recognised
    parity,              // mu + r - 1 odd
    missing_override,    // r or tau_es needed but not derivable
    invariant_violation, // a singularity-type relation fails
    inexact_degree,      // deg X only known as an upper bound
    missing_invariant,   // deg X* absent where required
    arity_mismatch,      // divisor coordinates do not fit the surface model
    not_rank_one,        // chi requested on a model without one
    beta_range,          // beta outside (0, 1/4]
    domain,              // parameters outside a gamma table / model domain
    config,              // invalid run configuration
    internal,
};

const char* error_kind_name(ErrorKind k);

/// Single exception type for the whole library; `kind()` makes the
/// failure machine-readable (the CLI maps it into its error object).
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string message)
        : std::runtime_error(std::move(message)), kind_(kind) {}

    Error(ErrorKind kind, std::string message, std::size_t position)
        : std::runtime_error(std::move(message)), kind_(kind), position_(position) {}

    ErrorKind kind() const noexcept { return kind_; }

    /// Byte offset into the input text, for syntax errors.
    std::optional<std::size_t> position() const noexcept { return position_; }

private:
    ErrorKind kind_;
    std::optional<std::size_t> position_;
};

} // namespace esf

#endif
