#ifndef ZETAFORGE_ERRORS_HPP
#define ZETAFORGE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace zetaforge {

// Bad configuration (precision below floor, matrix size out of range, ...).
struct ConfigError : std::invalid_argument {
    explicit ConfigError(const std::string& m) : std::invalid_argument(m) {}
};

// Argument outside the mathematical domain of an operation.
struct DomainError : std::domain_error {
    explicit DomainError(const std::string& m) : std::domain_error(m) {}
};

// A computation failed to reach the requested accuracy.
struct AccuracyError : std::runtime_error {
    explicit AccuracyError(const std::string& m) : std::runtime_error(m) {}
};

// Internal cross-checks disagree (e.g. fixed-point root not matched by iteration).
struct InconsistencyError : std::runtime_error {
    explicit InconsistencyError(const std::string& m) : std::runtime_error(m) {}
};

// Registry lookup failure.
struct UnknownFormulaError : std::invalid_argument {
    explicit UnknownFormulaError(const std::string& m) : std::invalid_argument(m) {}
};

} // namespace zetaforge

#endif
