#ifndef OVERQ_ERRORS_HPP
#define OVERQ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace overq {

// Error taxonomy shared by the exact and numeric layers. Stable names; the
// CLI maps them onto exit codes (usage errors -> 2, numeric failures -> 3).
struct ZeroSeries : std::runtime_error {
    explicit ZeroSeries(const std::string& m) : std::runtime_error("ZeroSeries: " + m) {}
};
struct LatticeMismatch : std::runtime_error {
    explicit LatticeMismatch(const std::string& m) : std::runtime_error("LatticeMismatch: " + m) {}
};
struct TooLarge : std::invalid_argument {
    explicit TooLarge(const std::string& m) : std::invalid_argument("TooLarge: " + m) {}
};
struct BadParams : std::invalid_argument {
    explicit BadParams(const std::string& m) : std::invalid_argument("BadParams: " + m) {}
};
struct Unsupported : std::invalid_argument {
    explicit Unsupported(const std::string& m) : std::invalid_argument("Unsupported: " + m) {}
};
struct InsufficientTable : std::invalid_argument {
    explicit InsufficientTable(const std::string& m) : std::invalid_argument("InsufficientTable: " + m) {}
};
struct ConvergenceDomain : std::domain_error {
    explicit ConvergenceDomain(const std::string& m) : std::domain_error("ConvergenceDomain: " + m) {}
};
struct QuadratureFailure : std::runtime_error {
    explicit QuadratureFailure(const std::string& m) : std::runtime_error("QuadratureFailure: " + m) {}
};
struct PoleHit : std::domain_error {
    explicit PoleHit(const std::string& m) : std::domain_error("PoleHit: " + m) {}
};
struct BadMatrix : std::invalid_argument {
    explicit BadMatrix(const std::string& m) : std::invalid_argument("BadMatrix: " + m) {}
};

} // namespace overq

#endif
