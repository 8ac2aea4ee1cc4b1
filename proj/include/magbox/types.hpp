#ifndef MAGBOX_TYPES_HPP
#define MAGBOX_TYPES_HPP

#include <complex>
#include <stdexcept>
#include <string>

namespace magbox {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

// Error categories used across the library. Configuration problems are
// separated from domain violations (inadmissible activity, contour does not
// enclose the spectrum, ...) so callers can map them to distinct exit codes.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

struct ContourError : std::runtime_error {
    explicit ContourError(const std::string& msg) : std::runtime_error(msg) {}
};

struct ResourceError : std::runtime_error {
    explicit ResourceError(const std::string& msg) : std::runtime_error(msg) {}
};

struct InternalError : std::runtime_error {
    explicit InternalError(const std::string& msg) : std::runtime_error(msg) {}
};

// Solver did not converge; carries the iteration count for diagnostics.
struct SolverError : std::runtime_error {
    int iterations;
    SolverError(const std::string& msg, int iters)
        : std::runtime_error(msg + " (iterations: " + std::to_string(iters) + ")"),
          iterations(iters) {}
};

}  // namespace magbox

#endif
