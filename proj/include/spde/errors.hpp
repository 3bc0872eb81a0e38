#pragma once

#include <stdexcept>
#include <string>

namespace spde {

// Resolvent / root-find did not reach tolerance; carries the last residual.
class SolverError : public std::runtime_error {
public:
    SolverError(const std::string& what, double last_residual)
        : std::runtime_error(what), last_residual(last_residual) {}
    double last_residual;
};

// A path left the representable range (norm above the divergence threshold
// or a non-finite coefficient).
class DivergenceError : public std::runtime_error {
public:
    DivergenceError(const std::string& what, long step)
        : std::runtime_error(what), step(step) {}
    long step;
};

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace spde
