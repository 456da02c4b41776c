#pragma once

#include <stdexcept>
#include <string>

namespace ulam {

/// Invalid user-supplied parameter (CLI exit code 2).
struct ParameterError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Geometric precondition failed (degenerate section, tangency, ...).
struct GeometryError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A construction stage failed (CLI exit code 3). Carries the stage name
/// and, when meaningful, the failing node.
struct ConstructionError : std::runtime_error {
    ConstructionError(const std::string& stage, const std::string& what,
                      double node = 0.0)
        : std::runtime_error(stage + ": " + what), stage(stage), node(node) {}
    std::string stage;
    double node;
};

/// A numerical procedure did not converge to its tolerance.
struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace ulam
