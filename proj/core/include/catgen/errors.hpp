#pragma once

#include <stdexcept>
#include <string>

namespace catgen {

/// Thrown when an argument or configuration value is outside its documented
/// domain (bad parameter ranges, unsorted grids, unnormalizable states, ...).
/// CLI maps this to exit code 2.
class validation_error : public std::invalid_argument {
public:
  explicit validation_error(const std::string& what) : std::invalid_argument(what) {}
};

/// Thrown when a numerical routine cannot reach its requested accuracy
/// (quadrature that fails to settle, matrix exponential with a large
/// unitarity residual, a fidelity integral that does not stabilize under
/// grid refinement, physicality violations that signal inaccuracy, ...).
/// CLI maps this to exit code 3.
class convergence_error : public std::runtime_error {
public:
  explicit convergence_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace catgen
