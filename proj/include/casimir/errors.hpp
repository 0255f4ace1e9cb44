#pragma once

#include <stdexcept>
#include <string>

namespace casimir {

// Quadrature or Matsubara truncation failed to meet its tolerance.
// Carries the best estimate obtained so far.
class convergence_error : public std::runtime_error {
public:
    convergence_error(const std::string& what, double best, double err_estimate)
        : std::runtime_error(what), best_estimate(best), error_estimate(err_estimate) {}
    double best_estimate;
    double error_estimate;
};

// Input outside the supported model regime (e.g. lossless KK check,
// zero-frequency closed form with v = 0).
class model_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Malformed configuration or data file.
class validation_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace casimir
