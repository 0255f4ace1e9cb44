#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <span>

namespace casimir {

enum class domain_mapping { identity, rational, exponential };

struct quadrature_spec {
    double rel_tol = 1e-9;
    double abs_tol = 0.0;
    int max_subdivisions = 4000;
    domain_mapping mapping = domain_mapping::rational;  // used for [a,inf) only
};

struct integration_result {
    double value = 0.0;
    double error = 0.0;  // internal estimate
};

// Adaptive Gauss-Kronrod (G7,K15) on [a,b]. Throws convergence_error when the
// subdivision budget is exhausted before |err| <= max(abs_tol, rel_tol*|value|).
integration_result integrate(const std::function<double(double)>& f,
                             double a, double b, const quadrature_spec& spec = {});

// Semi-infinite [a, inf): the tail is folded onto a finite interval with the
// mapping selected in spec (rational x = a + t/(1-t) by default).
integration_result integrate_semi_infinite(const std::function<double(double)>& f,
                                           double a, const quadrature_spec& spec = {});

struct principal_value_spec {
    double pole_location = 0.0;
    double window_half_width = 0.0;  // > 0, pole strictly inside [a,b]
    quadrature_spec base = {};
};

// Cauchy principal value of f over [a,b] with a simple pole at
// spec.pole_location. b may be +inf. The window around the pole is handled by
// symmetric cancellation, the rest by regular adaptive quadrature.
double principal_value(const std::function<double(double)>& f,
                       double a, double b, const principal_value_spec& spec);

// Neumaier-compensated serial sum in the given order. Deterministic: the
// reduction order is exactly the span order regardless of who produced the
// terms.
double compensated_sum(std::span<const double> terms);

class kahan_accumulator {
public:
    void add(double x) {
        double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

}  // namespace casimir
