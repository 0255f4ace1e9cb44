#include "casimir/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

#include "casimir/errors.hpp"

namespace casimir {
namespace {

// Kronrod-15 nodes on [-1,1] (positive half) with K15 weights; the G7 weights
// sit at the odd-indexed nodes.
constexpr double xgk[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.000000000000000};
constexpr double wgk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
constexpr double wg[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469};

struct panel {
    double a, b, value, error;
};

panel gauss_kronrod(const std::function<double(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    double fv[15];
    for (int i = 0; i < 7; ++i) {
        fv[i] = f(c - h * xgk[i]);
        fv[14 - i] = f(c + h * xgk[i]);
    }
    fv[7] = f(c);
    double k15 = 0.0, g7 = 0.0;
    for (int i = 0; i < 7; ++i) k15 += wgk[i] * (fv[i] + fv[14 - i]);
    k15 += wgk[7] * fv[7];
    for (int i = 0; i < 3; ++i) g7 += wg[i] * (fv[2 * i + 1] + fv[13 - 2 * i]);
    g7 += wg[3] * fv[7];
    panel p;
    p.a = a;
    p.b = b;
    p.value = k15 * h;
    // embedded-rule difference as the error estimate
    p.error = std::abs(k15 - g7) * h;
    return p;
}

struct panel_cmp {
    bool operator()(const panel& x, const panel& y) const { return x.error < y.error; }
};

}  // namespace

integration_result integrate(const std::function<double(double)>& f,
                             double a, double b, const quadrature_spec& spec) {
    if (a == b) return {0.0, 0.0};
    std::priority_queue<panel, std::vector<panel>, panel_cmp> heap;
    heap.push(gauss_kronrod(f, a, b));
    double value = heap.top().value;
    double error = heap.top().error;
    int used = 1;
    while (error > std::max(spec.abs_tol, spec.rel_tol * std::abs(value))) {
        if (used >= spec.max_subdivisions)
            throw convergence_error("integrate: subdivision budget exhausted", value, error);
        panel worst = heap.top();
        heap.pop();
        double mid = 0.5 * (worst.a + worst.b);
        if (mid <= worst.a || mid >= worst.b)
            throw convergence_error("integrate: interval below machine resolution", value, error);
        panel left = gauss_kronrod(f, worst.a, mid);
        panel right = gauss_kronrod(f, mid, worst.b);
        value += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
        ++used;
    }
    return {value, error};
}

integration_result integrate_semi_infinite(const std::function<double(double)>& f,
                                           double a, const quadrature_spec& spec) {
    switch (spec.mapping) {
        case domain_mapping::rational: {
            // x = a + t/(1-t), dx = dt/(1-t)^2
            auto g = [&](double t) {
                double om = 1.0 - t;
                return f(a + t / om) / (om * om);
            };
            return integrate(g, 0.0, 1.0, spec);
        }
        case domain_mapping::exponential: {
            // x = a - ln(1-t), dx = dt/(1-t)
            auto g = [&](double t) {
                double om = 1.0 - t;
                return f(a - std::log(om)) / om;
            };
            return integrate(g, 0.0, 1.0, spec);
        }
        case domain_mapping::identity:
            throw model_error("integrate_semi_infinite: identity mapping cannot cover [a,inf)");
    }
    throw model_error("integrate_semi_infinite: bad mapping");
}

double principal_value(const std::function<double(double)>& f,
                       double a, double b, const principal_value_spec& spec) {
    const double c = spec.pole_location;
    const double w = spec.window_half_width;
    if (!(w > 0.0) || !(c - w > a) || (std::isfinite(b) && !(c + w < b)))
        throw validation_error("principal_value: window must lie strictly inside the domain");

    // symmetric window: g(t) = f(c+t) + f(c-t) is regular for a simple pole
    auto g = [&](double t) { return f(c + t) + f(c - t); };

    // cheap pole-order probe: a non-cancelling (even-order) singularity makes
    // g blow up ~1/t as t -> 0
    {
        double t1 = w * 1e-5, t2 = w * 1e-7;
        double g1 = std::abs(g(t1)), g2 = std::abs(g(t2));
        double f1 = std::abs(f(c + t1));
        if (f1 > 0.0 && g2 > 50.0 * std::max(g1, 1.0) && g2 > 0.5 * std::abs(f(c + t2)))
            throw model_error("principal_value: pole does not cancel (order > 1?)");
    }

    double window = integrate(g, 0.0, w, spec.base).value;
    double left = integrate(f, a, c - w, spec.base).value;
    double right = std::isfinite(b) ? integrate(f, c + w, b, spec.base).value
                                    : integrate_semi_infinite(f, c + w, spec.base).value;
    return left + window + right;
}

double compensated_sum(std::span<const double> terms) {
    kahan_accumulator acc;
    for (double t : terms) acc.add(t);
    return acc.value();
}

}  // namespace casimir
