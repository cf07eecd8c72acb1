#pragma once

#include <cstddef>
#include <functional>

namespace qam {

struct QuadResult {
    double value = 0.0;
    bool converged = true;
    double error_estimate = 0.0;
    std::size_t evaluations = 0;
};

struct QuadOptions {
    double abs_tol = 1e-10;
    double rel_tol = 1e-8;
    int max_depth = 40;
};

/// Adaptive Simpson quadrature with interval bisection and Richardson
/// correction. Depth exhaustion does not throw: the partial value is
/// returned with converged == false.
QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     const QuadOptions& opts = {});

}  // namespace qam
