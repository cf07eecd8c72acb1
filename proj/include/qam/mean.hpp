#pragma once

#include <optional>

#include "qam/generator.hpp"
#include "qam/sample.hpp"

namespace qam {

struct InvertOptions {
    double atol = 1e-12;
    double rtol = 1e-10;
};

/// sum_i w_i f(a_i), evaluated as a compensated (Neumaier) summation with the
/// terms sorted by generator value first, so simultaneous permutations of
/// (a, w) reproduce the result bit for bit.
double weighted_push(const Generator& g, const Sample& a, const Weights& w);

/// Solves g.f(x) = y for x inside `bracket`: bisection to width 1e-8, then
/// up to 5 Newton steps using df, falling back to the bisection result.
/// Throws ValidationError when y lies outside the monotone image of the
/// bracket and NumericError when the generator's derivative changes sign
/// or the residual tolerance cannot be met.
double invert_generator(const Generator& g, double y, const Interval& bracket,
                        const InvertOptions& opts = {});

/// The quasi-arithmetic mean: the M with g.f(M) = sum_i w_i g.f(a_i).
/// Constant samples return the constant exactly; otherwise the result lies
/// in [min a, max a].
double evaluate_mean(const Generator& g, const Sample& a, const Weights& w,
                     const InvertOptions& opts = {});

}  // namespace qam
