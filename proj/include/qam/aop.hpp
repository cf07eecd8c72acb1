#pragma once

#include <cstdint>
#include <optional>

#include "qam/generator.hpp"
#include "qam/quadrature.hpp"
#include "qam/rng.hpp"
#include "qam/sample.hpp"

namespace qam {

/// The comparison operator A(f) = f''/f' evaluated from the derivative
/// oracles. Ordering means under A: A(f) > A(g) throughout an interval
/// forces M_f >= M_g, strict except on constant samples.
double a_operator(const Generator& g, double x);

enum class LimitForm {
    corrected,  // (2/eps^2) * (M(x-eps, x+eps) - x); converges at order eps^2
    literal,    // (2/eps^2) *  M(x-eps, x+eps);      kept for reference only
};

/// Finite-eps estimate of A via the two-point mean of x -+ eps. The corrected
/// form subtracts x before scaling, which is what the Taylor expansion of the
/// mean requires for a finite limit; the literal form diverges as eps -> 0.
double a_operator_numeric(const Generator& g, double x, double eps,
                          LimitForm form = LimitForm::corrected);

enum class Relation { greater, smaller, equivalent, incomparable };

const char* relation_name(Relation r);

struct ComparisonVerdict {
    Relation relation;
    std::optional<double> witness_greater;  // x with A(f) > A(g) + tol
    std::optional<double> witness_smaller;  // x with A(f) < A(g) - tol
    std::optional<double> witness_tie;      // x with |A(f) - A(g)| <= tol
    int grid_size = 0;
    std::uint64_t seed = kDefaultSeed;
};

struct CompareOptions {
    double tol = 1e-9;  // absolute tolerance on A differences
    std::uint64_t seed = kDefaultSeed;
    std::optional<Interval> window;  // evaluation window; defaults to the common domain
};

/// Pointwise trichotomy of A(f) - A(g) over a uniform grid plus 64 random
/// points. `greater` / `smaller` require a strict sign at every point;
/// mixed evidence is `incomparable` with witnesses.
ComparisonVerdict compare_means(const Generator& f, const Generator& g, int grid_size,
                                const CompareOptions& opts = {});

struct AffineFit {
    bool equivalent = false;
    double alpha = 0.0;
    double beta = 0.0;
    double max_a_gap = 0.0;      // max |A(f)-A(g)| seen on the grid
    double max_residual = 0.0;   // max |f - (alpha g + beta)| when equivalent
};

/// True iff A(f) == A(g) within tolerance on the grid; the fitted alpha, beta
/// from a two-point solve are then cross-checked against f on the whole grid.
AffineFit affine_equivalent(const Generator& f, const Generator& g, int grid_size,
                            const CompareOptions& opts = {});

/// Integral of |A(g)| over U (adaptive Simpson; partial value flagged on
/// depth exhaustion).
QuadResult l1_norm_A(const Generator& g, const Interval& u, const QuadOptions& opts = {});

/// The uniform-error certificate for replacing generator f by k on U:
/// bound = |U| * exp(2 ||A f||_1) * sinh(2 ||A k - A f||_1), valid for every
/// sample/weights combination with values in U.
struct BoundCertificate {
    double interval_length = 0.0;
    double l1_norm_Af = 0.0;
    double l1_norm_diff = 0.0;
    double bound = 0.0;
    bool quadrature_converged = true;

    double recompute() const;
};

BoundCertificate error_bound(const Generator& f, const Generator& k, const Interval& u,
                             const QuadOptions& opts = {});

struct GapResult {
    double max_gap = 0.0;
    double at_mean_f = 0.0;
    double at_mean_k = 0.0;
    std::uint64_t seed = kDefaultSeed;
    std::size_t samples = 0;
};

/// Monte-Carlo maximum of |M_f - M_k| over random samples (n in [2,6]) and
/// weights with values in U. Deterministic for a fixed seed.
GapResult empirical_max_gap(const Generator& f, const Generator& k, const Interval& u,
                            std::size_t n_samples, std::uint64_t seed = kDefaultSeed);

}  // namespace qam
