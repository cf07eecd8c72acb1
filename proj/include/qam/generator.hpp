#pragma once

#include <functional>
#include <string>
#include <utility>

#include "qam/interval.hpp"

namespace qam {

enum class Direction { increasing, decreasing };

inline int direction_sign(Direction d) { return d == Direction::increasing ? 1 : -1; }

/// A mean generator: a twice continuously differentiable, strictly monotone
/// scalar function on an interval, with first- and second-derivative oracles.
/// The first derivative must not vanish anywhere on the domain; `direction`
/// is the constant sign of f'.
struct Generator {
    std::function<double(double)> f;
    std::function<double(double)> df;
    std::function<double(double)> d2f;
    Interval domain;
    Direction direction;
    std::string name;
};

// Elementary built-ins. Families compose these; tests lean on them heavily.

Generator identity_generator();
Generator exp_generator();
Generator log_generator();

/// x^alpha on (0, inf) for alpha != 0; ln x for alpha == 0.
Generator power_generator(double alpha);

/// x ln x restricted to one branch of monotonicity. upper_branch selects
/// (1/e, inf); otherwise (0, 1/e), where the function is decreasing.
Generator xlnx_generator(bool upper_branch = true);

/// exp(t/x) on (0, inf); the radical generator with t = ln(alpha).
/// t == 0 degenerates to a constant, so that slot is filled by -1/x,
/// which has the matching second-to-first derivative ratio -2/x.
Generator radical_generator(double log_alpha);

/// exp(t x) on R for t != 0; the identity for t == 0.
Generator exp_tx_generator(double t);

/// x^(alpha x) = exp(alpha x ln x) on a monotone branch; alpha == 0 yields
/// x ln x. upper_branch selects (1/e, inf) vs (0, 1/e).
Generator xax_generator(double alpha, bool upper_branch = true);

/// alpha * g + beta; requires alpha != 0. Mean-equivalent to g.
Generator affine_of(const Generator& g, double alpha, double beta);

}  // namespace qam
