#include "qam/generator.hpp"

#include <cmath>

namespace qam {

namespace {
const double kInvE = std::exp(-1.0);
}

Generator identity_generator() {
    return Generator{
        [](double x) { return x; },
        [](double) { return 1.0; },
        [](double) { return 0.0; },
        Interval::reals(),
        Direction::increasing,
        "id",
    };
}

Generator exp_generator() {
    return Generator{
        [](double x) { return std::exp(x); },
        [](double x) { return std::exp(x); },
        [](double x) { return std::exp(x); },
        Interval::reals(),
        Direction::increasing,
        "exp",
    };
}

Generator log_generator() {
    return Generator{
        [](double x) { return std::log(x); },
        [](double x) { return 1.0 / x; },
        [](double x) { return -1.0 / (x * x); },
        Interval::positive_reals(),
        Direction::increasing,
        "ln",
    };
}

Generator power_generator(double alpha) {
    if (alpha == 0.0) return log_generator();
    return Generator{
        [alpha](double x) { return std::pow(x, alpha); },
        [alpha](double x) { return alpha * std::pow(x, alpha - 1.0); },
        [alpha](double x) { return alpha * (alpha - 1.0) * std::pow(x, alpha - 2.0); },
        Interval::positive_reals(),
        alpha > 0 ? Direction::increasing : Direction::decreasing,
        "pow:" + std::to_string(alpha),
    };
}

Generator xlnx_generator(bool upper_branch) {
    Interval domain = upper_branch
                          ? Interval(kInvE, std::numeric_limits<double>::infinity())
                          : Interval(0.0, kInvE);
    return Generator{
        [](double x) { return x * std::log(x); },
        [](double x) { return std::log(x) + 1.0; },
        [](double x) { return 1.0 / x; },
        domain,
        upper_branch ? Direction::increasing : Direction::decreasing,
        upper_branch ? "xlnx" : "xlnx_low",
    };
}

Generator radical_generator(double log_alpha) {
    if (log_alpha == 0.0) {
        // alpha == 1 makes alpha^(1/x) constant; -1/x carries the same
        // second-to-first derivative ratio -2/x and fills the gap.
        return Generator{
            [](double x) { return -1.0 / x; },
            [](double x) { return 1.0 / (x * x); },
            [](double x) { return -2.0 / (x * x * x); },
            Interval::positive_reals(),
            Direction::increasing,
            "radical:0",
        };
    }
    double t = log_alpha;
    return Generator{
        [t](double x) { return std::exp(t / x); },
        [t](double x) { return -t / (x * x) * std::exp(t / x); },
        [t](double x) { return (t * t / (x * x) + 2.0 * t / x) / (x * x) * std::exp(t / x); },
        Interval::positive_reals(),
        t > 0 ? Direction::decreasing : Direction::increasing,
        "radical:" + std::to_string(t),
    };
}

Generator exp_tx_generator(double t) {
    if (t == 0.0) return identity_generator();
    return Generator{
        [t](double x) { return std::exp(t * x); },
        [t](double x) { return t * std::exp(t * x); },
        [t](double x) { return t * t * std::exp(t * x); },
        Interval::reals(),
        t > 0 ? Direction::increasing : Direction::decreasing,
        "exptx:" + std::to_string(t),
    };
}

Generator xax_generator(double alpha, bool upper_branch) {
    if (alpha == 0.0) return xlnx_generator(upper_branch);
    Interval domain = upper_branch
                          ? Interval(kInvE, std::numeric_limits<double>::infinity())
                          : Interval(0.0, kInvE);
    // x^(a x) = exp(a x ln x); with u = a x ln x, u' = a (ln x + 1),
    // u'' = a / x, so f' = u' e^u and f'' = (u'' + u'^2) e^u.
    auto f = [alpha](double x) { return std::exp(alpha * x * std::log(x)); };
    auto df = [alpha, f](double x) { return alpha * (std::log(x) + 1.0) * f(x); };
    auto d2f = [alpha, f](double x) {
        double u1 = alpha * (std::log(x) + 1.0);
        return (alpha / x + u1 * u1) * f(x);
    };
    bool increasing = (alpha > 0) == upper_branch;
    return Generator{
        f,
        df,
        d2f,
        domain,
        increasing ? Direction::increasing : Direction::decreasing,
        "xax:" + std::to_string(alpha),
    };
}

Generator affine_of(const Generator& g, double alpha, double beta) {
    if (alpha == 0.0) {
        throw ValidationError("affine", "affine transform requires alpha != 0");
    }
    auto f = g.f;
    auto df = g.df;
    auto d2f = g.d2f;
    Direction dir = alpha > 0 ? g.direction
                              : (g.direction == Direction::increasing ? Direction::decreasing
                                                                      : Direction::increasing);
    return Generator{
        [f, alpha, beta](double x) { return alpha * f(x) + beta; },
        [df, alpha](double x) { return alpha * df(x); },
        [d2f, alpha](double x) { return alpha * d2f(x); },
        g.domain,
        dir,
        g.name + "_affine",
    };
}

}  // namespace qam
