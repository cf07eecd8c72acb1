#include "qam/mean.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace qam {

namespace {

double neumaier_sum(const std::vector<double>& terms) {
    double sum = 0.0;
    double comp = 0.0;
    for (double v : terms) {
        double t = sum + v;
        if (std::abs(sum) >= std::abs(v)) {
            comp += (sum - t) + v;
        } else {
            comp += (v - t) + sum;
        }
        sum = t;
    }
    return sum + comp;
}

void check_derivative_sign(const Generator& g, double x) {
    double d = g.df(x);
    if (!std::isfinite(d) || std::abs(d) < 1e-300) {
        throw NumericError("non_monotone",
                           g.name + ": derivative vanishes at x=" + std::to_string(x));
    }
    if ((d > 0 ? 1 : -1) != direction_sign(g.direction)) {
        throw NumericError("non_monotone",
                           g.name + ": derivative sign change detected at x=" +
                               std::to_string(x));
    }
}

}  // namespace

double weighted_push(const Generator& g, const Sample& a, const Weights& w) {
    if (a.size() != w.size()) {
        throw ValidationError("length", "sample and weights sizes differ");
    }
    a.require_inside(g.domain);

    std::vector<std::pair<double, double>> keyed(a.size());  // (f(a_i), w_i)
    for (std::size_t i = 0; i < a.size(); ++i) {
        double fv = g.f(a.values()[i]);
        if (!std::isfinite(fv)) {
            throw NumericError("overflow", g.name + ": generator value not finite at x=" +
                                               std::to_string(a.values()[i]));
        }
        keyed[i] = {fv, w.values()[i]};
    }
    std::sort(keyed.begin(), keyed.end());

    std::vector<double> terms(keyed.size());
    for (std::size_t i = 0; i < keyed.size(); ++i) {
        terms[i] = keyed[i].second * keyed[i].first;
    }
    return neumaier_sum(terms);
}

double invert_generator(const Generator& g, double y, const Interval& bracket,
                        const InvertOptions& opts) {
    double lo = bracket.eval_lo();
    double hi = bracket.eval_hi();
    // Clip to the domain's working range only where the bracket actually
    // sticks out; endpoints already inside the open domain stay usable.
    if (!g.domain.contains(lo)) lo = g.domain.eval_lo();
    if (!g.domain.contains(hi)) hi = g.domain.eval_hi();
    if (!(lo < hi)) {
        throw ValidationError("bracket", "inversion bracket is empty after insets");
    }

    check_derivative_sign(g, lo);
    check_derivative_sign(g, hi);
    const bool increasing = g.direction == Direction::increasing;

    double flo = g.f(lo);
    double fhi = g.f(hi);
    if (!std::isfinite(flo) || !std::isfinite(fhi)) {
        throw NumericError("overflow", g.name + ": generator not finite on bracket");
    }

    double img_lo = increasing ? flo : fhi;
    double img_hi = increasing ? fhi : flo;
    double slack = 1e-12 * (std::abs(img_lo) + std::abs(img_hi)) +
                   4.0 * std::numeric_limits<double>::epsilon();
    if (y < img_lo - slack || y > img_hi + slack) {
        throw ValidationError("image", g.name + ": target value outside monotone image of bracket");
    }
    if (y <= img_lo) return increasing ? lo : hi;
    if (y >= img_hi) return increasing ? hi : lo;

    // Bisection to absolute width 1e-8.
    int iter = 0;
    while (hi - lo > 1e-8 && iter < 200) {
        double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;  // width at FP resolution
        double fm = g.f(mid);
        if (!std::isfinite(fm)) {
            throw NumericError("overflow", g.name + ": generator not finite inside bracket");
        }
        if ((fm < y) == increasing) {
            lo = mid;
        } else {
            hi = mid;
        }
        ++iter;
    }

    double best = 0.5 * (lo + hi);
    double best_res = std::abs(g.f(best) - y);

    // Newton polish, capped at 5 steps; keep the best iterate and never
    // leave the bracket.
    double x = best;
    for (int k = 0; k < 5; ++k) {
        double d = g.df(x);
        if (!std::isfinite(d) || std::abs(d) < 1e-300) break;
        double step = (g.f(x) - y) / d;
        double xn = x - step;
        if (!std::isfinite(xn) || xn < lo || xn > hi) break;
        double res = std::abs(g.f(xn) - y);
        if (res < best_res) {
            best = xn;
            best_res = res;
        }
        if (res == 0.0) break;
        x = xn;
    }

    check_derivative_sign(g, best);

    double fscale = std::max(std::abs(flo), std::abs(fhi));
    double tol = opts.atol + opts.rtol * std::abs(y) +
                 4.0 * std::numeric_limits<double>::epsilon() * fscale;
    if (best_res > tol) {
        throw NumericError("inversion",
                           g.name + ": inversion residual " + std::to_string(best_res) +
                               " above tolerance (non-monotone generator?)");
    }
    return best;
}

double evaluate_mean(const Generator& g, const Sample& a, const Weights& w,
                     const InvertOptions& opts) {
    if (a.size() != w.size()) {
        throw ValidationError("length", "sample and weights sizes differ");
    }
    a.require_inside(g.domain);
    if (a.constant()) return a.values().front();

    double y = weighted_push(g, a, w);
    double m = invert_generator(g, y, Interval::closed(a.min(), a.max()), opts);
    return std::clamp(m, a.min(), a.max());
}

}  // namespace qam
