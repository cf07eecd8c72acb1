#include "qam/quadrature.hpp"

#include <cmath>

#include "qam/error.hpp"

namespace qam {

namespace {

struct Worker {
    const std::function<double(double)>& f;
    const QuadOptions& opts;
    std::size_t evals = 0;
    bool converged = true;
    double error_estimate = 0.0;

    double eval(double x) {
        ++evals;
        double v = f(x);
        if (std::isnan(v)) {
            throw NumericError("quadrature", "integrand evaluated to NaN");
        }
        return v;
    }

    static double simpson(double fa, double fm, double fb, double h) {
        return h / 6.0 * (fa + 4.0 * fm + fb);
    }

    double recurse(double a, double b, double fa, double fm, double fb, double whole,
                   double tol, int depth) {
        double m = 0.5 * (a + b);
        double lm = 0.5 * (a + m);
        double rm = 0.5 * (m + b);
        double flm = eval(lm);
        double frm = eval(rm);
        double left = simpson(fa, flm, fm, m - a);
        double right = simpson(fm, frm, fb, b - m);
        double delta = left + right - whole;
        if (depth >= opts.max_depth) {
            converged = false;
            error_estimate += std::abs(delta);
            return left + right + delta / 15.0;
        }
        if (std::abs(delta) <= 15.0 * tol) {
            error_estimate += std::abs(delta) / 15.0;
            return left + right + delta / 15.0;
        }
        return recurse(a, m, fa, flm, fm, left, 0.5 * tol, depth + 1) +
               recurse(m, b, fm, frm, fb, right, 0.5 * tol, depth + 1);
    }
};

}  // namespace

QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     const QuadOptions& opts) {
    Worker w{f, opts};
    double m = 0.5 * (a + b);
    double fa = w.eval(a);
    double fm = w.eval(m);
    double fb = w.eval(b);
    double whole = Worker::simpson(fa, fm, fb, b - a);
    double tol = std::max(opts.abs_tol, opts.rel_tol * std::abs(whole));
    double value = w.recurse(a, b, fa, fm, fb, whole, tol, 0);
    return QuadResult{value, w.converged, w.error_estimate, w.evals};
}

}  // namespace qam
