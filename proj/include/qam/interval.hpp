#pragma once

#include <cmath>
#include <limits>

#include "qam/error.hpp"

namespace qam {

/// An interval with individually open or closed endpoints. Endpoints may be
/// infinite (then the endpoint is necessarily open for evaluation purposes).
///
/// Evaluation never touches an open endpoint: eval_lo()/eval_hi() report the
/// inset working range used by grids, quadrature and inversion brackets.
struct Interval {
    double lo;
    double hi;
    bool open_lo = true;
    bool open_hi = true;

    Interval(double lo_, double hi_, bool open_lo_ = true, bool open_hi_ = true)
        : lo(lo_), hi(hi_), open_lo(open_lo_), open_hi(open_hi_) {
        if (!(lo < hi)) {
            throw ValidationError("interval", "interval requires lo < hi");
        }
    }

    static Interval closed(double lo, double hi) { return Interval(lo, hi, false, false); }
    static Interval open(double lo, double hi) { return Interval(lo, hi, true, true); }

    static Interval positive_reals() {
        return Interval(0.0, std::numeric_limits<double>::infinity());
    }
    static Interval reals() {
        return Interval(-std::numeric_limits<double>::infinity(),
                        std::numeric_limits<double>::infinity());
    }

    double width() const { return hi - lo; }
    bool finite() const { return std::isfinite(lo) && std::isfinite(hi); }

    /// Inset distance kept from open endpoints: max(1e-9, 1e-9 * width),
    /// the width factor dropped when the interval is unbounded.
    double inset() const {
        double w = width();
        if (!std::isfinite(w)) return 1e-9;
        return std::max(1e-9, 1e-9 * w);
    }

    double eval_lo() const { return open_lo ? lo + inset() : lo; }
    double eval_hi() const { return open_hi ? hi - inset() : hi; }

    bool contains(double x) const {
        if (open_lo ? !(x > lo) : !(x >= lo)) return false;
        if (open_hi ? !(x < hi) : !(x <= hi)) return false;
        return true;
    }
};

}  // namespace qam
