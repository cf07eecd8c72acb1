#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "qam/error.hpp"
#include "qam/interval.hpp"

namespace qam {

/// A data vector a = (a_1, ..., a_n), n >= 1. Domain membership is checked
/// against a generator's interval at each operation call site.
class Sample {
public:
    explicit Sample(std::vector<double> values) : values_(std::move(values)) {
        if (values_.empty()) {
            throw ValidationError("sample", "sample must contain at least one value");
        }
        for (double v : values_) {
            if (!std::isfinite(v)) {
                throw ValidationError("sample", "sample values must be finite");
            }
        }
    }

    const std::vector<double>& values() const { return values_; }
    std::size_t size() const { return values_.size(); }

    double min() const { return *std::min_element(values_.begin(), values_.end()); }
    double max() const { return *std::max_element(values_.begin(), values_.end()); }

    bool constant() const {
        return std::all_of(values_.begin(), values_.end(),
                           [&](double v) { return v == values_.front(); });
    }

    void require_inside(const Interval& domain) const {
        for (double v : values_) {
            if (!domain.contains(v)) {
                throw ValidationError("domain", "sample value outside generator domain");
            }
        }
    }

private:
    std::vector<double> values_;
};

/// Positive weights summing to one. Inputs whose sum deviates from 1 by at
/// most 1e-6 are renormalized (CSV rounding); larger deviation is an error.
class Weights {
public:
    explicit Weights(std::vector<double> values) : values_(std::move(values)) {
        if (values_.empty()) {
            throw ValidationError("weights", "weights must contain at least one value");
        }
        double sum = 0.0;
        for (double w : values_) {
            if (!(w > 0.0) || !std::isfinite(w)) {
                throw ValidationError("weights", "weights must be positive and finite");
            }
            sum += w;
        }
        if (std::abs(sum - 1.0) > 1e-6) {
            throw ValidationError("weights_sum",
                                  "weight sum " + std::to_string(sum) +
                                      " deviates from 1 by more than 1e-6");
        }
        for (double& w : values_) w /= sum;
    }

    static Weights uniform(std::size_t n) {
        return Weights(std::vector<double>(n, 1.0 / static_cast<double>(n)));
    }

    const std::vector<double>& values() const { return values_; }
    std::size_t size() const { return values_.size(); }

private:
    std::vector<double> values_;
};

}  // namespace qam
