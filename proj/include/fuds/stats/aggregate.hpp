#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>

namespace fuds::stats {

/// Summary of repeated measurements. stddev is the n-1 sample deviation;
/// ci95 is the normal-approximation half-width 1.96 * stderr, the interval
/// convention used throughout the result tables.
struct AggregateStats {
    std::size_t n = 0;
    double mean = 0.0;
    double stddev = 0.0;
    double std_error = 0.0;
    double ci95 = 0.0;
};

/// Welford's single-pass mean and variance. Requires at least two samples.
inline AggregateStats aggregate(std::span<const double> samples) {
    if (samples.size() < 2)
        throw std::invalid_argument("aggregate: need at least two samples");
    double mean = 0.0, m2 = 0.0;
    std::size_t n = 0;
    for (const double x : samples) {
        ++n;
        const double d1 = x - mean;
        mean += d1 / static_cast<double>(n);
        m2 += d1 * (x - mean);
    }
    AggregateStats out;
    out.n = n;
    out.mean = mean;
    out.stddev = std::sqrt(m2 / static_cast<double>(n - 1));
    out.std_error = out.stddev / std::sqrt(static_cast<double>(n));
    out.ci95 = 1.96 * out.std_error;
    return out;
}

} // namespace fuds::stats
