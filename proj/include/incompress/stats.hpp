#ifndef INCOMPRESS_STATS_HPP
#define INCOMPRESS_STATS_HPP

#include <cstddef>
#include <cstdint>
#include <span>

namespace incompress::core {

// Batch statistics over one experiment's samples. The confidence interval
// is the normal approximation mean ± 1.96·sample_std/√count; with a single
// sample the std is reported as 0 and the interval collapses to the point.
struct TrialSummary {
    std::size_t count = 0;
    double mean = 0.0;
    double sample_std = 0.0; // (count-1) denominator
    double ci95_low = 0.0;
    double ci95_high = 0.0;
    double min = 0.0;
    double max = 0.0;
};

// Welford accumulation. Throws std::invalid_argument("no samples") on an
// empty input.
TrialSummary summarize(std::span<const double> samples);

// log2(n!) by exact summation of log2(i), not Stirling. Relative error
// stays below 1e-9 for n up to 1e6.
double log2_factorial(std::uint64_t n);

} // namespace incompress::core

#endif
