#include "incompress/stats.hpp"

#include <cmath>
#include <stdexcept>

namespace incompress::core {

TrialSummary summarize(std::span<const double> samples) {
    if (samples.empty()) throw std::invalid_argument("no samples");

    TrialSummary s;
    s.count = samples.size();
    s.min = samples[0];
    s.max = samples[0];

    double mean = 0.0;
    double m2 = 0.0;
    std::size_t seen = 0;
    for (double x : samples) {
        ++seen;
        const double delta = x - mean;
        mean += delta / static_cast<double>(seen);
        m2 += delta * (x - mean);
        if (x < s.min) s.min = x;
        if (x > s.max) s.max = x;
    }
    s.mean = mean;
    s.sample_std = s.count > 1 ? std::sqrt(m2 / static_cast<double>(s.count - 1)) : 0.0;

    const double half = 1.96 * s.sample_std / std::sqrt(static_cast<double>(s.count));
    s.ci95_low = mean - half;
    s.ci95_high = mean + half;
    return s;
}

double log2_factorial(std::uint64_t n) {
    double acc = 0.0;
    for (std::uint64_t i = 2; i <= n; ++i) acc += std::log2(static_cast<double>(i));
    return acc;
}

} // namespace incompress::core
