#include "incompress/walk.hpp"

#include <cmath>

namespace incompress::walk {

WalkStats walk_batch(unsigned k, std::uint64_t n, std::size_t trials, std::uint64_t seed,
                     std::vector<WalkRecord>* keep) {
    if (trials < 1) throw std::invalid_argument("walk_batch: trials must be >= 1");
    std::vector<std::vector<double>> abs_d(k), max_exc(k), steps(k);
    for (unsigned d = 0; d < k; ++d) {
        abs_d[d].reserve(trials);
        max_exc[d].reserve(trials);
        steps[d].reserve(trials);
    }
    for (std::size_t trial = 0; trial < trials; ++trial) {
        WalkRecord rec = simulate_walk(k, n, core::derive_seed(seed, trial));
        for (unsigned d = 0; d < k; ++d) {
            abs_d[d].push_back(std::abs(static_cast<double>(rec.endpoint[d])));
            max_exc[d].push_back(static_cast<double>(rec.max_excursion[d]));
            steps[d].push_back(static_cast<double>(rec.steps[d]));
        }
        if (keep) keep->push_back(std::move(rec));
    }
    WalkStats stats;
    stats.k = k;
    stats.n = n;
    stats.trials = trials;
    stats.dims.resize(k);
    for (unsigned d = 0; d < k; ++d) {
        stats.dims[d].abs_endpoint = core::summarize(abs_d[d]);
        stats.dims[d].max_excursion = core::summarize(max_exc[d]);
        stats.dims[d].steps = core::summarize(steps[d]);
    }
    return stats;
}

} // namespace incompress::walk
