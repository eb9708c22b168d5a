#ifndef INCOMPRESS_WALK_HPP
#define INCOMPRESS_WALK_HPP

#include <cstdint>
#include <cstdlib>
#include <span>
#include <stdexcept>
#include <vector>

#include "incompress/rng.hpp"
#include "incompress/stats.hpp"

// k-dimensional unit-step random walks. Each step picks one of 2k moves
// uniformly; move m touches dimension m/2, sign bit m%2 (0 steps -1,
// 1 steps +1).

namespace incompress::walk {

struct WalkRecord {
    unsigned k = 1;
    std::uint64_t n = 0;
    std::vector<std::uint64_t> steps;         // m_i, sums to n
    std::vector<std::int64_t> endpoint;       // D_i, signed; |D_i| <= M_i <= m_i
    std::vector<std::uint64_t> max_excursion; // M_i = max over time of |position_i|
};

namespace detail {

template <class MoveFn>
WalkRecord run_walk(unsigned k, std::uint64_t n, MoveFn&& next_move) {
    WalkRecord rec;
    rec.k = k;
    rec.n = n;
    rec.steps.assign(k, 0);
    rec.endpoint.assign(k, 0);
    rec.max_excursion.assign(k, 0);
    for (std::uint64_t step = 0; step < n; ++step) {
        const unsigned move = next_move();
        const unsigned dim = move / 2;
        ++rec.steps[dim];
        rec.endpoint[dim] += move % 2 == 1 ? 1 : -1;
        const std::uint64_t dist = static_cast<std::uint64_t>(std::llabs(rec.endpoint[dim]));
        if (dist > rec.max_excursion[dim]) rec.max_excursion[dim] = dist;
    }
    return rec;
}

} // namespace detail

inline WalkRecord simulate_walk(unsigned k, std::uint64_t n, std::uint64_t seed) {
    if (k < 1) throw std::invalid_argument("simulate_walk: k must be >= 1");
    core::Rng rng(seed);
    return detail::run_walk(k, n, [&] { return static_cast<unsigned>(rng.below(2 * k)); });
}

// Drives the same engine with an explicit move sequence (for exhaustive
// enumeration); moves must lie in 0..2k-1.
inline WalkRecord replay_walk(unsigned k, std::span<const unsigned> moves) {
    if (k < 1) throw std::invalid_argument("replay_walk: k must be >= 1");
    for (unsigned m : moves)
        if (m >= 2 * k) throw std::invalid_argument("replay_walk: move out of range");
    std::size_t at = 0;
    return detail::run_walk(k, moves.size(), [&] { return moves[at++]; });
}

struct DimStats {
    core::TrialSummary abs_endpoint;  // |D_i|
    core::TrialSummary max_excursion; // M_i
    core::TrialSummary steps;         // m_i
};

struct WalkStats {
    unsigned k = 1;
    std::uint64_t n = 0;
    std::size_t trials = 0;
    std::vector<DimStats> dims;
};

// Trial t runs on derive_seed(seed, t); aggregation is in trial order.
// keep, when given, receives every record in the same order.
WalkStats walk_batch(unsigned k, std::uint64_t n, std::size_t trials, std::uint64_t seed,
                     std::vector<WalkRecord>* keep = nullptr);

} // namespace incompress::walk

#endif
