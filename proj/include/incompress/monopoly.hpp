#ifndef INCOMPRESS_MONOPOLY_HPP
#define INCOMPRESS_MONOPOLY_HPP

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "incompress/stats.hpp"

// The k-player win-transfer game: every round one uniform winner collects
// k-1 units, everyone else pays one. Players keep playing at or below
// zero; the game ends the first round at least k-1 players are at <= 0,
// leaving a single holder of all the capital.

namespace incompress::monopoly {

struct GameState {
    unsigned k = 2;
    std::int64_t total = 0; // conserved every round
    std::vector<std::int64_t> capitals;
    std::uint64_t round = 0;
    std::vector<std::uint64_t> wins; // n_i; capitals[i] = I/k + k*wins[i] - round
};

struct GameOutcome {
    bool terminated = false;
    std::uint64_t rounds = 0;
    int winner = -1; // player id, -1 while unterminated
    std::vector<unsigned> winner_sequence; // populated only on request
};

inline std::uint64_t default_max_rounds(std::uint64_t total_capital) {
    return 10 * total_capital * total_capital;
}

// total_capital must be positive and divisible by k (equal integer
// endowments); k >= 2. The observer, when set, sees the state after every
// round — handy for invariant checks.
GameOutcome play(unsigned k, std::uint64_t total_capital, std::uint64_t seed,
                 std::uint64_t max_rounds, bool keep_sequence = false,
                 const std::function<void(const GameState&)>& observer = {});

struct BatchResult {
    core::TrialSummary rounds; // over terminated games only
    std::size_t terminated = 0;
    std::size_t not_terminated = 0;
};

// Trial t plays on derive_seed(seed, t); aggregation in trial order.
BatchResult monopoly_batch(unsigned k, std::uint64_t total_capital, std::size_t trials,
                           std::uint64_t seed, std::uint64_t max_rounds,
                           std::vector<GameOutcome>* keep = nullptr);

// Exact log2 of the multinomial coefficient n!/(prod counts_i!) by summed
// log-factorials.
double log2_multinomial(std::span<const std::uint64_t> counts);

// Upper bound on the log2 count of length-n strings over k symbols whose
// symbol frequencies all sit within f of n/k:
//   n log k - (k-1)/2 log n + k/2 log k + (k-1) log f + k
// (constant term dropped).
double log2_balanced_count_bound(std::uint64_t n, unsigned k, double f);

} // namespace incompress::monopoly

#endif
