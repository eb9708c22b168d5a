#include "incompress/monopoly.hpp"

#include <cmath>
#include <stdexcept>

#include "incompress/rng.hpp"

namespace incompress::monopoly {

GameOutcome play(unsigned k, std::uint64_t total_capital, std::uint64_t seed,
                 std::uint64_t max_rounds, bool keep_sequence,
                 const std::function<void(const GameState&)>& observer) {
    if (k < 2) throw std::invalid_argument("monopoly needs k >= 2 players");
    if (total_capital == 0 || total_capital % k != 0)
        throw std::invalid_argument("total capital must be positive and divisible by k");
    if (max_rounds < 1) throw std::invalid_argument("max_rounds must be >= 1");

    GameState st;
    st.k = k;
    st.total = static_cast<std::int64_t>(total_capital);
    st.capitals.assign(k, static_cast<std::int64_t>(total_capital / k));
    st.wins.assign(k, 0);

    GameOutcome out;
    core::Rng rng(seed);
    while (st.round < max_rounds) {
        const unsigned winner = static_cast<unsigned>(rng.below(k));
        for (auto& c : st.capitals) --c;
        st.capitals[winner] += k;
        ++st.wins[winner];
        ++st.round;
        if (keep_sequence) out.winner_sequence.push_back(winner);
        if (observer) observer(st);

        unsigned busted = 0;
        int survivor = -1;
        for (unsigned p = 0; p < k; ++p) {
            if (st.capitals[p] <= 0)
                ++busted;
            else
                survivor = static_cast<int>(p);
        }
        if (busted >= k - 1) {
            out.terminated = true;
            out.rounds = st.round;
            out.winner = survivor;
            return out;
        }
    }
    out.rounds = st.round;
    return out;
}

BatchResult monopoly_batch(unsigned k, std::uint64_t total_capital, std::size_t trials,
                           std::uint64_t seed, std::uint64_t max_rounds,
                           std::vector<GameOutcome>* keep) {
    if (trials < 1) throw std::invalid_argument("monopoly_batch: trials must be >= 1");
    std::vector<double> rounds;
    rounds.reserve(trials);
    BatchResult res;
    for (std::size_t trial = 0; trial < trials; ++trial) {
        GameOutcome out = play(k, total_capital, core::derive_seed(seed, trial), max_rounds);
        if (out.terminated) {
            ++res.terminated;
            rounds.push_back(static_cast<double>(out.rounds));
        } else {
            ++res.not_terminated;
        }
        if (keep) keep->push_back(std::move(out));
    }
    if (!rounds.empty()) res.rounds = core::summarize(rounds);
    return res;
}

double log2_multinomial(std::span<const std::uint64_t> counts) {
    std::uint64_t n = 0;
    for (std::uint64_t c : counts) n += c;
    double acc = core::log2_factorial(n);
    for (std::uint64_t c : counts) acc -= core::log2_factorial(c);
    return acc;
}

double log2_balanced_count_bound(std::uint64_t n, unsigned k, double f) {
    const double nd = static_cast<double>(n);
    const double kd = static_cast<double>(k);
    return nd * std::log2(kd) - 0.5 * (kd - 1) * std::log2(nd) + 0.5 * kd * std::log2(kd) +
           (kd - 1) * std::log2(f) + kd;
}

} // namespace incompress::monopoly
