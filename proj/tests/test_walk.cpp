#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <map>
#include <vector>

#include "incompress/walk.hpp"

using namespace incompress;

namespace {

// exact E|D| for an n-step one-dimensional walk, from the binomial law
double exact_abs_endpoint(std::uint64_t n) {
    double acc = 0.0;
    const double nd = static_cast<double>(n);
    for (std::uint64_t j = 0; j <= n; ++j) {
        const double logp = std::lgamma(nd + 1) - std::lgamma(double(j) + 1) -
                            std::lgamma(nd - double(j) + 1) - nd * std::log(2.0);
        acc += std::exp(logp) * std::abs(2.0 * double(j) - nd);
    }
    return acc;
}

// exact P(|D| < cut) for the same law
double exact_small_endpoint_prob(std::uint64_t n, double cut) {
    double acc = 0.0;
    const double nd = static_cast<double>(n);
    for (std::uint64_t j = 0; j <= n; ++j) {
        if (std::abs(2.0 * double(j) - nd) >= cut) continue;
        acc += std::exp(std::lgamma(nd + 1) - std::lgamma(double(j) + 1) -
                        std::lgamma(nd - double(j) + 1) - nd * std::log(2.0));
    }
    return acc;
}

void check_structure(const walk::WalkRecord& rec) {
    std::uint64_t total = 0;
    for (unsigned d = 0; d < rec.k; ++d) {
        total += rec.steps[d];
        const std::uint64_t absd = static_cast<std::uint64_t>(std::llabs(rec.endpoint[d]));
        CHECK(absd <= rec.max_excursion[d]);
        CHECK(rec.max_excursion[d] <= rec.steps[d]);
        CHECK((rec.endpoint[d] % 2 + 2) % 2 == rec.steps[d] % 2); // parity
    }
    CHECK(total == rec.n);
}

} // namespace

TEST_CASE("trivial walks") {
    const auto zero = walk::simulate_walk(1, 0, 99);
    CHECK(zero.endpoint[0] == 0);
    CHECK(zero.max_excursion[0] == 0);
    CHECK(zero.steps[0] == 0);

    const auto one = walk::simulate_walk(1, 1, 7);
    CHECK(std::llabs(one.endpoint[0]) == 1);
    CHECK(one.max_excursion[0] == 1);

    const auto a = walk::simulate_walk(2, 10, 5);
    const auto b = walk::simulate_walk(2, 10, 5);
    CHECK(a.endpoint == b.endpoint);
    CHECK(a.steps == b.steps);
    CHECK(a.max_excursion == b.max_excursion);

    CHECK_THROWS_AS(walk::simulate_walk(0, 10, 1), std::invalid_argument);
}

TEST_CASE("structural invariants hold over a fuzz corpus") {
    std::uint64_t trial = 0;
    for (unsigned k : {1u, 2u, 3u, 5u}) {
        for (int it = 0; it < 25000; ++it) {
            const std::uint64_t n = core::derive_seed(4242, trial) % 200;
            check_structure(walk::simulate_walk(k, n, core::derive_seed(17, trial)));
            ++trial;
        }
    }
}

TEST_CASE("exhaustive n<=12 one-dimensional endpoint distribution is binomial") {
    for (std::uint64_t n = 0; n <= 12; ++n) {
        std::map<std::int64_t, std::uint64_t> hist;
        std::vector<unsigned> moves(n);
        for (std::uint64_t word = 0; word < (std::uint64_t{1} << n); ++word) {
            for (std::uint64_t b = 0; b < n; ++b) moves[b] = (word >> b) & 1;
            const auto rec = walk::replay_walk(1, moves);
            check_structure(rec);
            ++hist[rec.endpoint[0]];
        }
        // D = 2j - n with multiplicity C(n, j)
        for (std::uint64_t j = 0; j <= n; ++j) {
            const std::int64_t d = 2 * static_cast<std::int64_t>(j) - static_cast<std::int64_t>(n);
            double binom = std::exp(std::lgamma(double(n) + 1) - std::lgamma(double(j) + 1) -
                                    std::lgamma(double(n - j) + 1));
            CHECK(hist[d] == static_cast<std::uint64_t>(std::llround(binom)));
        }
    }
    CHECK_THROWS_AS(walk::replay_walk(1, std::vector<unsigned>{2}), std::invalid_argument);
}

TEST_CASE("batch endpoint mean tracks the exact binomial expectation") {
    const auto stats = walk::walk_batch(1, 10000, 1000, 0);
    const double exact = exact_abs_endpoint(10000);
    CHECK(exact == doctest::Approx(79.786).epsilon(1e-3));
    CHECK(std::abs(stats.dims[0].abs_endpoint.mean - exact) / exact < 0.05);
}

TEST_CASE("max excursion scales like sqrt(n)") {
    const auto small = walk::walk_batch(1, 2500, 1000, 11);
    const auto large = walk::walk_batch(1, 10000, 1000, 12);
    const double ratio = large.dims[0].max_excursion.mean / small.dims[0].max_excursion.mean;
    CHECK(ratio > 2.0 * 0.85);
    CHECK(ratio < 2.0 * 1.15);
}

TEST_CASE("small-endpoint trials stay near the exact binomial tail") {
    // |D| < sqrt(n)/8 at n=1e4; the exact probability is 0.10343, so the
    // empirical share is checked against the oracle, not a round number
    const std::uint64_t n = 10000;
    const std::size_t trials = 1000;
    std::vector<walk::WalkRecord> records;
    walk::walk_batch(1, n, trials, 21, &records);
    const double cut = std::sqrt(double(n)) / 8.0;
    std::size_t small = 0;
    for (const auto& rec : records)
        if (std::abs(double(rec.endpoint[0])) < cut) ++small;
    const double p = exact_small_endpoint_prob(n, cut);
    CHECK(p == doctest::Approx(0.10343).epsilon(1e-3));
    const double sigma = std::sqrt(p * (1 - p) / double(trials));
    CHECK(double(small) / double(trials) <= p + 3 * sigma);
}

TEST_CASE("step counts concentrate at n/k (binomial-tail oracle)") {
    // at n=1e5, k=4 the tail P(|m - n/k| >= 4 sqrt(n)) is ~1e-19 per
    // dimension (Hoeffding: 2 exp(-2 * 16n / n) = 2e-14 is already tiny),
    // so every trial must land inside the band
    const std::uint64_t n = 100000;
    const unsigned k = 4;
    const double band = 4.0 * std::sqrt(double(n));
    const double hoeffding = 2.0 * std::exp(-2.0 * band * band / double(n));
    CHECK(hoeffding < 1e-13);
    std::vector<walk::WalkRecord> records;
    walk::walk_batch(k, n, 50, 22, &records);
    for (const auto& rec : records)
        for (unsigned d = 0; d < k; ++d)
            CHECK(std::abs(double(rec.steps[d]) - double(n) / k) < band);
}
