#ifndef INCOMPRESS_RNG_HPP
#define INCOMPRESS_RNG_HPP

#include <array>
#include <cstdint>
#include <stdexcept>

#include "incompress/bitstring.hpp"

// Deterministic seeded randomness. Every experiment in this repo draws from
// the fixed generator below so identical seeds give bit-identical runs on
// any platform. In pseudocode, for porting:
//
//   splitmix64_mix(z):
//     z = (z xor (z >> 30)) * 0xbf58476d1ce4e5b9    (mod 2^64)
//     z = (z xor (z >> 27)) * 0x94d049bb133111eb    (mod 2^64)
//     return z xor (z >> 31)
//
//   derive_seed(base, trial) = splitmix64_mix(base + (trial+1) * 0x9e3779b97f4a7c15)
//
//   xoshiro256** state: s[0..3], filled with four successive SplitMix64
//   outputs of the seed (state += 0x9e3779b97f4a7c15; mix as above).
//   next():
//     result = rotl(s[1] * 5, 7) * 9
//     t = s[1] << 17
//     s[2] ^= s[0]; s[3] ^= s[1]; s[1] ^= s[2]; s[0] ^= s[3]; s[2] ^= t
//     s[3] = rotl(s[3], 45)
//
//   below(bound): rejection sampling, no modulo bias —
//     threshold = (2^64 - bound) mod bound
//     draw r = next() until r >= threshold; return r mod bound

namespace incompress::core {

constexpr std::uint64_t kGoldenGamma = 0x9e3779b97f4a7c15ULL;

// SplitMix64 finalizer (Steele/Lea/Flood). A bijection on 64-bit words.
constexpr std::uint64_t splitmix64_mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// One SplitMix64 step: advance the state by the golden gamma and mix.
constexpr std::uint64_t splitmix64_next(std::uint64_t& state) {
    state += kGoldenGamma;
    return splitmix64_mix(state);
}

// Per-trial stream seed. Injective in `trial` for a fixed base: the offset
// multiplies by an odd constant and the mix is a bijection, so distinct
// trials always get distinct seeds.
constexpr std::uint64_t derive_seed(std::uint64_t base, std::uint64_t trial) {
    return splitmix64_mix(base + (trial + 1) * kGoldenGamma);
}

// xoshiro256** (Blackman/Vigna) seeded through SplitMix64.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : seed_(seed) {
        std::uint64_t sm = seed;
        for (auto& word : state_) word = splitmix64_next(sm);
    }

    std::uint64_t next() {
        const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        ++draws_;
        return result;
    }

    // Uniform in [0, bound). Rejection sampling: the top partial block of
    // the 64-bit range is discarded so every residue is equally likely.
    std::uint64_t below(std::uint64_t bound) {
        if (bound == 0) throw std::invalid_argument("below(0)");
        const std::uint64_t threshold = (0 - bound) % bound; // 2^64 mod bound
        for (;;) {
            const std::uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }

    int bit() { return static_cast<int>(below(2)); }

    std::uint64_t seed() const { return seed_; }
    std::uint64_t draw_count() const { return draws_; }

private:
    static constexpr std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }

    std::array<std::uint64_t, 4> state_{};
    std::uint64_t seed_ = 0;
    std::uint64_t draws_ = 0;
};

inline BitString random_bits(Rng& rng, std::size_t n) {
    BitString out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(rng.bit());
    return out;
}

} // namespace incompress::core

#endif
