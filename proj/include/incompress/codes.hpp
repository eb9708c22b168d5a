#ifndef INCOMPRESS_CODES_HPP
#define INCOMPRESS_CODES_HPP

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "incompress/bitstring.hpp"

// String/number bijection, the self-delimiting code ladder E0..E3 with
// streaming decoders, the pairing function <x,y> = E2(x)y, and the
// compressibility census over injective encoders.

namespace incompress::codes {

inline constexpr int kMaxCodeLevel = 3;

// n-th string in the length-increasing lexicographic order
//   eps, 0, 1, 00, 01, 10, 11, 000, ...
// i.e. n+1 written in binary with its leading 1 removed.
BitString nat_to_str(std::uint64_t n);

// Exact inverse of nat_to_str. Strings longer than 63 bits do not fit in
// a 64-bit result and raise std::overflow_error.
std::uint64_t str_to_nat(const BitString& s);

struct codec_error : std::runtime_error {
    int level;
    codec_error(int level_, const std::string& message)
        : std::runtime_error(message), level(level_) {}
};

// Code ladder:
//   E0(x) = 1^v 0            where v = str_to_nat(x)
//   Ei(x) = E(i-1)(nat_to_str(l(x))) x      for i > 0
// Each level is a prefix-free code. E1(eps) = E2(eps) = "0".
BitString encode(int level, const BitString& x);

struct Decoded {
    BitString value;
    BitString remainder;
};

// Reads exactly one level-codeword off the front of the stream and returns
// it with the untouched remainder; never inspects bits past the codeword.
// A truncated or malformed prefix raises codec_error naming the level.
Decoded decode(int level, const BitString& stream);

// <x,y> = E2(x) y, with unpair recovering both projections.
BitString pair_encode(const BitString& x, const BitString& y);
std::pair<BitString, BitString> unpair(const BitString& p);

struct CensusResult {
    std::uint64_t domain_size = 0; // 2^n
    std::uint64_t compressed = 0;  // inputs whose codeword is shorter than n-c bits
    double fraction = 0.0;
};

// Scans every length-n input, checks the encoder is injective on the
// domain, and reports the fraction of inputs mapped to codewords of
// length < n-c. Counting the available short codewords shows this
// fraction is < 2^-c for every injective encoder. A collision raises
// std::runtime_error naming the colliding pair.
CensusResult census(const std::function<BitString(const BitString&)>& encoder,
                    unsigned n, unsigned c, unsigned exhaustive_limit = 24);

// Injective encoder built from a seeded shuffle of all strings of length
// <= max_len (as their enumeration indices). Defined on any string of
// length <= max_len; outputs may be shorter or longer than the input.
class RandomInjection {
public:
    RandomInjection(unsigned max_len, std::uint64_t seed);
    BitString operator()(const BitString& x) const;
    unsigned max_len() const { return max_len_; }

private:
    unsigned max_len_;
    std::vector<std::uint64_t> perm_;
};

} // namespace incompress::codes

#endif
