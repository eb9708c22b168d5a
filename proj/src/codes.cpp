#include "incompress/codes.hpp"

#include <unordered_map>

#include "incompress/rng.hpp"

namespace incompress::codes {

BitString nat_to_str(std::uint64_t n) {
    // n+1 in binary, leading 1 dropped. n+1 >= 1 so the bit width is
    // well defined; for n = 2^64-1 the +1 wraps, so reject it.
    if (n == UINT64_MAX) throw std::overflow_error("nat_to_str: index too large");
    const std::uint64_t v = n + 1;
    int width = 0;
    while ((v >> width) > 1) ++width;
    BitString out;
    for (int i = width - 1; i >= 0; --i) out.push_back(static_cast<int>((v >> i) & 1));
    return out;
}

std::uint64_t str_to_nat(const BitString& s) {
    if (s.size() > 63) throw std::overflow_error("str_to_nat: string longer than 63 bits");
    std::uint64_t v = 1;
    for (std::size_t i = 0; i < s.size(); ++i) v = (v << 1) | static_cast<std::uint64_t>(s[i]);
    return v - 1;
}

BitString encode(int level, const BitString& x) {
    if (level < 0 || level > kMaxCodeLevel) throw std::invalid_argument("code level must be in 0..3");
    if (level == 0) {
        const std::uint64_t v = str_to_nat(x);
        BitString out = BitString::ones(v);
        out.push_back(0);
        return out;
    }
    BitString out = encode(level - 1, nat_to_str(x.size()));
    out.append(x);
    return out;
}

Decoded decode(int level, const BitString& stream) {
    if (level < 0 || level > kMaxCodeLevel) throw std::invalid_argument("code level must be in 0..3");
    if (level == 0) {
        std::size_t ones = 0;
        while (ones < stream.size() && stream[ones] == 1) ++ones;
        if (ones == stream.size())
            throw codec_error(0, "invalid codeword (E0): no terminating 0");
        return {nat_to_str(ones), stream.substr(ones + 1)};
    }
    Decoded len_part = decode(level - 1, stream);
    const std::uint64_t len = str_to_nat(len_part.value);
    if (len_part.remainder.size() < len)
        throw codec_error(level, "invalid codeword (E" + std::to_string(level) + "): truncated payload");
    return {len_part.remainder.substr(0, len), len_part.remainder.substr(len)};
}

BitString pair_encode(const BitString& x, const BitString& y) {
    BitString out = encode(2, x);
    out.append(y);
    return out;
}

std::pair<BitString, BitString> unpair(const BitString& p) {
    Decoded d = decode(2, p);
    return {std::move(d.value), std::move(d.remainder)};
}

CensusResult census(const std::function<BitString(const BitString&)>& encoder,
                    unsigned n, unsigned c, unsigned exhaustive_limit) {
    if (n > exhaustive_limit)
        throw std::invalid_argument("census: n exceeds the exhaustive limit");
    if (c == 0) throw std::invalid_argument("census: c must be positive");

    CensusResult res;
    res.domain_size = std::uint64_t{1} << n;

    std::unordered_map<BitString, std::uint64_t> seen;
    seen.reserve(static_cast<std::size_t>(res.domain_size));

    for (std::uint64_t word = 0; word < res.domain_size; ++word) {
        BitString x;
        for (int b = static_cast<int>(n) - 1; b >= 0; --b)
            x.push_back(static_cast<int>((word >> b) & 1));
        BitString coded = encoder(x);
        auto [it, inserted] = seen.emplace(coded, word);
        if (!inserted) {
            BitString prev;
            for (int b = static_cast<int>(n) - 1; b >= 0; --b)
                prev.push_back(static_cast<int>((it->second >> b) & 1));
            throw std::runtime_error("census: encoder is not injective, inputs " + prev.display() +
                                     " and " + x.display() + " collide on " + coded.display());
        }
        if (coded.size() + c < n) ++res.compressed;
    }
    res.fraction = static_cast<double>(res.compressed) / static_cast<double>(res.domain_size);
    return res;
}

RandomInjection::RandomInjection(unsigned max_len, std::uint64_t seed) : max_len_(max_len) {
    if (max_len > 24) throw std::invalid_argument("RandomInjection: max_len too large to tabulate");
    const std::uint64_t universe = (std::uint64_t{1} << (max_len + 1)) - 1; // all strings of length <= max_len
    perm_.resize(universe);
    for (std::uint64_t i = 0; i < universe; ++i) perm_[i] = i;
    core::Rng rng(seed);
    for (std::uint64_t i = universe - 1; i > 0; --i) {
        const std::uint64_t j = rng.below(i + 1);
        std::swap(perm_[i], perm_[j]);
    }
}

BitString RandomInjection::operator()(const BitString& x) const {
    if (x.size() > max_len_)
        throw std::invalid_argument("RandomInjection: input longer than max_len");
    return nat_to_str(perm_[str_to_nat(x)]);
}

} // namespace incompress::codes
