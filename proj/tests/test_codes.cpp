#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "incompress/codes.hpp"
#include "incompress/rng.hpp"

using namespace incompress;
using codes::decode;
using codes::encode;
using codes::nat_to_str;
using codes::str_to_nat;

namespace {

BitString bits(const char* text) { return BitString::from_string(text); }

// every string of length <= max_len, by enumeration index
std::vector<BitString> all_strings_up_to(unsigned max_len) {
    std::vector<BitString> out;
    const std::uint64_t universe = (std::uint64_t{1} << (max_len + 1)) - 1;
    out.reserve(universe);
    for (std::uint64_t v = 0; v < universe; ++v) out.push_back(nat_to_str(v));
    return out;
}

} // namespace

TEST_CASE("string/number bijection walks the enumeration") {
    CHECK(nat_to_str(0) == bits("eps"));
    CHECK(nat_to_str(1) == bits("0"));
    CHECK(nat_to_str(2) == bits("1"));
    CHECK(nat_to_str(3) == bits("00"));
    CHECK(nat_to_str(4) == bits("01"));
    CHECK(nat_to_str(5) == bits("10"));
    CHECK(nat_to_str(6) == bits("11"));
    CHECK(nat_to_str(7) == bits("000"));

    CHECK(str_to_nat(bits("11")) == 6);
    CHECK(str_to_nat(bits("eps")) == 0);
    CHECK(str_to_nat(bits("000")) == 7);
}

TEST_CASE("bijection roundtrips: numbers to 1e6 and strings to length 16") {
    for (std::uint64_t n = 0; n <= 1000000; ++n) CHECK(str_to_nat(nat_to_str(n)) == n);
    // nat_to_str . str_to_nat = identity on all strings of length <= 16:
    // indices 0 .. 2^17-2 enumerate exactly those strings
    const std::uint64_t universe = (std::uint64_t{1} << 17) - 1;
    for (std::uint64_t v = 0; v < universe; ++v) {
        const BitString s = nat_to_str(v);
        CHECK(s.size() <= 16);
        CHECK(nat_to_str(str_to_nat(s)) == s);
    }
    CHECK_THROWS_AS(str_to_nat(BitString::zeros(64)), std::overflow_error);
}

TEST_CASE("code ladder encodes the worked values") {
    CHECK(encode(0, nat_to_str(3)) == bits("1110")); // 1^3 0
    CHECK(encode(1, bits("101")) == bits("1110101"));
    CHECK(encode(1, bits("101")).size() == 2 * 3 + 1);
    CHECK(encode(2, bits("101")) == bits("11000101"));
    CHECK(encode(2, bits("101")).size() == 3 + 2 * 2 + 1);
    // empty-string edge cases forced by the conventions
    CHECK(encode(1, bits("eps")) == bits("0"));
    CHECK(encode(2, bits("eps")) == bits("0"));
}

TEST_CASE("decode inverts encode and leaves the remainder untouched") {
    auto d = decode(1, bits("1110101") + bits("01"));
    CHECK(d.value == bits("101"));
    CHECK(d.remainder == bits("01"));

    auto d2 = decode(2, bits("11000101"));
    CHECK(d2.value == bits("101"));
    CHECK(d2.remainder.empty());

    auto d0 = decode(0, bits("0"));
    CHECK(d0.value == bits("eps"));
    CHECK(d0.remainder.empty());
}

TEST_CASE("malformed prefixes raise codec_error naming the level") {
    CHECK_THROWS_AS(decode(0, bits("111")), codes::codec_error); // no stop bit
    try {
        decode(0, bits("1111"));
        FAIL("expected codec_error");
    } catch (const codes::codec_error& e) {
        CHECK(e.level == 0);
        CHECK(std::string(e.what()).find("invalid codeword") != std::string::npos);
    }
    try {
        decode(2, bits("1100010")); // payload one bit short
        FAIL("expected codec_error");
    } catch (const codes::codec_error& e) {
        CHECK(e.level == 2);
    }
    CHECK_THROWS_AS(decode(1, bits("eps")), codes::codec_error);
}

TEST_CASE("roundtrip with random remainders, all levels, lengths <= 10") {
    core::Rng rng(2024);
    for (int level = 0; level <= codes::kMaxCodeLevel; ++level) {
        for (const BitString& x : all_strings_up_to(10)) {
            BitString r = core::random_bits(rng, rng.below(6));
            auto d = decode(level, encode(level, x) + r);
            CHECK(d.value == x);
            CHECK(d.remainder == r);
        }
    }
}

TEST_CASE("each level is prefix-free over inputs of length <= 10") {
    for (int level = 0; level <= codes::kMaxCodeLevel; ++level) {
        std::vector<BitString> words;
        for (const BitString& x : all_strings_up_to(10)) words.push_back(encode(level, x));
        std::sort(words.begin(), words.end());
        // a prefix relation, if any, survives between sorted neighbours
        for (std::size_t i = 0; i + 1 < words.size(); ++i)
            CHECK_FALSE(words[i].is_prefix_of(words[i + 1]));
    }
}

TEST_CASE("length laws hold exactly for E1/E2 and sharply for E3") {
    for (const BitString& x : all_strings_up_to(12)) {
        const std::size_t l = x.size();
        CHECK(encode(1, x).size() == 2 * l + 1);
        CHECK(encode(2, x).size() == l + 2 * nat_to_str(l).size() + 1);
        if (l >= 1) {
            const double bound =
                l + std::log2(l + 1.0) + 2 * std::log2(std::log2(l + 1.0) + 1.0) + 1.0;
            CHECK(static_cast<double>(encode(3, x).size()) <= bound + 1e-9);
        }
    }
    // the loose form l + log2 l + 2 log2 log2 l + 1 where it genuinely holds
    for (std::size_t l : {4u, 5u, 6u, 11u, 12u, 16u, 40u, 126u, 400u, 1000u}) {
        const BitString x = BitString::zeros(l);
        const double loose = l + std::log2(double(l)) + 2 * std::log2(std::log2(double(l))) + 1.0;
        CHECK(static_cast<double>(encode(3, x).size()) <= loose + 1e-9);
    }
}

TEST_CASE("decode accepts exactly codeword-prefixed streams") {
    core::Rng rng(2025);
    std::size_t accepted = 0;
    for (int it = 0; it < 20000; ++it) {
        const int level = static_cast<int>(rng.below(4));
        const BitString stream = core::random_bits(rng, rng.below(24));
        try {
            const auto d = decode(level, stream);
            CHECK(encode(level, d.value) + d.remainder == stream);
            ++accepted;
        } catch (const codes::codec_error&) {
            // stream does not start with a valid codeword, fine
        }
    }
    CHECK(accepted > 0);
}

TEST_CASE("pairing function and its projections") {
    CHECK(codes::pair_encode(bits("0"), bits("1")) == bits("10001"));
    auto [x, y] = codes::unpair(bits("10001"));
    CHECK(x == bits("0"));
    CHECK(y == bits("1"));
    CHECK(codes::pair_encode(bits("eps"), bits("1101")) == bits("0") + bits("1101"));

    core::Rng rng(9);
    for (int i = 0; i < 2000; ++i) {
        BitString a = core::random_bits(rng, rng.below(12));
        BitString b = core::random_bits(rng, rng.below(12));
        auto [pa, pb] = codes::unpair(codes::pair_encode(a, b));
        CHECK(pa == a);
        CHECK(pb == b);
    }
    CHECK_THROWS_AS(codes::unpair(bits("111")), codes::codec_error);
}

TEST_CASE("census: length-preserving encoders never compress") {
    auto e1 = [](const BitString& x) { return encode(1, x); };
    auto res = codes::census(e1, 10, 1);
    CHECK(res.compressed == 0);
    CHECK(res.fraction == 0.0);

    auto identity = [](const BitString& x) { return x; };
    CHECK(codes::census(identity, 12, 1).fraction == 0.0);
}

TEST_CASE("census bound holds for seeded random injections") {
    for (std::uint64_t seed : {1ULL, 2ULL, 3ULL}) {
        for (unsigned n : {8u, 12u, 16u}) {
            codes::RandomInjection inj(16, seed);
            for (unsigned c = 1; c <= 8; ++c) {
                auto res = codes::census([&](const BitString& x) { return inj(x); }, n, c);
                CHECK(res.fraction < std::pow(2.0, -double(c)));
            }
        }
    }
}

TEST_CASE("census rejects non-injective encoders, naming the collision") {
    auto constant = [](const BitString&) { return bits("0"); };
    CHECK_THROWS_WITH_AS(codes::census(constant, 4, 1),
                         "census: encoder is not injective, inputs 0000 and 0001 collide on 0",
                         std::runtime_error);
    CHECK_THROWS_AS(codes::census([](const BitString& x) { return x; }, 25, 1),
                    std::invalid_argument);
}
