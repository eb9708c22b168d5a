#ifndef INCOMPRESS_LCS_HPP
#define INCOMPRESS_LCS_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <utility>

#include "incompress/bitstring.hpp"
#include "incompress/stats.hpp"

// Exact and greedy common-subsequence algorithms over binary strings, two
// lossless re-encodings driven by them, and Monte Carlo estimation of the
// expected LCS ratio for uniform random pairs.

namespace incompress::lcs {

// One longest common subsequence via the standard DP table. Reconstruction
// is deterministic: diagonal on equal bits, otherwise the direction with
// the larger table value, preferring the s side on ties.
BitString lcs_dp(const BitString& s, const BitString& t);

// LCS length only, two rolling rows. Agrees with lcs_dp(s,t).size().
std::size_t lcs_length(const BitString& s, const BitString& t);

// Greedy matcher over equal-length strings: on a match both cursors
// advance and the bit joins u; on a mismatch the t cursor skips ahead when
// s's bit is 0, otherwise the s cursor skips. Output is always a common
// subsequence, never longer than the true LCS.
BitString zero_major(const BitString& s, const BitString& t);

struct trace_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Lossless trace of a zero_major run over a pair of length-n strings.
//   y — one bit per comparison: 1 mismatch, 0 match.
//   z — one bit per match, then the unconsumed tail w of the surviving
//       string. A match ending a mismatch run stores the run's direction
//       (0: the s cursor had advanced, 1: the t cursor) — its own bit
//       value is forced to 0 by the run structure. Any other match stores
//       its bit value.
// A trailing mismatch run that starts with both cursors equal is the one
// shape where the exhausted side cannot be inferred; w's first bit is
// forced to 0 there, so that slot stores the direction bit instead.
// Always l(y) + l(z) = 2n and #zeros(y) = l(u).
struct TraceEncoding {
    BitString y;
    BitString z;
    std::size_t n = 0;
};

TraceEncoding trace_encode(const BitString& s, const BitString& t);

// Exact inverse of trace_encode; raises trace_error("undecodable trace...")
// on any structurally inconsistent (y, z, n).
std::pair<BitString, BitString> trace_decode(const TraceEncoding& enc);

// Length-preserving re-encoding of s against a subsequence u of s. The
// greedy left-to-right alignment splits s into gap/match blocks
//   s = a_1 u_1 a_2 u_2 ... a_m u_m s'
// where each gap a_i is a run of the bit complementary to u_i; the block
// becomes 0^{l(a_i)} 1 and the tail s' is copied verbatim.
struct SubseqEncoding {
    BitString encoded;
    std::size_t m = 0; // length of u
};

SubseqEncoding subseq_encode(const BitString& s, const BitString& u);
BitString subseq_decode(const SubseqEncoding& enc, const BitString& u);

enum class Algorithm { dp, zero_major };

const char* algorithm_name(Algorithm alg);
Algorithm algorithm_from_name(const std::string& name);

struct McSummary {
    std::size_t n = 0;
    std::size_t trials = 0;
    Algorithm algorithm = Algorithm::dp;
    core::TrialSummary ratio; // l(u)/n per trial
};

// trials independent uniform pairs of length n; trial t draws its stream
// from derive_seed(seed, t) (s first, then t), so runs are reproducible
// and trials are independent. Aggregation is in trial order.
McSummary lcs_mc(std::size_t n, std::size_t trials, std::uint64_t seed, Algorithm alg);

// Every ordered pair of length-n strings exactly once (2^{2n} trials);
// the mean ratio is then the exact average. n is capped at 8.
McSummary lcs_exhaustive(std::size_t n, Algorithm alg);

} // namespace incompress::lcs

#endif
