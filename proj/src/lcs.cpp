#include "incompress/lcs.hpp"

#include <algorithm>
#include <vector>

#include "incompress/rng.hpp"

namespace incompress::lcs {

BitString lcs_dp(const BitString& s, const BitString& t) {
    const std::size_t m = s.size(), n = t.size();
    // full table, row-major (m+1) x (n+1)
    std::vector<std::uint32_t> dp((m + 1) * (n + 1), 0);
    auto at = [&](std::size_t i, std::size_t j) -> std::uint32_t& { return dp[i * (n + 1) + j]; };
    for (std::size_t i = 1; i <= m; ++i)
        for (std::size_t j = 1; j <= n; ++j)
            at(i, j) = s[i - 1] == t[j - 1] ? at(i - 1, j - 1) + 1
                                            : std::max(at(i - 1, j), at(i, j - 1));

    std::vector<int> rev;
    rev.reserve(at(m, n));
    std::size_t i = m, j = n;
    while (i > 0 && j > 0) {
        if (s[i - 1] == t[j - 1]) {
            rev.push_back(s[i - 1]);
            --i;
            --j;
        } else if (at(i - 1, j) >= at(i, j - 1)) {
            --i; // tie prefers the s side
        } else {
            --j;
        }
    }
    BitString u;
    for (auto it = rev.rbegin(); it != rev.rend(); ++it) u.push_back(*it);
    return u;
}

std::size_t lcs_length(const BitString& s, const BitString& t) {
    const std::size_t n = t.size();
    std::vector<std::uint32_t> prev(n + 1, 0), cur(n + 1, 0);
    for (std::size_t i = 1; i <= s.size(); ++i) {
        const int si = s[i - 1];
        for (std::size_t j = 1; j <= n; ++j)
            cur[j] = si == t[j - 1] ? prev[j - 1] + 1 : std::max(prev[j], cur[j - 1]);
        std::swap(prev, cur);
    }
    return prev[n];
}

BitString zero_major(const BitString& s, const BitString& t) {
    if (s.size() != t.size()) throw std::invalid_argument("zero_major requires equal lengths");
    const std::size_t n = s.size();
    BitString u;
    std::size_t i = 0, j = 0;
    while (i < n && j < n) {
        if (s[i] == t[j]) {
            u.push_back(s[i]);
            ++i;
            ++j;
        } else if (s[i] == 0) {
            ++j;
        } else {
            ++i;
        }
    }
    return u;
}

TraceEncoding trace_encode(const BitString& s, const BitString& t) {
    if (s.size() != t.size()) throw std::invalid_argument("trace_encode requires equal lengths");
    const std::size_t n = s.size();

    BitString y, z;
    std::size_t i = 0, j = 0;
    enum class Prev { none, match, mismatch };
    Prev prev = Prev::none;
    int run_dir = -1;              // 0: s cursor advanced, 1: t cursor advanced
    bool run_started_equal = false; // cursors were equal when the current run began

    while (i < n && j < n) {
        if (s[i] == t[j]) {
            y.push_back(0);
            if (prev == Prev::mismatch) {
                if (s[i] != 0)
                    throw std::logic_error("trace_encode: match after a mismatch must have bit 0");
                z.push_back(run_dir);
            } else {
                z.push_back(s[i]);
            }
            ++i;
            ++j;
            prev = Prev::match;
        } else {
            y.push_back(1);
            if (prev != Prev::mismatch) run_started_equal = (i == j);
            if (s[i] == 0) {
                run_dir = 1;
                ++j;
            } else {
                run_dir = 0;
                ++i;
            }
            prev = Prev::mismatch;
        }
    }

    // unconsumed tail of the surviving string
    BitString w = i >= n ? t.substr(j) : s.substr(i);
    if (prev == Prev::mismatch && run_started_equal) {
        // ambiguous trailing run: w's first bit is the stuck bit (always 0);
        // store the run direction in its place
        if (w.empty() || w[0] != 0)
            throw std::logic_error("trace_encode: trailing-run tail must start with 0");
        w.set(0, run_dir);
    }
    z.append(w);
    return {std::move(y), std::move(z), n};
}

std::pair<BitString, BitString> trace_decode(const TraceEncoding& enc) {
    const std::size_t n = enc.n;
    const BitString& y = enc.y;
    const BitString& z = enc.z;
    if (y.size() + z.size() != 2 * n) throw trace_error("undecodable trace: l(y)+l(z) != 2n");

    std::vector<int> sv(n, -1), tv(n, -1);
    std::size_t i = 0, j = 0, yp = 0, zp = 0;
    auto take_z = [&]() -> int {
        if (zp >= z.size()) throw trace_error("undecodable trace: z exhausted");
        return z[zp++];
    };
    auto fill = [](std::vector<int>& v, std::size_t from, std::size_t count, int bit) {
        for (std::size_t p = from; p < from + count; ++p) v[p] = bit;
    };

    bool exhausted = (n == 0);
    while (yp < y.size()) {
        if (exhausted) throw trace_error("undecodable trace: comparisons continue past the end");
        if (y[yp] == 0) {
            // match outside a run: stores its bit value
            const int v = take_z();
            sv[i++] = v;
            tv[j++] = v;
            ++yp;
        } else {
            std::size_t r = 0;
            while (yp < y.size() && y[yp] == 1) {
                ++r;
                ++yp;
            }
            if (yp < y.size()) {
                // run ended by a match; its z slot is the run direction and
                // the matched bit value is forced to 0
                const int dir = take_z();
                if (dir == 0) {
                    if (i + r >= n) throw trace_error("undecodable trace: run overruns s");
                    fill(sv, i, r, 1);
                    i += r;
                } else {
                    if (j + r >= n) throw trace_error("undecodable trace: run overruns t");
                    fill(tv, j, r, 1);
                    j += r;
                }
                sv[i++] = 0;
                tv[j++] = 0;
                ++yp;
            } else {
                // trailing run: the advancing side exhausts its string; the
                // other side's first tail bit is the stuck bit, forced to 0
                const bool s_side = (i + r == n);
                const bool t_side = (j + r == n);
                if (!s_side && !t_side)
                    throw trace_error("undecodable trace: trailing run exhausts neither string");
                const int slot = take_z();
                int dir;
                if (s_side && t_side) {
                    dir = slot; // w's forced-0 slot carries the direction
                } else {
                    dir = s_side ? 0 : 1;
                    if (slot != 0) throw trace_error("undecodable trace: tail must start with 0");
                }
                if (dir == 0) {
                    fill(sv, i, r, 1);
                    i = n;
                    tv[j++] = 0;
                } else {
                    fill(tv, j, r, 1);
                    j = n;
                    sv[i++] = 0;
                }
            }
        }
        if (i >= n || j >= n) exhausted = true;
    }

    // copy the rest of the tail w verbatim
    if (!exhausted) throw trace_error("undecodable trace: comparisons end before either string");
    while (i < n) sv[i++] = take_z();
    while (j < n) tv[j++] = take_z();
    if (zp != z.size()) throw trace_error("undecodable trace: z has leftover bits");

    BitString s, t;
    for (std::size_t p = 0; p < n; ++p) {
        if (sv[p] < 0 || tv[p] < 0) throw trace_error("undecodable trace: unresolved position");
        s.push_back(sv[p]);
        t.push_back(tv[p]);
    }
    return {std::move(s), std::move(t)};
}

SubseqEncoding subseq_encode(const BitString& s, const BitString& u) {
    BitString out;
    std::size_t pos = 0;
    for (std::size_t idx = 0; idx < u.size(); ++idx) {
        const std::size_t start = pos;
        while (pos < s.size() && s[pos] != u[idx]) ++pos;
        if (pos >= s.size()) throw std::invalid_argument("subseq_encode: u is not a subsequence of s");
        for (std::size_t g = start; g < pos; ++g) out.push_back(0);
        out.push_back(1);
        ++pos;
    }
    out.append(s.substr(pos));
    return {std::move(out), u.size()};
}

BitString subseq_decode(const SubseqEncoding& enc, const BitString& u) {
    if (enc.m != u.size())
        throw std::invalid_argument("subseq_decode: u length does not match the encoding");
    const BitString& e = enc.encoded;
    BitString s;
    std::size_t pos = 0;
    for (std::size_t idx = 0; idx < u.size(); ++idx) {
        std::size_t zeros = 0;
        while (pos < e.size() && e[pos] == 0) {
            ++zeros;
            ++pos;
        }
        if (pos >= e.size())
            throw std::invalid_argument("subseq_decode: fewer than m ones in encoded string");
        ++pos; // the 1 marker
        for (std::size_t g = 0; g < zeros; ++g) s.push_back(1 - u[idx]);
        s.push_back(u[idx]);
    }
    s.append(e.substr(pos));
    return s;
}

const char* algorithm_name(Algorithm alg) {
    return alg == Algorithm::dp ? "dp" : "zero_major";
}

Algorithm algorithm_from_name(const std::string& name) {
    if (name == "dp") return Algorithm::dp;
    if (name == "zero_major" || name == "zm") return Algorithm::zero_major;
    throw std::invalid_argument("unknown lcs algorithm: " + name);
}

namespace {

double ratio_for(const BitString& s, const BitString& t, Algorithm alg) {
    const std::size_t len =
        alg == Algorithm::dp ? lcs_length(s, t) : zero_major(s, t).size();
    return static_cast<double>(len) / static_cast<double>(s.size());
}

} // namespace

McSummary lcs_mc(std::size_t n, std::size_t trials, std::uint64_t seed, Algorithm alg) {
    if (n < 1) throw std::invalid_argument("lcs_mc: n must be >= 1");
    if (trials < 1) throw std::invalid_argument("lcs_mc: trials must be >= 1");
    std::vector<double> ratios;
    ratios.reserve(trials);
    for (std::size_t trial = 0; trial < trials; ++trial) {
        core::Rng rng(core::derive_seed(seed, trial));
        const BitString s = core::random_bits(rng, n);
        const BitString t = core::random_bits(rng, n);
        ratios.push_back(ratio_for(s, t, alg));
    }
    McSummary out;
    out.n = n;
    out.trials = trials;
    out.algorithm = alg;
    out.ratio = core::summarize(ratios);
    return out;
}

McSummary lcs_exhaustive(std::size_t n, Algorithm alg) {
    if (n < 1 || n > 8) throw std::invalid_argument("lcs_exhaustive: n must be in 1..8");
    const std::uint64_t count = std::uint64_t{1} << n;
    std::vector<double> ratios;
    ratios.reserve(static_cast<std::size_t>(count * count));
    for (std::uint64_t a = 0; a < count; ++a) {
        BitString s;
        for (int b = static_cast<int>(n) - 1; b >= 0; --b) s.push_back(static_cast<int>((a >> b) & 1));
        for (std::uint64_t bword = 0; bword < count; ++bword) {
            BitString t;
            for (int b = static_cast<int>(n) - 1; b >= 0; --b)
                t.push_back(static_cast<int>((bword >> b) & 1));
            ratios.push_back(ratio_for(s, t, alg));
        }
    }
    McSummary out;
    out.n = n;
    out.trials = ratios.size();
    out.algorithm = alg;
    out.ratio = core::summarize(ratios);
    return out;
}

} // namespace incompress::lcs
