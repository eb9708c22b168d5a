#include "incompress/mesh.hpp"

#include <cmath>
#include <vector>

#include "incompress/rng.hpp"

namespace incompress::mesh {

const char* scheme_name(Scheme s) {
    switch (s) {
        case Scheme::row_major: return "row_major";
        case Scheme::boustrophedon: return "boustrophedon";
        case Scheme::morton: return "morton";
        case Scheme::hilbert: return "hilbert";
    }
    return "?";
}

Scheme scheme_from_name(const std::string& name) {
    if (name == "row_major") return Scheme::row_major;
    if (name == "boustrophedon") return Scheme::boustrophedon;
    if (name == "morton") return Scheme::morton;
    if (name == "hilbert") return Scheme::hilbert;
    throw std::invalid_argument("unknown scheme: " + name);
}

const char* metric_name(Metric m) {
    switch (m) {
        case Metric::euclidean: return "euclidean";
        case Metric::manhattan: return "manhattan";
        case Metric::chebyshev: return "chebyshev";
    }
    return "?";
}

Metric metric_from_name(const std::string& name) {
    if (name == "euclidean") return Metric::euclidean;
    if (name == "manhattan") return Metric::manhattan;
    if (name == "chebyshev") return Metric::chebyshev;
    throw std::invalid_argument("unknown metric: " + name);
}

IndexingScheme::IndexingScheme(Scheme scheme_, unsigned n_) : scheme(scheme_), n(n_) {
    if (n == 0) throw std::invalid_argument("mesh side must be positive");
    if ((scheme == Scheme::morton || scheme == Scheme::hilbert) && (n & (n - 1)) != 0)
        throw std::invalid_argument(std::string(scheme_name(scheme)) +
                                    " needs a power-of-two side, got n=" + std::to_string(n));
}

namespace {

// standard Hilbert quadrant transform
void hilbert_rot(std::uint64_t s, std::uint64_t& x, std::uint64_t& y, std::uint64_t rx,
                 std::uint64_t ry) {
    if (ry == 0) {
        if (rx == 1) {
            x = s - 1 - x;
            y = s - 1 - y;
        }
        std::swap(x, y);
    }
}

Cell hilbert_d2cell(unsigned n, std::uint64_t d) {
    std::uint64_t x = 0, y = 0, t = d;
    for (std::uint64_t s = 1; s < n; s <<= 1) {
        const std::uint64_t rx = 1 & (t / 2);
        const std::uint64_t ry = 1 & (t ^ rx);
        hilbert_rot(s, x, y, rx, ry);
        x += s * rx;
        y += s * ry;
        t >>= 2;
    }
    return {static_cast<unsigned>(y), static_cast<unsigned>(x)}; // x is the column
}

std::uint64_t hilbert_cell2d(unsigned n, Cell c) {
    std::uint64_t x = c.col, y = c.row, d = 0;
    for (std::uint64_t s = n / 2; s > 0; s >>= 1) {
        const std::uint64_t rx = (x & s) > 0 ? 1 : 0;
        const std::uint64_t ry = (y & s) > 0 ? 1 : 0;
        d += s * s * ((3 * rx) ^ ry);
        hilbert_rot(n, x, y, rx, ry); // flip against the full side
    }
    return d;
}

std::uint64_t interleave_even(std::uint64_t v) {
    std::uint64_t out = 0;
    for (unsigned b = 0; b < 32; ++b) out |= ((v >> b) & 1) << (2 * b);
    return out;
}

std::uint64_t deinterleave_even(std::uint64_t v) {
    std::uint64_t out = 0;
    for (unsigned b = 0; b < 32; ++b) out |= ((v >> (2 * b)) & 1) << b;
    return out;
}

} // namespace

Cell index_to_cell(const IndexingScheme& scheme, std::uint64_t i) {
    if (i < 1 || i > scheme.cells())
        throw std::out_of_range("index " + std::to_string(i) + " outside 1..n^2");
    const std::uint64_t q = i - 1;
    const unsigned n = scheme.n;
    switch (scheme.scheme) {
        case Scheme::row_major:
            return {static_cast<unsigned>(q / n), static_cast<unsigned>(q % n)};
        case Scheme::boustrophedon: {
            const unsigned row = static_cast<unsigned>(q / n);
            const unsigned c = static_cast<unsigned>(q % n);
            return {row, row % 2 == 0 ? c : n - 1 - c};
        }
        case Scheme::morton:
            return {static_cast<unsigned>(deinterleave_even(q >> 1)),
                    static_cast<unsigned>(deinterleave_even(q))};
        case Scheme::hilbert:
            return hilbert_d2cell(n, q);
    }
    throw std::logic_error("unreachable");
}

std::uint64_t cell_to_index(const IndexingScheme& scheme, Cell cell) {
    const unsigned n = scheme.n;
    if (cell.row >= n || cell.col >= n)
        throw std::out_of_range("cell (" + std::to_string(cell.row) + "," +
                                std::to_string(cell.col) + ") outside the mesh");
    switch (scheme.scheme) {
        case Scheme::row_major:
            return static_cast<std::uint64_t>(cell.row) * n + cell.col + 1;
        case Scheme::boustrophedon: {
            const unsigned c = cell.row % 2 == 0 ? cell.col : n - 1 - cell.col;
            return static_cast<std::uint64_t>(cell.row) * n + c + 1;
        }
        case Scheme::morton:
            return interleave_even(cell.col) + (interleave_even(cell.row) << 1) + 1;
        case Scheme::hilbert:
            return hilbert_cell2d(n, cell) + 1;
    }
    throw std::logic_error("unreachable");
}

double distance(Metric metric, Cell a, Cell b) {
    const double dr = a.row > b.row ? a.row - b.row : b.row - a.row;
    const double dc = a.col > b.col ? a.col - b.col : b.col - a.col;
    switch (metric) {
        case Metric::euclidean: return std::sqrt(dr * dr + dc * dc);
        case Metric::manhattan: return dr + dc;
        case Metric::chebyshev: return dr > dc ? dr : dc;
    }
    throw std::logic_error("unreachable");
}

namespace {

std::vector<Cell> tabulate(const IndexingScheme& scheme) {
    std::vector<Cell> cells(scheme.cells() + 1);
    for (std::uint64_t i = 1; i <= scheme.cells(); ++i) cells[i] = index_to_cell(scheme, i);
    return cells;
}

} // namespace

DilationResult worst_dilation(const IndexingScheme& scheme, Metric metric,
                              unsigned exhaustive_limit) {
    if (scheme.n > exhaustive_limit)
        throw std::invalid_argument("side " + std::to_string(scheme.n) +
                                    " exceeds the exhaustive limit " +
                                    std::to_string(exhaustive_limit) +
                                    "; use the sampled scan instead");
    const auto cells = tabulate(scheme);
    const std::uint64_t N = scheme.cells();
    DilationResult best;
    for (std::uint64_t i = 1; i <= N; ++i) {
        for (std::uint64_t j = i + 1; j <= N; ++j) {
            const double d = distance(metric, cells[i], cells[j]);
            const double v = (d + 1) * (d + 1) / static_cast<double>(j - i);
            if (v > best.c_max) {
                best.c_max = v;
                best.witness_i = i;
                best.witness_j = j;
            }
        }
    }
    return best;
}

DilationResult worst_dilation_sampled(const IndexingScheme& scheme, Metric metric,
                                      std::uint64_t samples, std::uint64_t seed) {
    if (samples == 0) throw std::invalid_argument("sampled scan needs at least one pair");
    core::Rng rng(seed);
    const std::uint64_t N = scheme.cells();
    DilationResult best;
    for (std::uint64_t k = 0; k < samples; ++k) {
        std::uint64_t i = 1 + rng.below(N);
        std::uint64_t j = 1 + rng.below(N);
        while (j == i) j = 1 + rng.below(N);
        if (i > j) std::swap(i, j);
        const double d = distance(metric, index_to_cell(scheme, i), index_to_cell(scheme, j));
        const double v = (d + 1) * (d + 1) / static_cast<double>(j - i);
        if (v > best.c_max) {
            best.c_max = v;
            best.witness_i = i;
            best.witness_j = j;
        }
    }
    return best;
}

std::array<CornerFraction, 4> corner_locality(const IndexingScheme& scheme, Metric metric,
                                              double c0, unsigned exhaustive_limit) {
    if (scheme.n > exhaustive_limit)
        throw std::invalid_argument("side " + std::to_string(scheme.n) +
                                    " exceeds the exhaustive limit " +
                                    std::to_string(exhaustive_limit));
    const auto cells = tabulate(scheme);
    const std::uint64_t N = scheme.cells();
    const unsigned last = scheme.n - 1;
    std::array<CornerFraction, 4> out{{{"nw", {0, 0}, 0, 0.0},
                                       {"ne", {0, last}, 0, 0.0},
                                       {"sw", {last, 0}, 0, 0.0},
                                       {"se", {last, last}, 0, 0.0}}};
    for (auto& corner : out) {
        const std::uint64_t i = cell_to_index(scheme, corner.cell);
        corner.index = i;
        std::uint64_t hits = 0;
        for (std::uint64_t j = 1; j <= N; ++j) {
            if (j == i) continue;
            const double d = distance(metric, cells[i], cells[j]);
            const double gap = static_cast<double>(j > i ? j - i : i - j);
            if (d >= std::sqrt(c0 * gap)) ++hits;
        }
        corner.fraction = static_cast<double>(hits) / static_cast<double>(N - 1);
    }
    return out;
}

} // namespace incompress::mesh
