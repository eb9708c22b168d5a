#ifndef INCOMPRESS_MESH_HPP
#define INCOMPRESS_MESH_HPP

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

// Indexing schemes for the n x n mesh — bijections between {1..n^2} and
// grid cells — plus exhaustive locality scans: the worst pairwise
// dilation (d(F(i),F(j))+1)^2 / |i-j| and per-corner fractions of pairs
// with d >= sqrt(c0 |i-j|). Distances are measured between integer cell
// coordinates (unit spacing).

namespace incompress::mesh {

enum class Scheme { row_major, boustrophedon, morton, hilbert };
enum class Metric { euclidean, manhattan, chebyshev };

const char* scheme_name(Scheme s);
Scheme scheme_from_name(const std::string& name);
const char* metric_name(Metric m);
Metric metric_from_name(const std::string& name);

struct Cell {
    unsigned row = 0;
    unsigned col = 0;
    friend bool operator==(Cell a, Cell b) { return a.row == b.row && a.col == b.col; }
};

struct IndexingScheme {
    Scheme scheme;
    unsigned n; // side length

    // morton and hilbert need a power-of-two side
    IndexingScheme(Scheme scheme_, unsigned n_);
    std::uint64_t cells() const { return static_cast<std::uint64_t>(n) * n; }
};

// Mutually inverse bijections; i ranges over 1..n^2. Conventions:
//   row_major      i-1 = row*n + col
//   boustrophedon  row-major with odd rows reversed (serpentine)
//   morton         i-1 bit-interleaved, even bits -> col, odd bits -> row
//   hilbert        base order (0,0),(1,0),(1,1),(0,1) with the standard
//                  quadrant rotations; consecutive indices are adjacent
Cell index_to_cell(const IndexingScheme& scheme, std::uint64_t i);
std::uint64_t cell_to_index(const IndexingScheme& scheme, Cell cell);

double distance(Metric metric, Cell a, Cell b);

struct DilationResult {
    double c_max = 0.0;
    std::uint64_t witness_i = 0;
    std::uint64_t witness_j = 0;
};

// Exhaustive max of (d+1)^2/|i-j| over all pairs, with the first
// witnessing pair in (i,j) order. Sides beyond exhaustive_limit raise an
// error suggesting worst_dilation_sampled.
DilationResult worst_dilation(const IndexingScheme& scheme, Metric metric,
                              unsigned exhaustive_limit = 64);

// Same functional over `samples` seeded random pairs; for sides where the
// exhaustive scan is off the table.
DilationResult worst_dilation_sampled(const IndexingScheme& scheme, Metric metric,
                                      std::uint64_t samples, std::uint64_t seed);

struct CornerFraction {
    std::string corner; // nw, ne, sw, se
    Cell cell;
    std::uint64_t index = 0;  // preimage of the corner cell
    double fraction = 0.0;    // share of j != i with d(F(i),F(j)) >= sqrt(c0 |i-j|)
};

std::array<CornerFraction, 4> corner_locality(const IndexingScheme& scheme, Metric metric,
                                              double c0, unsigned exhaustive_limit = 64);

} // namespace incompress::mesh

#endif
