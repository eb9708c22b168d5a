#ifndef INCOMPRESS_SORTBENCH_HPP
#define INCOMPRESS_SORTBENCH_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "incompress/stats.hpp"

// Comparison-instrumented sorts over permutations of 1..n. Every
// element-order decision goes through one counting comparator, so no
// algorithm can compare on the side.

namespace incompress::sortbench {

enum class Algorithm { merge, quick, insertion };

const char* algorithm_name(Algorithm alg);
Algorithm algorithm_from_name(const std::string& name);

struct SortResult {
    std::vector<std::uint32_t> sorted;
    std::uint64_t comparisons = 0;
};

// Input must be a permutation of 1..n. merge: top-down mergesort; quick:
// deterministic median-of-three pivoting (pivot-selection comparisons
// count too); insertion: classic shifting insertion sort.
SortResult instrumented_sort(Algorithm alg, std::span<const std::uint32_t> permutation);

// Fisher-Yates driven by the shared generator; uniform over all n!
// permutations thanks to rejection-sampled range reduction.
std::vector<std::uint32_t> random_permutation(std::uint32_t n, std::uint64_t seed);

struct BenchResult {
    Algorithm algorithm;
    std::vector<std::uint64_t> counts; // per trial, in trial order
    core::TrialSummary comparisons;
};

// Trial t sorts random_permutation(n, derive_seed(seed, t)); all
// algorithms see the same permutations. Compare means against
// core::log2_factorial(n).
std::vector<BenchResult> sort_bench(std::uint32_t n, std::size_t trials,
                                    std::span<const Algorithm> algorithms, std::uint64_t seed);

} // namespace incompress::sortbench

#endif
