#include "incompress/sortbench.hpp"

#include <stdexcept>
#include <utility>

#include "incompress/rng.hpp"

namespace incompress::sortbench {

const char* algorithm_name(Algorithm alg) {
    switch (alg) {
        case Algorithm::merge: return "merge";
        case Algorithm::quick: return "quick";
        case Algorithm::insertion: return "insertion";
    }
    return "?";
}

Algorithm algorithm_from_name(const std::string& name) {
    if (name == "merge") return Algorithm::merge;
    if (name == "quick") return Algorithm::quick;
    if (name == "insertion") return Algorithm::insertion;
    throw std::invalid_argument("unknown sort algorithm: " + name);
}

namespace {

// the single choke point for element-order decisions
struct Comparator {
    std::uint64_t count = 0;
    bool less(std::uint32_t a, std::uint32_t b) {
        ++count;
        return a < b;
    }
};

void merge_sort(std::vector<std::uint32_t>& a, std::size_t lo, std::size_t hi,
                std::vector<std::uint32_t>& tmp, Comparator& cmp) {
    if (hi - lo <= 1) return;
    const std::size_t mid = lo + (hi - lo) / 2;
    merge_sort(a, lo, mid, tmp, cmp);
    merge_sort(a, mid, hi, tmp, cmp);
    std::size_t l = lo, r = mid, o = lo;
    while (l < mid && r < hi) tmp[o++] = cmp.less(a[r], a[l]) ? a[r++] : a[l++];
    while (l < mid) tmp[o++] = a[l++]; // exhausted side copies free of comparisons
    while (r < hi) tmp[o++] = a[r++];
    for (std::size_t p = lo; p < hi; ++p) a[p] = tmp[p];
}

void quick_sort(std::vector<std::uint32_t>& a, std::size_t lo, std::size_t hi, Comparator& cmp) {
    while (hi - lo > 1) {
        if (hi - lo == 2) {
            if (cmp.less(a[lo + 1], a[lo])) std::swap(a[lo], a[lo + 1]);
            return;
        }
        // median of first / middle / last, ordered in place
        const std::size_t mid = lo + (hi - lo) / 2;
        if (cmp.less(a[mid], a[lo])) std::swap(a[lo], a[mid]);
        if (cmp.less(a[hi - 1], a[mid])) {
            std::swap(a[mid], a[hi - 1]);
            if (cmp.less(a[mid], a[lo])) std::swap(a[lo], a[mid]);
        }
        // pivot to the end, Lomuto partition over the rest
        std::swap(a[mid], a[hi - 1]);
        const std::uint32_t pivot = a[hi - 1];
        std::size_t store = lo;
        for (std::size_t p = lo; p + 1 < hi; ++p)
            if (cmp.less(a[p], pivot)) std::swap(a[p], a[store++]);
        std::swap(a[store], a[hi - 1]);
        // recurse into the smaller side, loop on the larger
        if (store - lo < hi - store - 1) {
            quick_sort(a, lo, store, cmp);
            lo = store + 1;
        } else {
            quick_sort(a, store + 1, hi, cmp);
            hi = store;
        }
    }
}

void insertion_sort(std::vector<std::uint32_t>& a, Comparator& cmp) {
    for (std::size_t i = 1; i < a.size(); ++i) {
        const std::uint32_t key = a[i];
        std::size_t j = i;
        while (j > 0 && cmp.less(key, a[j - 1])) {
            a[j] = a[j - 1];
            --j;
        }
        a[j] = key;
    }
}

void require_permutation(std::span<const std::uint32_t> input) {
    std::vector<bool> seen(input.size() + 1, false);
    for (std::uint32_t v : input) {
        if (v < 1 || v > input.size() || seen[v])
            throw std::invalid_argument("input is not a permutation of 1..n");
        seen[v] = true;
    }
}

} // namespace

SortResult instrumented_sort(Algorithm alg, std::span<const std::uint32_t> permutation) {
    require_permutation(permutation);
    SortResult res;
    res.sorted.assign(permutation.begin(), permutation.end());
    Comparator cmp;
    switch (alg) {
        case Algorithm::merge: {
            std::vector<std::uint32_t> tmp(res.sorted.size());
            merge_sort(res.sorted, 0, res.sorted.size(), tmp, cmp);
            break;
        }
        case Algorithm::quick:
            quick_sort(res.sorted, 0, res.sorted.size(), cmp);
            break;
        case Algorithm::insertion:
            insertion_sort(res.sorted, cmp);
            break;
    }
    res.comparisons = cmp.count;
    return res;
}

std::vector<std::uint32_t> random_permutation(std::uint32_t n, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("random_permutation: n must be >= 1");
    std::vector<std::uint32_t> perm(n);
    for (std::uint32_t i = 0; i < n; ++i) perm[i] = i + 1;
    core::Rng rng(seed);
    for (std::uint32_t i = n - 1; i > 0; --i) {
        const std::uint64_t j = rng.below(i + 1);
        std::swap(perm[i], perm[j]);
    }
    return perm;
}

std::vector<BenchResult> sort_bench(std::uint32_t n, std::size_t trials,
                                    std::span<const Algorithm> algorithms, std::uint64_t seed) {
    if (n < 2) throw std::invalid_argument("sort_bench: n must be >= 2");
    if (trials < 1) throw std::invalid_argument("sort_bench: trials must be >= 1");
    std::vector<BenchResult> out;
    for (Algorithm alg : algorithms) out.push_back({alg, {}, {}});
    for (std::size_t trial = 0; trial < trials; ++trial) {
        const auto perm = random_permutation(n, core::derive_seed(seed, trial));
        for (auto& bench : out)
            bench.counts.push_back(instrumented_sort(bench.algorithm, perm).comparisons);
    }
    for (auto& bench : out) {
        std::vector<double> samples(bench.counts.begin(), bench.counts.end());
        bench.comparisons = core::summarize(samples);
    }
    return out;
}

} // namespace incompress::sortbench
