#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <vector>

#include "sortlab/sorters.hpp"

namespace sortlab::adversary {

using analytics::comp_count;

namespace detail {

// Distribute the sorted values so that every merge in the recursion
// alternates sides at each comparison: odd ranks feed the left block of
// floor(n/2) keys, even ranks the right block, then each block is reshuffled
// the same way.
template <typename T>
void un_sort_rec(std::span<const T> values, std::span<T> out) {
    const std::size_t n = values.size();
    if (n <= 1) {
        std::copy(values.begin(), values.end(), out.begin());
        return;
    }
    const std::size_t half = n / 2;
    std::vector<T> left;
    std::vector<T> right;
    left.reserve(half);
    right.reserve(n - half);
    for (std::size_t i = 0; i < n; ++i) (i % 2 == 1 ? left : right).push_back(values[i]);
    un_sort_rec(std::span<const T>(left), out.first(half));
    un_sort_rec(std::span<const T>(right), out.subspan(half));
}

inline void check_brute_force_range(int n, bool allow_ten) {
    const int cap = allow_ten ? 10 : 9;
    if (n < 1 || n > cap) throw std::domain_error("brute force: n exceeds the factorial guard");
}

}  // namespace detail

/// Reshuffles a strictly increasing sequence into a worst-case input for
/// merge_sort: sorting the result costs exactly w_closed(n) comparisons.
template <typename T>
std::vector<T> un_sort(const std::vector<T>& sorted_keys) {
    for (std::size_t i = 1; i < sorted_keys.size(); ++i)
        if (!(sorted_keys[i - 1] < sorted_keys[i]))
            throw std::domain_error("un_sort: keys must be strictly increasing");
    std::vector<T> out(sorted_keys.size());
    detail::un_sort_rec(std::span<const T>(sorted_keys), std::span<T>(out));
    return out;
}

struct BruteForceResult {
    comp_count count = 0;
    std::vector<int> witness;  // lexicographically least extremum achiever
};

/// Exhaustive maximum of sort_fn's comparison count over all n! permutations
/// of 1..n. sort_fn maps std::vector<int> to a SortOutcome.
template <typename SortFn>
BruteForceResult max_comps_over_permutations(int n, SortFn&& sort_fn) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    BruteForceResult best{sort_fn(perm).comps, perm};
    while (std::next_permutation(perm.begin(), perm.end())) {
        const comp_count comps = sort_fn(perm).comps;
        if (comps > best.count) best = {comps, perm};
    }
    return best;
}

/// Exhaustive minimum, same contract as max_comps_over_permutations.
template <typename SortFn>
BruteForceResult min_comps_over_permutations(int n, SortFn&& sort_fn) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    BruteForceResult best{sort_fn(perm).comps, perm};
    while (std::next_permutation(perm.begin(), perm.end())) {
        const comp_count comps = sort_fn(perm).comps;
        if (comps < best.count) best = {comps, perm};
    }
    return best;
}

/// Exhaustive worst case of merge_sort over all permutations of 1..n.
/// Guarded at n <= 9 (362,880 runs); allow_ten raises the cap to 10.
inline BruteForceResult brute_force_max(int n, bool allow_ten = false) {
    detail::check_brute_force_range(n, allow_ten);
    return max_comps_over_permutations(n, [](const std::vector<int>& a) {
        return sorters::merge_sort(a);
    });
}

/// Exhaustive best case of merge_sort, same guard as brute_force_max.
inline BruteForceResult brute_force_min(int n, bool allow_ten = false) {
    detail::check_brute_force_range(n, allow_ten);
    return min_comps_over_permutations(n, [](const std::vector<int>& a) {
        return sorters::merge_sort(a);
    });
}

struct MergeSplitResult {
    comp_count count = 0;
    std::vector<int> left;
    std::vector<int> right;
};

/// Enumerates every split of {1..n} into sorted lists of sizes floor(n/2)
/// and ceil(n/2), merges each pair, and returns the maximum comparison count
/// (always n - 1) with the first witnessing split in mask order.
inline MergeSplitResult worst_merge_split(int n) {
    if (n < 2 || n > 16) throw std::domain_error("worst_merge_split: n must be in [2, 16]");
    const int left_size = n / 2;
    MergeSplitResult best;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
        if (std::popcount(mask) != left_size) continue;
        std::vector<int> left;
        std::vector<int> right;
        for (int i = 0; i < n; ++i) (((mask >> i) & 1u) != 0 ? left : right).push_back(i + 1);
        sorters::Tally tally;
        sorters::merge(left, right, tally);
        if (best.left.empty() || tally.comps > best.count)
            best = {tally.comps, std::move(left), std::move(right)};
    }
    return best;
}

}  // namespace sortlab::adversary
