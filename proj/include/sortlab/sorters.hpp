#pragma once

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <span>
#include <vector>

#include "sortlab/analytics.hpp"

namespace sortlab::sorters {

using analytics::comp_count;

/// Monotone counter of key comparisons for one sort run. Incremented by
/// exactly one per comparison, never reset.
struct Tally {
    comp_count comps = 0;
};

/// The single counted choke point: every key comparison in this namespace
/// goes through here.
template <typename T>
bool counted_less(const T& a, const T& b, Tally& tally) {
    ++tally.comps;
    return a < b;
}

template <typename T>
struct SortOutcome {
    std::vector<T> output;
    comp_count comps = 0;
};

/// Two-pointer merge of sorted sequences. One counted comparison per
/// head-vs-head decision, none once either side is exhausted. Ties take from
/// a, so the merge is stable.
template <typename T>
std::vector<T> merge(std::span<const T> a, std::span<const T> b, Tally& tally) {
    assert(std::is_sorted(a.begin(), a.end()));
    assert(std::is_sorted(b.begin(), b.end()));
    std::vector<T> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.size() && j < b.size()) {
        if (counted_less(b[j], a[i], tally))
            out.push_back(b[j++]);
        else
            out.push_back(a[i++]);
    }
    out.insert(out.end(), a.begin() + static_cast<std::ptrdiff_t>(i), a.end());
    out.insert(out.end(), b.begin() + static_cast<std::ptrdiff_t>(j), b.end());
    return out;
}

template <typename T>
std::vector<T> merge(const std::vector<T>& a, const std::vector<T>& b, Tally& tally) {
    return merge(std::span<const T>(a), std::span<const T>(b), tally);
}

namespace detail {

template <typename T>
std::vector<T> merge_sort_rec(std::span<const T> a, Tally& tally) {
    if (a.size() <= 1) return {a.begin(), a.end()};
    const std::size_t half = a.size() / 2;  // first floor(n/2) keys go left
    std::vector<T> left = merge_sort_rec(a.first(half), tally);
    std::vector<T> right = merge_sort_rec(a.subspan(half), tally);
    return merge(left, right, tally);
}

}  // namespace detail

/// Top-down MergeSort with floor/ceil halving and a fresh merge buffer per
/// call. Returns the sorted keys and the exact comparison count.
template <typename T>
SortOutcome<T> merge_sort(const std::vector<T>& a) {
    Tally tally;
    std::vector<T> out = detail::merge_sort_rec(std::span<const T>(a), tally);
    return {std::move(out), tally.comps};
}

/// Incremental sort: each key is inserted into the sorted prefix by binary
/// search, probing floor((lo+hi)/2) over the half-open range [lo, hi) with
/// one counted comparison per probe. Equal keys insert after the existing
/// run, so the sort is stable.
template <typename T>
SortOutcome<T> binary_insertion_sort(const std::vector<T>& a) {
    Tally tally;
    std::vector<T> out;
    out.reserve(a.size());
    for (const T& key : a) {
        std::size_t lo = 0;
        std::size_t hi = out.size();
        while (lo < hi) {
            const std::size_t mid = (lo + hi) / 2;
            if (counted_less(key, out[mid], tally))
                hi = mid;
            else
                lo = mid + 1;
        }
        out.insert(out.begin() + static_cast<std::ptrdiff_t>(lo), key);
    }
    return {std::move(out), tally.comps};
}

}  // namespace sortlab::sorters
