#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "sortlab/adversary.hpp"
#include "sortlab/analytics.hpp"
#include "sortlab/rectree.hpp"
#include "sortlab/sorters.hpp"

namespace sortlab::verify {

struct SuiteResult {
    std::string name;
    bool passed = true;
    std::string detail;  // first failing n and quantity, empty on pass
};

struct Options {
    std::uint64_t n_max = 4096;
    int brute_max = 8;
};

namespace detail {

template <typename... Parts>
void fail(SuiteResult& result, const Parts&... parts) {
    if (!result.passed) return;  // keep the first failure
    std::ostringstream os;
    (os << ... << parts);
    result.passed = false;
    result.detail = os.str();
}

// Absolute tolerance for real-valued bound comparisons, scaled by n.
inline double bound_tol(std::uint64_t n) { return 1e-9 * static_cast<double>(n); }

inline bool is_pow2(std::uint64_t n) { return n != 0 && (n & (n - 1)) == 0; }

// Smallest integer witness for the near-supremum checks: epsilon(11) already
// exceeds delta() - 0.001, so ranges below 11 skip those sub-checks.
constexpr std::uint64_t kSharpnessWitness = 11;

}  // namespace detail

/// w_closed = w_sum = w_levels = w_recurrence, exact integers. The summation
/// and recurrence routes run through their tables; the scalar operations are
/// pinned to the tables on a dense prefix.
inline SuiteResult four_way_equality(const Options& opt) {
    SuiteResult result;
    result.name = "four-way-w-equality";
    const auto sums = analytics::w_sum_table(opt.n_max);
    const auto recurrences = analytics::w_recurrence_table(opt.n_max);
    for (std::uint64_t n = 1; n <= opt.n_max; ++n) {
        const auto closed = analytics::w_closed(n);
        if (closed != sums[n] || closed != recurrences[n] || closed != analytics::w_levels(n)) {
            detail::fail(result, "n=", n, ": w_closed=", closed, " w_sum=", sums[n],
                         " w_levels=", analytics::w_levels(n), " w_recurrence=", recurrences[n]);
            return result;
        }
    }
    for (std::uint64_t n = 1; n <= std::min<std::uint64_t>(opt.n_max, 2048); ++n) {
        if (analytics::w_sum(n) != sums[n] || analytics::w_recurrence(n) != recurrences[n]) {
            detail::fail(result, "n=", n, ": scalar operation disagrees with its table");
            return result;
        }
    }
    return result;
}

/// Per-level counts sum to the total and are positive exactly below
/// ceil_lg(n).
inline SuiteResult level_decomposition(const Options& opt) {
    SuiteResult result;
    result.name = "level-decomposition";
    const std::uint64_t cap = std::min<std::uint64_t>(opt.n_max, 4096);
    for (std::uint64_t n = 1; n <= cap; ++n) {
        const int h = analytics::ceil_lg(n);
        analytics::comp_count total = 0;
        for (int k = 0; k <= h + 1; ++k) {
            const auto comps = analytics::level_comps(n, k);
            total += comps;
            const bool expect_positive = k <= h - 1;
            if ((comps > 0) != expect_positive) {
                detail::fail(result, "n=", n, " k=", k, ": level_comps=", comps,
                             " positivity mismatch");
                return result;
            }
        }
        if (total != analytics::w_closed(n)) {
            detail::fail(result, "n=", n, ": level sum=", total,
                         " != w_closed=", analytics::w_closed(n));
            return result;
        }
    }
    return result;
}

/// Smooth and integer sandwiches around W(n); the smooth lower bound is an
/// exact integer equality at powers of two.
inline SuiteResult bounds_sandwich(const Options& opt) {
    SuiteResult result;
    result.name = "bounds-sandwich";
    for (std::uint64_t n = 2; n <= opt.n_max; ++n) {
        const auto w = static_cast<double>(analytics::w_closed(n));
        const auto bounds = analytics::smooth_bounds(n);
        const double tol = detail::bound_tol(n);
        if (!(bounds.lower - tol <= w && w <= bounds.upper + tol)) {
            detail::fail(result, "n=", n, ": W=", w, " outside [", bounds.lower, ", ",
                         bounds.upper, "]");
            return result;
        }
        if (detail::is_pow2(n)) {
            const auto k = static_cast<std::uint64_t>(analytics::ceil_lg(n));
            const analytics::comp_count exact = k * n - n + 1;
            if (analytics::w_closed(n) != exact || bounds.lower != static_cast<double>(exact)) {
                detail::fail(result, "n=", n, ": power-of-two lower bound not exact");
                return result;
            }
        }
        const auto integer = analytics::integer_bounds(n);
        const auto w_int = static_cast<std::int64_t>(analytics::w_closed(n));
        if (!(integer.lower <= w_int && w_int <= integer.upper)) {
            detail::fail(result, "n=", n, ": W=", w_int, " outside integer bounds [",
                         integer.lower, ", ", integer.upper, "]");
            return result;
        }
    }
    return result;
}

/// epsilon stays strictly below delta at integers, approaches it within
/// 0.001, and the greatest-constant / 0.914-counterexample facts hold.
inline SuiteResult epsilon_delta(const Options& opt) {
    SuiteResult result;
    result.name = "epsilon-delta";
    const double d = analytics::delta();
    double max_eps = 0.0;
    for (std::uint64_t n = 1; n <= opt.n_max; ++n) {
        const double eps = analytics::epsilon_at(n).epsilon;
        if (!(eps >= 0.0 && eps < d)) {
            detail::fail(result, "n=", n, ": epsilon=", eps, " not in [0, delta)");
            return result;
        }
        max_eps = std::max(max_eps, eps);
        // Greatest constant: W(n) < n lg n - (1 - delta) n + 1 strictly.
        const double x = static_cast<double>(n);
        const double upper = x * std::log2(x) - (1.0 - d) * x + 1.0;
        if (!(static_cast<double>(analytics::w_closed(n)) < upper)) {
            detail::fail(result, "n=", n, ": W not strictly below the (1-delta) bound");
            return result;
        }
    }
    if (opt.n_max >= detail::kSharpnessWitness) {
        if (!(max_eps > d - 0.001)) {
            detail::fail(result, "max epsilon=", max_eps, " does not approach delta=", d);
            return result;
        }
        // Any larger constant admits a violation.
        const double c = 1.0 - d + 0.001;
        bool violated = false;
        for (std::uint64_t n = 1; n <= opt.n_max && !violated; ++n) {
            const double x = static_cast<double>(n);
            violated = static_cast<double>(analytics::w_closed(n)) >=
                       x * std::log2(x) - c * x + 1.0;
        }
        if (!violated) {
            detail::fail(result, "no n violates the (1-delta)+0.001 bound");
            return result;
        }
        if (!(analytics::w_closed(11) >
              static_cast<analytics::comp_count>(analytics::integer_upper(11, 0.914)))) {
            detail::fail(result, "W(11) does not exceed ceil(11 lg 11 - 0.914*11)");
            return result;
        }
    }
    return result;
}

/// best_case agrees with the bit-count identity, W grows by ceil(lg n), and
/// second differences vanish strictly inside dyadic blocks.
inline SuiteResult best_case_identity(const Options& opt) {
    SuiteResult result;
    result.name = "best-case-identity";
    for (std::uint64_t n = 1; n <= opt.n_max; ++n) {
        const auto best = analytics::best_case(n);
        const auto bits = analytics::bit_sum(n);
        if (best != bits) {
            detail::fail(result, "n=", n, ": best_case=", best, " != bit_sum=", bits);
            return result;
        }
        if (n >= 2) {
            const auto gap = analytics::w_closed(n) - analytics::w_closed(n - 1);
            if (gap != static_cast<analytics::comp_count>(analytics::ceil_lg(n))) {
                detail::fail(result, "n=", n, ": W gap=", gap, " != ceil_lg=",
                             analytics::ceil_lg(n));
                return result;
            }
        }
        if (n >= 2 && n + 1 <= opt.n_max) {
            const auto second_diff = static_cast<std::int64_t>(analytics::w_closed(n + 1)) -
                                     2 * static_cast<std::int64_t>(analytics::w_closed(n)) +
                                     static_cast<std::int64_t>(analytics::w_closed(n - 1));
            const std::int64_t expected = detail::is_pow2(n) ? 1 : 0;
            if (second_diff != expected) {
                detail::fail(result, "n=", n, ": second difference=", second_diff,
                             " expected=", expected);
                return result;
            }
        }
    }
    return result;
}

/// Structural census of the materialized tree against the closed forms.
inline SuiteResult tree_census(const Options& opt) {
    SuiteResult result;
    result.name = "tree-census";
    const std::uint64_t cap = std::min<std::uint64_t>(opt.n_max, 2048);
    for (std::uint64_t n = 1; n <= cap; ++n) {
        const auto tree = rectree::build(n);
        const auto counted = rectree::census(tree);
        const int h = rectree::depth(tree);
        if (counted.nodes != 2 * n - 1 || counted.leaves != n) {
            detail::fail(result, "n=", n, ": nodes=", counted.nodes, " leaves=", counted.leaves);
            return result;
        }
        if (h != analytics::ceil_lg(n)) {
            detail::fail(result, "n=", n, ": depth=", h, " != ceil_lg=", analytics::ceil_lg(n));
            return result;
        }
        if (rectree::size_sum(tree) != analytics::tree_stats(n).s_n) {
            detail::fail(result, "n=", n, ": size sum != s_n");
            return result;
        }
        for (int k = 0; k <= h + 1; ++k) {
            if (rectree::worst_comps_at_level(tree, k) != analytics::level_comps(n, k)) {
                detail::fail(result, "n=", n, " k=", k, ": level comps mismatch");
                return result;
            }
        }
        for (int k = 0; k <= h; ++k) {
            const auto profile = rectree::level_profile(tree, k);
            if (!profile.node_sizes.empty() &&
                profile.node_sizes.back() - profile.node_sizes.front() > 1) {
                detail::fail(result, "n=", n, " k=", k, ": level size spread > 1");
                return result;
            }
        }
        if (n >= 2) {
            const auto expected = analytics::level_census(n);
            for (const auto& [level, count] : counted.leaves_by_level) {
                if (level != h && level != h - 1) {
                    detail::fail(result, "n=", n, ": leaf at level ", level,
                                 " outside the last two levels");
                    return result;
                }
            }
            const auto leaves_h1 =
                counted.leaves_by_level.contains(h - 1) ? counted.leaves_by_level.at(h - 1) : 0;
            const auto leaves_h =
                counted.leaves_by_level.contains(h) ? counted.leaves_by_level.at(h) : 0;
            const auto profile_h1 = rectree::level_profile(tree, h - 1);
            if (leaves_h1 != expected.leaves_h1 || leaves_h != expected.leaves_h ||
                profile_h1.internal_count != expected.internals_h1) {
                detail::fail(result, "n=", n, ": last-two-level census mismatch");
                return result;
            }
        }
    }
    return result;
}

/// Every frontier cut of every tree sums to n.
inline SuiteResult cut_sums(const Options& opt) {
    SuiteResult result;
    result.name = "cut-sums";
    const std::uint64_t cap = std::min<std::uint64_t>(opt.n_max, 512);
    for (std::uint64_t n = 1; n <= cap; ++n) {
        const auto tree = rectree::build(n);
        const int h = rectree::depth(tree);
        for (int k = 0; k <= h; ++k) {
            const auto sum = rectree::cut_sum(tree, rectree::frontier_cut(tree, k));
            if (sum != n) {
                detail::fail(result, "n=", n, " k=", k, ": cut sum=", sum);
                return result;
            }
        }
    }
    return result;
}

/// The keystone: sorting un_sort(1..n) costs exactly w_closed(n).
inline SuiteResult keystone_generator(const Options& opt) {
    SuiteResult result;
    result.name = "keystone-generator";
    const std::uint64_t cap = std::min<std::uint64_t>(opt.n_max, 4096);
    for (std::uint64_t n = 1; n <= cap; ++n) {
        std::vector<int> base(n);
        std::iota(base.begin(), base.end(), 1);
        const auto worst = adversary::un_sort(base);
        const auto outcome = sorters::merge_sort(worst);
        if (outcome.comps != analytics::w_closed(n)) {
            detail::fail(result, "n=", n, ": comps=", outcome.comps,
                         " != W=", analytics::w_closed(n));
            return result;
        }
        if (outcome.output != base) {
            detail::fail(result, "n=", n, ": un_sort output is not a permutation of 1..n");
            return result;
        }
    }
    return result;
}

/// No balanced split of {1..n} makes the merge exceed n - 1 comparisons, and
/// some split attains it.
inline SuiteResult merge_extremality(const Options& opt) {
    SuiteResult result;
    result.name = "merge-extremality";
    const std::uint64_t cap = std::min<std::uint64_t>(opt.n_max, 12);
    for (std::uint64_t n = 2; n <= cap; ++n) {
        const auto split = adversary::worst_merge_split(static_cast<int>(n));
        if (split.count != n - 1) {
            detail::fail(result, "n=", n, ": max merge comps=", split.count, " != ", n - 1);
            return result;
        }
    }
    return result;
}

/// Random arrays (fixed seed): both sorts return a sorted permutation and
/// stay within the analytic envelope; merge never exceeds p + q - 1.
inline SuiteResult sorter_envelope(const Options&) {
    SuiteResult result;
    result.name = "sorter-envelope";
    std::mt19937 rng(20240817);
    std::uniform_int_distribution<std::size_t> len_dist(0, 256);
    std::uniform_int_distribution<int> dup_dist(0, 63);
    for (int round = 0; round < 10000; ++round) {
        const std::size_t n = len_dist(rng);
        std::vector<int> keys(n);
        const bool distinct = round % 2 == 0;
        if (distinct) {
            std::iota(keys.begin(), keys.end(), 0);
            std::shuffle(keys.begin(), keys.end(), rng);
        } else {
            for (auto& key : keys) key = dup_dist(rng);
        }
        std::vector<int> expected = keys;
        std::sort(expected.begin(), expected.end());

        const auto ms = sorters::merge_sort(keys);
        const auto bi = sorters::binary_insertion_sort(keys);
        if (ms.output != expected || bi.output != expected) {
            detail::fail(result, "round=", round, " n=", n,
                         ": output is not the sorted permutation");
            return result;
        }
        const auto w = analytics::w_closed(n);
        if (ms.comps > w || bi.comps > w) {
            detail::fail(result, "round=", round, " n=", n, ": comps exceed W(n)=", w);
            return result;
        }
        if (distinct && n >= 1 && ms.comps < analytics::best_case(n)) {
            detail::fail(result, "round=", round, " n=", n, ": merge_sort comps below B(n)");
            return result;
        }
    }
    std::uniform_int_distribution<std::size_t> merge_len(0, 64);
    for (int round = 0; round < 2000; ++round) {
        std::vector<int> a(merge_len(rng));
        std::vector<int> b(merge_len(rng));
        for (auto& v : a) v = dup_dist(rng);
        for (auto& v : b) v = dup_dist(rng);
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        sorters::Tally tally;
        sorters::merge(a, b, tally);
        const std::uint64_t cap = a.empty() || b.empty() ? 0 : a.size() + b.size() - 1;
        if (tally.comps > cap) {
            detail::fail(result, "round=", round, ": merge comps=", tally.comps, " > ", cap);
            return result;
        }
    }
    return result;
}

/// Exhaustive extrema over all permutations agree with the closed forms.
inline SuiteResult brute_force_oracles(const Options& opt) {
    SuiteResult result;
    result.name = "brute-force-oracles";
    for (int n = 1; n <= opt.brute_max; ++n) {
        const auto max = adversary::brute_force_max(n);
        const auto min = adversary::brute_force_min(n);
        const auto nn = static_cast<std::uint64_t>(n);
        if (max.count != analytics::w_closed(nn)) {
            detail::fail(result, "n=", n, ": brute max=", max.count,
                         " != W=", analytics::w_closed(nn));
            return result;
        }
        if (min.count != analytics::best_case(nn)) {
            detail::fail(result, "n=", n, ": brute min=", min.count,
                         " != B=", analytics::best_case(nn));
            return result;
        }
        const auto bi_max = adversary::max_comps_over_permutations(
            n, [](const std::vector<int>& a) { return sorters::binary_insertion_sort(a); });
        if (bi_max.count != analytics::w_sum(nn)) {
            detail::fail(result, "n=", n, ": binary insertion brute max=", bi_max.count,
                         " != w_sum=", analytics::w_sum(nn));
            return result;
        }
    }
    return result;
}

/// All suites in fixed declaration order.
inline std::vector<SuiteResult> run_all(const Options& opt) {
    return {
        four_way_equality(opt),   level_decomposition(opt), bounds_sandwich(opt),
        epsilon_delta(opt),       best_case_identity(opt),  tree_census(opt),
        cut_sums(opt),            keystone_generator(opt),  merge_extremality(opt),
        sorter_envelope(opt),     brute_force_oracles(opt),
    };
}

}  // namespace sortlab::verify
