#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <vector>

namespace sortlab::analytics {

/// Exact number of key comparisons. Every quantity of this type is computed
/// in integer arithmetic only.
using comp_count = std::uint64_t;

/// ceil(lg n): the least k with 2^k >= n. Taken from the bit length of n-1,
/// so there is no floating-point rounding near powers of two.
inline int ceil_lg(std::uint64_t n) {
    if (n == 0) throw std::domain_error("ceil_lg: undefined for n = 0");
    return static_cast<int>(std::bit_width(n - 1));
}

/// floor(lg n), likewise by bit length.
inline int floor_lg(std::uint64_t n) {
    if (n == 0) throw std::domain_error("floor_lg: undefined for n = 0");
    return static_cast<int>(std::bit_width(n)) - 1;
}

inline std::uint64_t pow2(int k) { return std::uint64_t{1} << k; }

/// Worst-case comparisons of MergeSort on n keys, closed form:
/// n*ceil(lg n) - 2^ceil(lg n) + 1. Zero for n <= 1.
inline comp_count w_closed(std::uint64_t n) {
    if (n <= 1) return 0;
    const int k = ceil_lg(n);
    return n * static_cast<std::uint64_t>(k) - pow2(k) + 1;
}

/// The same quantity as the literal sum of ceil(lg i), i = 1..n.
inline comp_count w_sum(std::uint64_t n) {
    if (n == 0) throw std::domain_error("w_sum: n must be >= 1");
    comp_count total = 0;
    for (std::uint64_t i = 2; i <= n; ++i) total += static_cast<comp_count>(ceil_lg(i));
    return total;
}

/// The same quantity as the per-level sum of (n - 2^y), y = 0..ceil(lg n)-1.
/// The range is empty for n = 1.
inline comp_count w_levels(std::uint64_t n) {
    if (n == 0) throw std::domain_error("w_levels: n must be >= 1");
    comp_count total = 0;
    const int k = ceil_lg(n);
    for (int y = 0; y < k; ++y) total += n - pow2(y);
    return total;
}

/// One pass of the summation route: entry i holds w_sum(i), i = 0..n_max.
inline std::vector<comp_count> w_sum_table(std::uint64_t n_max) {
    std::vector<comp_count> table(n_max + 1, 0);
    for (std::uint64_t i = 2; i <= n_max; ++i)
        table[i] = table[i - 1] + static_cast<comp_count>(ceil_lg(i));
    return table;
}

/// Full memo of the recurrence route
/// W(n) = W(floor(n/2)) + W(ceil(n/2)) + n - 1 with W(1) = 0, filled
/// bottom-up: entry i holds w_recurrence(i), i = 0..n_max.
inline std::vector<comp_count> w_recurrence_table(std::uint64_t n_max) {
    std::vector<comp_count> table(n_max + 1, 0);
    for (std::uint64_t i = 2; i <= n_max; ++i)
        table[i] = table[i / 2] + table[(i + 1) / 2] + i - 1;
    return table;
}

/// The same quantity from the recurrence, evaluated bottom-up over 1..n
/// rather than by recursion.
inline comp_count w_recurrence(std::uint64_t n) {
    if (n == 0) throw std::domain_error("w_recurrence: n must be >= 1");
    return w_recurrence_table(n)[n];
}

/// Worst-case comparisons contributed by recursion level k: max(n - 2^k, 0).
/// Positive exactly for k <= ceil_lg(n) - 1.
inline comp_count level_comps(std::uint64_t n, int k) {
    if (n == 0) throw std::domain_error("level_comps: n must be >= 1");
    if (k < 0) throw std::domain_error("level_comps: k must be >= 0");
    if (k >= 63 || pow2(k) >= n) return 0;
    return n - pow2(k);
}

/// The constant 1 - lg e + lg lg e, the supremum of epsilon() and the sharp
/// linear-coefficient gap of the smooth bounds. Evaluated from the
/// expression, never hard-coded.
inline double delta() {
    const double lg_e = std::log2(std::numbers::e);
    return 1.0 - lg_e + std::log2(lg_e);
}

/// theta = ceil(lg n) - lg n for real n > 0, normalized into [0, 1):
/// exact powers of two map to 0.
inline double theta(double n) {
    if (!(n > 0.0)) throw std::domain_error("theta: n must be positive");
    const double lg = std::log2(n);
    return std::ceil(lg) - lg;
}

/// The fractional-power correction at one point: theta as above and
/// epsilon = 1 + theta - 2^theta, which lies in [0, delta()] and vanishes
/// exactly at powers of two.
struct EpsilonPoint {
    double n = 0.0;
    double theta = 0.0;
    double epsilon = 0.0;
};

namespace detail {
inline EpsilonPoint make_epsilon_point(double n, double th) {
    const double raw = 1.0 + th - std::exp2(th);
    return {n, th, std::clamp(raw, 0.0, delta())};
}
}  // namespace detail

inline EpsilonPoint epsilon(double n) {
    return detail::make_epsilon_point(n, theta(n));
}

/// epsilon() at an integer point, with the ceiling taken by integer bit
/// length so powers of two are exact by construction.
inline EpsilonPoint epsilon_at(std::uint64_t n) {
    if (n == 0) throw std::domain_error("epsilon_at: n must be >= 1");
    const double th = static_cast<double>(ceil_lg(n)) - std::log2(static_cast<double>(n));
    return detail::make_epsilon_point(static_cast<double>(n), th);
}

/// Smooth sandwich around w_closed(n):
/// n lg n - n + 1  <=  W(n)  <=  n lg n - (1 - delta()) n + 1.
/// The lower bound meets W(n) exactly at powers of two.
struct SmoothBounds {
    double lower = 0.0;
    double upper = 0.0;
};

inline SmoothBounds smooth_bounds(std::uint64_t n) {
    if (n == 0) throw std::domain_error("smooth_bounds: n must be >= 1");
    const double x = static_cast<double>(n);
    const double n_lg_n = x * std::log2(x);
    return {n_lg_n - x + 1.0, n_lg_n - (1.0 - delta()) * x + 1.0};
}

/// ceil(n lg n - c n) for an arbitrary constant c. With c = 0.913 this is a
/// valid upper bound on W(n) for every n; with c = 0.914 it is not (n = 11
/// already violates it).
inline std::int64_t integer_upper(std::uint64_t n, double c) {
    if (n == 0) throw std::domain_error("integer_upper: n must be >= 1");
    const double x = static_cast<double>(n);
    return static_cast<std::int64_t>(std::ceil(x * std::log2(x) - c * x));
}

/// Integer sandwich: ceil(n lg n) - n + 1  <=  W(n)  <=  ceil(n lg n - 0.913 n).
struct IntegerBounds {
    std::int64_t lower = 0;
    std::int64_t upper = 0;
};

inline IntegerBounds integer_bounds(std::uint64_t n) {
    if (n == 0) throw std::domain_error("integer_bounds: n must be >= 1");
    const double x = static_cast<double>(n);
    const auto lower = static_cast<std::int64_t>(std::ceil(x * std::log2(x))) -
                       static_cast<std::int64_t>(n) + 1;
    return {lower, integer_upper(n, 0.913)};
}

/// An exact multiple of 1/2, stored as twice its value. Closed under
/// addition and subtraction; converts to an integer only when the half-units
/// cancel.
class DyadicHalf {
public:
    constexpr DyadicHalf() = default;

    static constexpr DyadicHalf from_integer(std::int64_t v) { return DyadicHalf{2 * v}; }
    static constexpr DyadicHalf from_halves(std::int64_t twice) { return DyadicHalf{twice}; }

    constexpr std::int64_t twice_value() const { return twice_; }
    constexpr bool is_integral() const { return twice_ % 2 == 0; }

    /// Throws std::logic_error when the value is an odd number of half-units:
    /// that signals a bug in the caller, not bad input.
    constexpr std::int64_t to_integer() const {
        if (!is_integral()) throw std::logic_error("DyadicHalf: half-units did not cancel");
        return twice_ / 2;
    }

    friend constexpr DyadicHalf operator+(DyadicHalf a, DyadicHalf b) {
        return DyadicHalf{a.twice_ + b.twice_};
    }
    friend constexpr DyadicHalf operator-(DyadicHalf a, DyadicHalf b) {
        return DyadicHalf{a.twice_ - b.twice_};
    }
    friend constexpr bool operator==(DyadicHalf, DyadicHalf) = default;

private:
    explicit constexpr DyadicHalf(std::int64_t twice) : twice_(twice) {}
    std::int64_t twice_ = 0;
};

/// 2^k * Zigzag(n / 2^(k+1)) as an exact half-integer, where Zigzag(x) is the
/// distance from x to the nearest integer. Twice this value is the distance
/// from n to the nearest multiple of 2^(k+1), so no rounding ever occurs.
inline DyadicHalf zigzag_term(std::uint64_t n, int k) {
    const std::uint64_t m = pow2(k + 1);
    const std::uint64_t r = n % m;
    return DyadicHalf::from_halves(static_cast<std::int64_t>(std::min(r, m - r)));
}

/// Best-case comparisons of MergeSort on n keys:
/// n/2 (floor(lg n) + 1) - sum_{k=0}^{floor(lg n)} 2^k Zigzag(n / 2^(k+1)),
/// carried entirely in half-units; the result is always integral.
inline comp_count best_case(std::uint64_t n) {
    if (n == 0) throw std::domain_error("best_case: n must be >= 1");
    const int f = floor_lg(n);
    DyadicHalf acc = DyadicHalf::from_halves(static_cast<std::int64_t>(n) * (f + 1));
    for (int k = 0; k <= f; ++k) acc = acc - zigzag_term(n, k);
    return static_cast<comp_count>(acc.to_integer());
}

/// Total number of set bits over the binary representations of 0..n-1.
/// Equals best_case(n) for every n >= 1.
inline comp_count bit_sum(std::uint64_t n) {
    if (n == 0) throw std::domain_error("bit_sum: n must be >= 1");
    comp_count total = 0;
    for (std::uint64_t i = 1; i < n; ++i) total += static_cast<comp_count>(std::popcount(i));
    return total;
}

/// Recursion-tree statistics derived in closed form; the rectree module
/// re-derives them structurally.
struct TreeStats {
    int depth = 0;                 // h = ceil(lg n)
    std::uint64_t nodes = 0;       // 2n - 1
    std::uint64_t calls = 0;       // 2(n - 1) recursive calls below the root
    comp_count s_n = 0;            // sum of subarray sizes over all calls
    std::optional<double> a_n;     // average size per recursive call; n >= 2 only
};

inline TreeStats tree_stats(std::uint64_t n) {
    if (n == 0) throw std::domain_error("tree_stats: n must be >= 1");
    TreeStats stats;
    stats.depth = ceil_lg(n);
    stats.nodes = 2 * n - 1;
    stats.calls = 2 * (n - 1);
    stats.s_n = n * static_cast<std::uint64_t>(stats.depth) - pow2(stats.depth) + 2 * n;
    if (n >= 2) {
        const double x = static_cast<double>(n);
        stats.a_n = 0.5 * (1.0 + 1.0 / (x - 1.0)) * (std::log2(x) + epsilon_at(n).epsilon);
    }
    return stats;
}

/// Average subarray size over the 2(n - 1) recursive calls,
/// (1 + 1/(n-1)) (lg n + epsilon) / 2. Undefined at n = 1.
inline double avg_call_size(std::uint64_t n) {
    if (n < 2) throw std::domain_error("avg_call_size: defined for n >= 2 only");
    return *tree_stats(n).a_n;
}

/// Occupancy of the last two tree levels, h = ceil(lg n):
/// 2^h - n leaves and n - 2^(h-1) internal nodes at level h-1, and
/// 2n - 2^h leaves at level h. Defined for n >= 2.
struct LevelCensus {
    std::uint64_t leaves_h1 = 0;
    std::uint64_t internals_h1 = 0;
    std::uint64_t leaves_h = 0;
};

inline LevelCensus level_census(std::uint64_t n) {
    if (n < 2) throw std::domain_error("level_census: n must be >= 2");
    const int h = ceil_lg(n);
    return {pow2(h) - n, n - pow2(h - 1), 2 * n - pow2(h)};
}

/// (n - 1) * ceil(lg n): fewer than n comparisons on each of the h counting
/// levels. Always >= w_closed(n).
inline std::uint64_t rough_upper(std::uint64_t n) {
    if (n == 0) throw std::domain_error("rough_upper: n must be >= 1");
    return (n - 1) * static_cast<std::uint64_t>(ceil_lg(n));
}

/// Every closed-form quantity for one n, as consumed by the table writer and
/// the verification suites.
struct AnalyticsRow {
    std::uint64_t n = 0;
    comp_count w = 0;
    comp_count b = 0;
    double lower = 0.0;
    double upper = 0.0;
    double epsilon = 0.0;
    int depth = 0;
    std::uint64_t nodes = 0;
    std::uint64_t calls = 0;
    comp_count s_n = 0;
    std::uint64_t leaves_h1 = 0;
    std::uint64_t internals_h1 = 0;
    std::uint64_t leaves_h = 0;
};

inline AnalyticsRow analytics_row(std::uint64_t n) {
    if (n == 0) throw std::domain_error("analytics_row: n must be >= 1");
    const SmoothBounds bounds = smooth_bounds(n);
    const TreeStats stats = tree_stats(n);
    AnalyticsRow row;
    row.n = n;
    row.w = w_closed(n);
    row.b = best_case(n);
    row.lower = bounds.lower;
    row.upper = bounds.upper;
    row.epsilon = epsilon_at(n).epsilon;
    row.depth = stats.depth;
    row.nodes = stats.nodes;
    row.calls = stats.calls;
    row.s_n = stats.s_n;
    if (n >= 2) {
        const LevelCensus census = level_census(n);
        row.leaves_h1 = census.leaves_h1;
        row.internals_h1 = census.internals_h1;
        row.leaves_h = census.leaves_h;
    } else {
        row.leaves_h = 1;  // the root is the only node and the only leaf
    }
    return row;
}

}  // namespace sortlab::analytics
