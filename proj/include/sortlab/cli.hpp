#pragma once

#include <cstdint>
#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include "sortlab/adversary.hpp"
#include "sortlab/analytics.hpp"
#include "sortlab/rectree.hpp"
#include "sortlab/sorters.hpp"
#include "sortlab/verify.hpp"

namespace sortlab::cli {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailure = 1;
inline constexpr int kExitUsage = 2;

/// Reals are printed with 12 significant digits so output is byte-stable
/// across IEEE-754 platforms.
inline std::string format_real(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", value);
    return buf;
}

/// CSV table of the analytic quantities, one row per n.
inline int cmd_table(std::ostream& out, std::ostream& err, std::uint64_t n_min,
                     std::uint64_t n_max, std::uint64_t step) {
    if (n_min < 1 || n_min > n_max || step < 1) {
        err << "table: need 1 <= min <= max and step >= 1\n";
        return kExitUsage;
    }
    out << "n,W,B,lower,upper,epsilon,depth\n";
    for (std::uint64_t n = n_min; n <= n_max; n += step) {
        const auto row = analytics::analytics_row(n);
        out << row.n << ',' << row.w << ',' << row.b << ',' << format_real(row.lower) << ','
            << format_real(row.upper) << ',' << format_real(row.epsilon) << ',' << row.depth
            << '\n';
    }
    return kExitOk;
}

/// Worst-case permutation of 1..n, then the measured and closed-form counts.
/// Nonzero exit if they ever disagree.
inline int cmd_gen_worst(std::ostream& out, std::ostream& err, std::int64_t n) {
    if (n < 1) {
        err << "gen-worst: n must be >= 1\n";
        return kExitUsage;
    }
    std::vector<int> base(static_cast<std::size_t>(n));
    std::iota(base.begin(), base.end(), 1);
    const auto worst = adversary::un_sort(base);
    for (std::size_t i = 0; i < worst.size(); ++i) {
        if (i) out << ',';
        out << worst[i];
    }
    out << '\n';
    const auto measured = sorters::merge_sort(worst).comps;
    const auto closed = analytics::w_closed(static_cast<std::uint64_t>(n));
    out << "comps=" << measured << ",W=" << closed << '\n';
    return measured == closed ? kExitOk : kExitVerifyFailure;
}

/// Pre-order tree dump plus, for n >= 2, the last-two-level census footer.
inline int cmd_tree(std::ostream& out, std::ostream& err, std::int64_t n) {
    if (n < 1) {
        err << "tree: n must be >= 1\n";
        return kExitUsage;
    }
    const auto tree = rectree::build(static_cast<std::uint64_t>(n));
    rectree::dump(tree, out);
    if (n >= 2) {
        const int h = rectree::depth(tree);
        const auto counted = rectree::census(tree);
        const auto leaves_h1 =
            counted.leaves_by_level.contains(h - 1) ? counted.leaves_by_level.at(h - 1) : 0;
        const auto leaves_h =
            counted.leaves_by_level.contains(h) ? counted.leaves_by_level.at(h) : 0;
        const auto internals_h1 = rectree::level_profile(tree, h - 1).internal_count;
        out << "leaves_h1=" << leaves_h1 << ",internals_h1=" << internals_h1
            << ",leaves_h=" << leaves_h << '\n';
    }
    return kExitOk;
}

/// Runs every invariant suite up to n_max and the permutation oracles up to
/// brute_max; one PASS/FAIL line per suite.
inline int cmd_verify(std::ostream& out, std::ostream& err, std::int64_t n_max, int brute_max) {
    if (n_max < 1 || brute_max < 1 || brute_max > 9) {
        err << "verify: need max >= 1 and 1 <= brute <= 9\n";
        return kExitUsage;
    }
    const auto results =
        verify::run_all({static_cast<std::uint64_t>(n_max), brute_max});
    bool all_passed = true;
    for (const auto& suite : results) {
        out << (suite.passed ? "PASS " : "FAIL ") << suite.name;
        if (!suite.passed) out << ": " << suite.detail;
        out << '\n';
        all_passed = all_passed && suite.passed;
    }
    return all_passed ? kExitOk : kExitVerifyFailure;
}

enum class Algorithm { merge_sort, binary_insertion };

/// Splits a text of integers separated by commas and/or whitespace. Throws
/// std::invalid_argument naming the first malformed token.
inline std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> values;
    std::string token;
    auto flush = [&] {
        if (token.empty()) return;
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(token, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad integer token '" + token + "'");
        }
        if (used != token.size()) throw std::invalid_argument("bad integer token '" + token + "'");
        values.push_back(value);
        token.clear();
    };
    for (char c : text) {
        if (c == ',' || c == ' ' || c == '\t' || c == '\n' || c == '\r')
            flush();
        else
            token.push_back(c);
    }
    flush();
    return values;
}

/// Runs the chosen instrumented sort over a parsed key list and reports the
/// measured count next to the analytic envelope.
inline int cmd_count(std::ostream& out, std::ostream& err, const std::string& text,
                     Algorithm algorithm) {
    std::vector<int> keys;
    try {
        keys = parse_int_list(text);
    } catch (const std::exception& e) {
        err << "count: " << e.what() << '\n';
        return kExitUsage;
    }
    const auto outcome = algorithm == Algorithm::merge_sort
                             ? sorters::merge_sort(keys)
                             : sorters::binary_insertion_sort(keys);
    const auto n = static_cast<std::uint64_t>(keys.size());
    out << "n=" << n << ",comps=" << outcome.comps << ",W=" << analytics::w_closed(n)
        << ",B=" << (n >= 1 ? analytics::best_case(n) : 0) << '\n';
    return kExitOk;
}

}  // namespace sortlab::cli
