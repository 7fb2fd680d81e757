#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>
#include <vector>

#include "sortlab/adversary.hpp"
#include "sortlab/analytics.hpp"
#include "sortlab/sorters.hpp"

using namespace sortlab;

namespace {

std::vector<int> iota_1_to(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    return v;
}

}  // namespace

TEST_CASE("un_sort preconditions", "[adversary]") {
    CHECK(adversary::un_sort<int>({1}) == std::vector<int>{1});
    CHECK(adversary::un_sort<int>({}).empty());
    CHECK_THROWS_AS(adversary::un_sort<int>({1, 1, 2}), std::domain_error);
    CHECK_THROWS_AS(adversary::un_sort<int>({2, 1}), std::domain_error);
}

TEST_CASE("un_sort output is a permutation", "[adversary]") {
    for (int n : {2, 3, 7, 16, 33, 100}) {
        const auto base = iota_1_to(n);
        auto shuffled = adversary::un_sort(base);
        std::sort(shuffled.begin(), shuffled.end());
        REQUIRE(shuffled == base);
    }
}

TEST_CASE("keystone: un_sort forces exactly W(n) comparisons", "[adversary]") {
    for (int n = 1; n <= 512; ++n) {
        const auto worst = adversary::un_sort(iota_1_to(n));
        REQUIRE(sorters::merge_sort(worst).comps ==
                analytics::w_closed(static_cast<std::uint64_t>(n)));
    }
    // The published 500-key count.
    const auto worst500 = adversary::un_sort(iota_1_to(500));
    CHECK(sorters::merge_sort(worst500).comps == 3989);
}

TEST_CASE("un_sort is maximal among all permutations for small n", "[adversary]") {
    for (int n = 1; n <= 8; ++n) {
        const auto worst = adversary::un_sort(iota_1_to(n));
        const auto measured = sorters::merge_sort(worst).comps;
        REQUIRE(measured == adversary::brute_force_max(n).count);
    }
}

TEST_CASE("brute_force_max matches the closed form", "[adversary]") {
    const auto trivial = adversary::brute_force_max(1);
    CHECK(trivial.count == 0);
    CHECK(trivial.witness == std::vector<int>{1});

    CHECK(adversary::brute_force_max(5).count == 8);
    CHECK(adversary::brute_force_max(8).count == analytics::w_closed(8));
    CHECK(analytics::w_closed(8) == 17);

    CHECK_THROWS_AS(adversary::brute_force_max(10), std::domain_error);
    CHECK_THROWS_AS(adversary::brute_force_max(11, true), std::domain_error);
    CHECK_THROWS_AS(adversary::brute_force_max(0), std::domain_error);
}

TEST_CASE("brute_force_min matches best_case", "[adversary]") {
    const auto trivial = adversary::brute_force_min(1);
    CHECK(trivial.count == 0);
    CHECK(trivial.witness == std::vector<int>{1});

    const auto pair = adversary::brute_force_min(2);
    CHECK(pair.count == 1);
    CHECK(pair.witness == std::vector<int>{1, 2});  // lexicographically least

    CHECK(adversary::brute_force_min(8).count == analytics::bit_sum(8));
    CHECK(analytics::bit_sum(8) == 12);
    CHECK_THROWS_AS(adversary::brute_force_min(10), std::domain_error);
}

TEST_CASE("exhaustive extrema agree with the formulas", "[adversary]") {
    for (int n = 1; n <= 8; ++n) {
        const auto nn = static_cast<std::uint64_t>(n);
        REQUIRE(adversary::brute_force_max(n).count == analytics::w_closed(nn));
        REQUIRE(adversary::brute_force_min(n).count == analytics::best_case(nn));
        const auto bi_max = adversary::max_comps_over_permutations(
            n, [](const std::vector<int>& a) { return sorters::binary_insertion_sort(a); });
        REQUIRE(bi_max.count == analytics::w_sum(nn));
    }
}

TEST_CASE("worst_merge_split attains n - 1", "[adversary]") {
    const auto two = adversary::worst_merge_split(2);
    CHECK(two.count == 1);
    CHECK(two.left == std::vector<int>{1});
    CHECK(two.right == std::vector<int>{2});

    const auto four = adversary::worst_merge_split(4);
    CHECK(four.count == 3);
    CHECK(four.left == std::vector<int>{1, 3});
    CHECK(four.right == std::vector<int>{2, 4});

    CHECK(adversary::worst_merge_split(7).count == 6);

    for (int n = 2; n <= 12; ++n) {
        const auto split = adversary::worst_merge_split(n);
        REQUIRE(split.count == static_cast<analytics::comp_count>(n - 1));
        REQUIRE(split.left.size() == static_cast<std::size_t>(n / 2));
        REQUIRE(split.right.size() == static_cast<std::size_t>(n - n / 2));
        // The odds/evens split is always a witness.
        std::vector<int> odds;
        std::vector<int> evens;
        for (int v = 1; v <= n; ++v) (v % 2 == 1 ? odds : evens).push_back(v);
        sorters::Tally tally;
        sorters::merge(odds, evens, tally);
        REQUIRE(tally.comps == split.count);
    }

    CHECK_THROWS_AS(adversary::worst_merge_split(1), std::domain_error);
    CHECK_THROWS_AS(adversary::worst_merge_split(17), std::domain_error);
}
