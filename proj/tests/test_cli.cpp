#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "sortlab/cli.hpp"

using namespace sortlab;

namespace {

std::string read_file(const std::string& name) {
    std::ifstream in(std::string(SORTLAB_TEST_DATA_DIR) + "/" + name);
    REQUIRE(in.good());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

// Mirror of merge_sort that hands the first ceil(n/2) keys to the left call.
// Same worst case W(n); different worst-case inputs.
std::vector<int> ceil_left_merge_sort(std::span<const int> a, sorters::Tally& tally) {
    if (a.size() <= 1) return {a.begin(), a.end()};
    const std::size_t half = (a.size() + 1) / 2;
    const auto left = ceil_left_merge_sort(a.first(half), tally);
    const auto right = ceil_left_merge_sort(a.subspan(half), tally);
    return sorters::merge<int>(left, right, tally);
}

}  // namespace

TEST_CASE("format_real uses 12 significant digits", "[cli]") {
    CHECK(cli::format_real(0.0) == "0");
    CHECK(cli::format_real(0.5) == "0.5");
    CHECK(cli::format_real(analytics::delta()) == "0.0860713320559");
    CHECK(cli::format_real(5.0) == "5");
}

TEST_CASE("table emits the pinned CSV schema", "[cli]") {
    std::ostringstream out;
    std::ostringstream err;
    REQUIRE(cli::cmd_table(out, err, 1, 1, 1) == 0);
    CHECK(out.str() ==
          "n,W,B,lower,upper,epsilon,depth\n"
          "1,0,0,0,0.0860713320559,0,0\n");
}

TEST_CASE("table rows carry the known worst-case values", "[cli]") {
    std::ostringstream out;
    std::ostringstream err;
    REQUIRE(cli::cmd_table(out, err, 5, 5, 1) == 0);
    CHECK(out.str().find("\n5,8,5,") != std::string::npos);  // W(5) = 8, B(5) = 5

    std::ostringstream out500;
    REQUIRE(cli::cmd_table(out500, err, 500, 500, 1) == 0);
    CHECK(out500.str().find("\n500,3989,") != std::string::npos);
}

TEST_CASE("table output is byte-deterministic", "[cli]") {
    std::ostringstream first;
    std::ostringstream second;
    std::ostringstream err;
    REQUIRE(cli::cmd_table(first, err, 1, 64, 3) == 0);
    REQUIRE(cli::cmd_table(second, err, 1, 64, 3) == 0);
    CHECK(first.str() == second.str());
    CHECK(first.str().back() == '\n');
    CHECK(first.str().find(",\n") == std::string::npos);  // no trailing commas
}

TEST_CASE("table rejects bad ranges", "[cli]") {
    std::ostringstream out;
    std::ostringstream err;
    CHECK(cli::cmd_table(out, err, 5, 4, 1) == 2);
    CHECK(cli::cmd_table(out, err, 0, 4, 1) == 2);
    CHECK(cli::cmd_table(out, err, 1, 4, 0) == 2);
}

TEST_CASE("gen-worst prints the array and matching counts", "[cli]") {
    std::ostringstream out;
    std::ostringstream err;
    REQUIRE(cli::cmd_gen_worst(out, err, 1) == 0);
    CHECK(out.str() == "1\ncomps=0,W=0\n");

    std::ostringstream out8;
    REQUIRE(cli::cmd_gen_worst(out8, err, 8) == 0);
    CHECK(out8.str().find("comps=17,W=17\n") != std::string::npos);

    std::ostringstream out500;
    REQUIRE(cli::cmd_gen_worst(out500, err, 500) == 0);
    const auto text = out500.str();
    CHECK(text.substr(text.size() - 18) == "comps=3989,W=3989\n");

    CHECK(cli::cmd_gen_worst(out, err, 0) == 2);
}

TEST_CASE("gen-worst output feeds count back to the same number", "[cli]") {
    std::ostringstream gen;
    std::ostringstream err;
    REQUIRE(cli::cmd_gen_worst(gen, err, 37) == 0);
    const auto text = gen.str();
    const auto first_line = text.substr(0, text.find('\n'));
    std::ostringstream counted;
    REQUIRE(cli::cmd_count(counted, err, first_line, cli::Algorithm::merge_sort) == 0);
    std::ostringstream expected;
    expected << "n=37,comps=" << analytics::w_closed(37) << ",W=" << analytics::w_closed(37)
             << ",B=" << analytics::best_case(37) << '\n';
    CHECK(counted.str() == expected.str());
}

TEST_CASE("tree dump and census footer", "[cli]") {
    std::ostringstream single;
    std::ostringstream err;
    REQUIRE(cli::cmd_tree(single, err, 1) == 0);
    CHECK(single.str() == "0,1,leaf\n");  // no footer below n = 2

    std::ostringstream three;
    REQUIRE(cli::cmd_tree(three, err, 3) == 0);
    CHECK(three.str() ==
          "0,3,internal\n"
          "1,1,leaf\n"
          "1,2,internal\n"
          "2,1,leaf\n"
          "2,1,leaf\n"
          "leaves_h1=1,internals_h1=1,leaves_h=2\n");

    std::ostringstream big;
    REQUIRE(cli::cmd_tree(big, err, 500) == 0);
    const auto text = big.str();
    CHECK(std::count(text.begin(), text.end(), '\n') == 999 + 1);
    CHECK(text.find("leaves_h1=12,internals_h1=244,leaves_h=488\n") != std::string::npos);

    CHECK(cli::cmd_tree(single, err, 0) == 2);
}

TEST_CASE("count parses integers and reports the envelope", "[cli]") {
    std::ostringstream out;
    std::ostringstream err;
    REQUIRE(cli::cmd_count(out, err, "3,1,2", cli::Algorithm::merge_sort) == 0);
    CHECK(out.str() == "n=3,comps=3,W=3,B=2\n");  // comps within [B(3), W(3)] = [2, 3]

    std::ostringstream single;
    REQUIRE(cli::cmd_count(single, err, "1", cli::Algorithm::merge_sort) == 0);
    CHECK(single.str() == "n=1,comps=0,W=0,B=0\n");

    std::ostringstream empty;
    REQUIRE(cli::cmd_count(empty, err, "", cli::Algorithm::merge_sort) == 0);
    CHECK(empty.str() == "n=0,comps=0,W=0,B=0\n");

    std::ostringstream bininsert;
    REQUIRE(cli::cmd_count(bininsert, err, "4, 3, 2, 1", cli::Algorithm::binary_insertion) == 0);
    CHECK(bininsert.str() == "n=4,comps=5,W=5,B=4\n");  // reverse order is its worst case
}

TEST_CASE("count names the offending token", "[cli]") {
    std::ostringstream out;
    std::ostringstream err;
    CHECK(cli::cmd_count(out, err, "1,x,3", cli::Algorithm::merge_sort) == 2);
    CHECK(err.str().find("'x'") != std::string::npos);

    std::ostringstream err2;
    CHECK(cli::cmd_count(out, err2, "1,2.5", cli::Algorithm::merge_sort) == 2);
    CHECK(err2.str().find("'2.5'") != std::string::npos);
}

TEST_CASE("parse_int_list accepts commas and whitespace", "[cli]") {
    CHECK(cli::parse_int_list("1, 2,3\n4\t5") == std::vector<int>{1, 2, 3, 4, 5});
    CHECK(cli::parse_int_list("").empty());
    CHECK(cli::parse_int_list(",,,").empty());
    CHECK_THROWS_AS(cli::parse_int_list("12a"), std::invalid_argument);
}

TEST_CASE("bundled 500-key array stays within the envelope", "[cli]") {
    const auto text = read_file("worst_case_500.txt");
    const auto keys = cli::parse_int_list(text);
    REQUIRE(keys.size() == 500);
    auto sorted = keys;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < 500; ++i) REQUIRE(sorted[static_cast<std::size_t>(i)] == i + 1);

    std::ostringstream out;
    std::ostringstream err;
    REQUIRE(cli::cmd_count(out, err, text, cli::Algorithm::merge_sort) == 0);
    CHECK(out.str() == "n=500,comps=3861,W=3989,B=2216\n");

    // The array drives the ceil-left mirror of the splitter to its exact
    // worst case, so the 3,989 bound is attained by a fair split either way.
    sorters::Tally tally;
    ceil_left_merge_sort(std::span<const int>(keys), tally);
    CHECK(tally.comps == 3989);
    CHECK(tally.comps == analytics::w_closed(500));
}

TEST_CASE("verify reports one line per suite and exit status", "[cli]") {
    std::ostringstream out;
    std::ostringstream err;
    REQUIRE(cli::cmd_verify(out, err, 64, 6) == 0);
    const auto text = out.str();
    CHECK(std::count(text.begin(), text.end(), '\n') == 11);
    CHECK(text.find("FAIL") == std::string::npos);
    CHECK(text.find("PASS four-way-w-equality\n") == 0);

    std::ostringstream trivial;
    REQUIRE(cli::cmd_verify(trivial, err, 1, 1) == 0);

    CHECK(cli::cmd_verify(out, err, 0, 6) == 2);
    CHECK(cli::cmd_verify(out, err, 64, 10) == 2);
    CHECK(cli::cmd_verify(out, err, 64, 0) == 2);
}
