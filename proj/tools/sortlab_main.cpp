#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "sortlab/cli.hpp"

namespace {

std::string read_all(std::istream& in) {
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Comparison-counting laboratory for MergeSort and binary insertion sort"};
    app.require_subcommand(1);

    std::int64_t table_min = 1;
    std::int64_t table_max = 1;
    std::int64_t table_step = 1;
    auto* table = app.add_subcommand("table", "Emit the analytic quantities as CSV");
    table->add_option("--min", table_min, "first n")->required();
    table->add_option("--max", table_max, "last n")->required();
    table->add_option("--step", table_step, "stride between rows");

    std::int64_t worst_n = 0;
    auto* gen_worst = app.add_subcommand("gen-worst", "Print a worst-case permutation of 1..N");
    gen_worst->add_option("N", worst_n, "number of keys")->required();

    std::int64_t verify_max = 4096;
    int verify_brute = 8;
    auto* verify = app.add_subcommand("verify", "Run every invariant suite");
    verify->add_option("--max", verify_max, "largest n covered by the sweeps");
    verify->add_option("--brute", verify_brute, "largest n for the permutation oracles");

    std::int64_t tree_n = 0;
    auto* tree = app.add_subcommand("tree", "Dump the recursion tree for N keys");
    tree->add_option("N", tree_n, "number of keys")->required();

    std::string count_alg = "mergesort";
    std::string count_file;
    auto* count = app.add_subcommand("count", "Count comparisons on a key list");
    count->add_option("--alg", count_alg, "mergesort|bininsert")
        ->check(CLI::IsMember({"mergesort", "bininsert"}));
    count->add_option("FILE", count_file, "input file; stdin when omitted");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return sortlab::cli::kExitUsage;
    }

    if (table->parsed()) {
        if (table_min < 1 || table_max < 1 || table_step < 1) {
            std::cerr << "table: need 1 <= min <= max and step >= 1\n";
            return sortlab::cli::kExitUsage;
        }
        return sortlab::cli::cmd_table(std::cout, std::cerr,
                                       static_cast<std::uint64_t>(table_min),
                                       static_cast<std::uint64_t>(table_max),
                                       static_cast<std::uint64_t>(table_step));
    }
    if (gen_worst->parsed()) return sortlab::cli::cmd_gen_worst(std::cout, std::cerr, worst_n);
    if (verify->parsed())
        return sortlab::cli::cmd_verify(std::cout, std::cerr, verify_max, verify_brute);
    if (tree->parsed()) return sortlab::cli::cmd_tree(std::cout, std::cerr, tree_n);
    if (count->parsed()) {
        std::string text;
        if (count_file.empty()) {
            text = read_all(std::cin);
        } else {
            std::ifstream in(count_file);
            if (!in) {
                std::cerr << "count: cannot open '" << count_file << "'\n";
                return sortlab::cli::kExitUsage;
            }
            text = read_all(in);
        }
        const auto algorithm = count_alg == "bininsert"
                                   ? sortlab::cli::Algorithm::binary_insertion
                                   : sortlab::cli::Algorithm::merge_sort;
        return sortlab::cli::cmd_count(std::cout, std::cerr, text, algorithm);
    }
    return sortlab::cli::kExitUsage;
}
