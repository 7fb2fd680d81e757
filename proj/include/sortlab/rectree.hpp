#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <ostream>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "sortlab/analytics.hpp"

namespace sortlab::rectree {

using analytics::comp_count;

/// One call node: the subarray size passed to that call and its level
/// (root = 0). A call of size >= 2 always has both children, of sizes
/// floor(size/2) and ceil(size/2).
struct Node {
    std::uint64_t size = 0;
    int level = 0;
    std::unique_ptr<Node> left;
    std::unique_ptr<Node> right;

    bool is_leaf() const { return !left && !right; }
};

/// The recursion 2-tree of MergeSort on n keys, materialized node by node so
/// structural claims can be checked by direct inspection. Immutable after
/// build.
struct RecTree {
    std::unique_ptr<Node> root;
};

namespace detail {

inline std::unique_ptr<Node> build_node(std::uint64_t size, int level) {
    auto node = std::make_unique<Node>();
    node->size = size;
    node->level = level;
    if (size >= 2) {
        node->left = build_node(size / 2, level + 1);
        node->right = build_node(size - size / 2, level + 1);
    }
    return node;
}

// Pre-order traversal, left child first.
template <typename F>
void for_each_node(const Node& node, F&& visit) {
    visit(node);
    if (node.left) for_each_node(*node.left, visit);
    if (node.right) for_each_node(*node.right, visit);
}

}  // namespace detail

inline RecTree build(std::uint64_t n) {
    if (n == 0) throw std::domain_error("build: n must be >= 1");
    return {detail::build_node(n, 0)};
}

/// Largest level index holding at least one node, found by traversal rather
/// than by formula.
inline int depth(const RecTree& tree) {
    int deepest = 0;
    detail::for_each_node(*tree.root, [&](const Node& node) {
        deepest = std::max(deepest, node.level);
    });
    return deepest;
}

/// All node sizes at one level, with the internal/leaf split. The sizes at
/// any level never spread by more than 1.
struct LevelProfile {
    int level = 0;
    std::vector<std::uint64_t> node_sizes;  // ascending
    std::uint64_t internal_count = 0;
    std::uint64_t leaf_count = 0;
};

inline LevelProfile level_profile(const RecTree& tree, int k) {
    if (k < 0 || k > depth(tree)) throw std::domain_error("level_profile: level out of range");
    LevelProfile profile;
    profile.level = k;
    detail::for_each_node(*tree.root, [&](const Node& node) {
        if (node.level != k) return;
        profile.node_sizes.push_back(node.size);
        if (node.is_leaf())
            ++profile.leaf_count;
        else
            ++profile.internal_count;
    });
    std::sort(profile.node_sizes.begin(), profile.node_sizes.end());
    return profile;
}

/// Sum over internal nodes p at level k of (p.size - 1): the worst case of
/// each merge performed at that level. Equals analytics::level_comps(n, k).
inline comp_count worst_comps_at_level(const RecTree& tree, int k) {
    if (k < 0) throw std::domain_error("worst_comps_at_level: k must be >= 0");
    comp_count total = 0;
    detail::for_each_node(*tree.root, [&](const Node& node) {
        if (node.level == k && !node.is_leaf()) total += node.size - 1;
    });
    return total;
}

/// Sums the sizes over a cut. A valid cut meets every root-to-leaf branch
/// exactly once and contains only nodes of this tree; anything else throws
/// std::invalid_argument. For every valid cut the sum equals the root size.
inline std::uint64_t cut_sum(const RecTree& tree, const std::unordered_set<const Node*>& cut) {
    std::uint64_t sum = 0;
    std::size_t members_met = 0;
    auto walk = [&](auto&& self, const Node& node, int met_on_path) -> void {
        if (cut.contains(&node)) {
            ++members_met;
            sum += node.size;
            ++met_on_path;
        }
        if (met_on_path > 1)
            throw std::invalid_argument("cut_sum: a branch meets the cut more than once");
        if (node.is_leaf()) {
            if (met_on_path == 0)
                throw std::invalid_argument("cut_sum: a branch misses the cut");
            return;
        }
        self(self, *node.left, met_on_path);
        self(self, *node.right, met_on_path);
    };
    walk(walk, *tree.root, 0);
    if (members_met != cut.size())
        throw std::invalid_argument("cut_sum: cut contains nodes outside the tree");
    return sum;
}

/// The frontier at level k: every node at level k plus every leaf above it.
/// Always a valid cut.
inline std::unordered_set<const Node*> frontier_cut(const RecTree& tree, int k) {
    std::unordered_set<const Node*> cut;
    detail::for_each_node(*tree.root, [&](const Node& node) {
        if (node.level == k || (node.level < k && node.is_leaf())) cut.insert(&node);
    });
    return cut;
}

/// Leaf and node counts by direct traversal: leaves = n, nodes = 2n - 1, and
/// leaves appear only at the last two non-empty levels.
struct Census {
    std::uint64_t leaves = 0;
    std::uint64_t nodes = 0;
    std::map<int, std::uint64_t> leaves_by_level;
};

inline Census census(const RecTree& tree) {
    Census result;
    detail::for_each_node(*tree.root, [&](const Node& node) {
        ++result.nodes;
        if (node.is_leaf()) {
            ++result.leaves;
            ++result.leaves_by_level[node.level];
        }
    });
    return result;
}

/// Sum of the sizes shown at every node; equals analytics::tree_stats(n).s_n.
inline std::uint64_t size_sum(const RecTree& tree) {
    std::uint64_t sum = 0;
    detail::for_each_node(*tree.root, [&](const Node& node) { sum += node.size; });
    return sum;
}

/// One node per line in pre-order: "level,size,leaf|internal".
inline void dump(const RecTree& tree, std::ostream& os) {
    detail::for_each_node(*tree.root, [&](const Node& node) {
        os << node.level << ',' << node.size << ',' << (node.is_leaf() ? "leaf" : "internal")
           << '\n';
    });
}

}  // namespace sortlab::rectree
