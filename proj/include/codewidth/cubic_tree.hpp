#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

namespace codewidth {

/// Leaf-labeled cubic tree: leaves carry ids 0..n-1, internal nodes ids
/// n..2n-3, and every internal node has degree exactly 3. The degenerate
/// n = 1 (single node) and n = 2 (single edge) trees are allowed; they have
/// no internal nodes.
class CubicTree {
public:
    static CubicTree single_leaf();
    static CubicTree single_edge();
    static CubicTree from_adjacency(int num_leaves, std::vector<std::vector<int>> adj);

    int num_leaves() const { return n_; }
    int num_nodes() const { return static_cast<int>(adj_.size()); }
    int num_internal() const { return num_nodes() - n_; }
    bool is_leaf(int v) const { return v < n_; }
    bool is_internal(int v) const { return v >= n_ && v < num_nodes(); }
    const std::vector<int>& neighbors(int v) const { return adj_.at(static_cast<std::size_t>(v)); }

    /// Structural equality, insensitive to adjacency-list ordering.
    bool operator==(const CubicTree& other) const;

private:
    CubicTree(int n, std::vector<std::vector<int>> adj) : n_(n), adj_(std::move(adj)) {}

    int n_ = 0;
    std::vector<std::vector<int>> adj_;
};

/// Number of leaf-labeled cubic trees with n leaves: (2n-5)!! for n >= 3.
long long cubic_tree_count(int n);

/// Streams every leaf-labeled cubic tree with n leaves exactly once, built
/// by attaching leaf j to each edge of each (j-1)-leaf tree. The visit order
/// is deterministic and defines the tree stream index. Gated at 3 <= n <= 10.
void enumerate_cubic_trees(int n, const std::function<void(const CubicTree&)>& visit);

/// Materialized enumeration, gated at n <= 8 (10395 trees).
std::vector<CubicTree> all_cubic_trees(int n);

/// Uniform construction sampling: each leaf is attached to an edge drawn
/// uniformly at random, which makes every labeled cubic tree equally likely.
CubicTree random_cubic_tree(int n, std::mt19937& rng);

/// Nested-parenthesis serialization rooted at the lowest-id internal node,
/// which has exactly three children; every other internal node has two.
/// Example: "(0,1,(2,3))". parse(print(t)) == t and print(parse(s)) == s.
std::string to_parenthesis(const CubicTree& tree);
CubicTree parse_parenthesis(const std::string& text);

/// The three branches hanging off an internal node: leaf sets and their
/// sizes, ordered by ascending size. The sets partition [0, n).
struct NodeSplit {
    int node = -1;
    std::array<std::vector<int>, 3> leaf_sets;
    std::array<int, 3> counts{};
};

NodeSplit node_split(const CubicTree& tree, int v);

}  // namespace codewidth
