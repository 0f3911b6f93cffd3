#include "codewidth/treedecomp.hpp"

#include <algorithm>
#include <climits>
#include <stdexcept>
#include <string>

#include "codewidth/parallel.hpp"

namespace codewidth {

namespace {

// Leaf masks of the three components of T - v, per internal node. Rooted at
// the lowest internal id: below[u] is the leaf set under u, and the parent
// side is its complement.
struct BranchMasks {
    std::vector<std::uint64_t> below;  // per node, leaves in its subtree
    std::vector<int> parent;           // per node
};

BranchMasks rooted_masks(const CubicTree& tree) {
    const int nodes = tree.num_nodes();
    const int root = tree.num_leaves();  // lowest internal id
    BranchMasks bm;
    bm.below.assign(static_cast<std::size_t>(nodes), 0);
    bm.parent.assign(static_cast<std::size_t>(nodes), -1);
    std::vector<int> stack{root};
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(nodes));
    bm.parent[static_cast<std::size_t>(root)] = root;  // sentinel
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        order.push_back(v);
        for (int u : tree.neighbors(v))
            if (bm.parent[static_cast<std::size_t>(u)] == -1) {
                bm.parent[static_cast<std::size_t>(u)] = v;
                stack.push_back(u);
            }
    }
    // Accumulate leaf masks children-first.
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const int v = *it;
        if (tree.is_leaf(v)) bm.below[static_cast<std::size_t>(v)] = std::uint64_t{1} << v;
        if (v != root) bm.below[static_cast<std::size_t>(bm.parent[static_cast<std::size_t>(v)])] |=
            bm.below[static_cast<std::size_t>(v)];
    }
    bm.parent[static_cast<std::size_t>(root)] = -1;
    return bm;
}

std::array<std::uint64_t, 3> internal_branch_masks(const CubicTree& tree, int v, const BranchMasks& bm,
                                                   std::uint64_t full) {
    std::array<std::uint64_t, 3> masks{};
    int i = 0;
    for (int u : tree.neighbors(v)) {
        if (bm.parent[static_cast<std::size_t>(u)] == v)
            masks[static_cast<std::size_t>(i++)] = bm.below[static_cast<std::size_t>(u)];
        else
            masks[static_cast<std::size_t>(i++)] = full & ~bm.below[static_cast<std::size_t>(v)];
    }
    return masks;
}

// Constraint complexity from a precomputed dim table; shared by the
// exhaustive search so rank work is done once per subset, not per tree.
int tree_kappa(const CubicTree& tree, const std::vector<std::int8_t>& dims, int k, std::uint64_t full,
               int leaf_kappa_max) {
    int best = leaf_kappa_max;
    if (tree.num_leaves() >= 3) {
        const BranchMasks bm = rooted_masks(tree);
        for (int v = tree.num_leaves(); v < tree.num_nodes(); ++v) {
            const auto masks = internal_branch_masks(tree, v, bm, full);
            const int kv = k - dims[masks[0]] - dims[masks[1]] - dims[masks[2]];
            if (kv > best) best = kv;
        }
    }
    return best;
}

int leaf_kappa_max(const LinearCode& code) {
    const std::uint64_t full = code.full_support();
    const int k = code.dimension();
    int best = 0;
    if (code.length() == 1) return k;
    for (int i = 0; i < code.length(); ++i) {
        const int kv = k - code.dim_shortened(full & ~(std::uint64_t{1} << i));
        if (kv > best) best = kv;
    }
    return best;
}

}  // namespace

int kappa_node(const LinearCode& code, const CubicTree& tree, int v) {
    if (tree.num_leaves() != code.length())
        throw std::invalid_argument("kappa_node: tree has " + std::to_string(tree.num_leaves()) +
                                    " leaves, code has length " + std::to_string(code.length()));
    if (!tree.is_internal(v))
        throw std::invalid_argument("kappa_node: node " + std::to_string(v) + " is not internal");
    int kv = code.dimension();
    const NodeSplit split = node_split(tree, v);
    for (const auto& leaves : split.leaf_sets) kv -= code.dim_shortened(std::span<const int>(leaves));
    return kv;
}

int constraint_complexity(const LinearCode& code, const CubicTree& tree) {
    const int n = code.length();
    if (tree.num_leaves() != n)
        throw std::invalid_argument("constraint_complexity: tree has " +
                                    std::to_string(tree.num_leaves()) + " leaves, code has length " +
                                    std::to_string(n));
    int best = leaf_kappa_max(code);
    for (int v = n; v < tree.num_nodes(); ++v) best = std::max(best, kappa_node(code, tree, v));
    return best;
}

TreewidthResult treewidth_exhaustive(const LinearCode& code, int threads) {
    const int n = code.length();
    if (n > 8)
        throw std::invalid_argument("treewidth_exhaustive: n=" + std::to_string(n) +
                                    " exceeds the hard gate n <= 8");
    if (n == 1) return {constraint_complexity(code, CubicTree::single_leaf()), CubicTree::single_leaf()};
    if (n == 2) return {constraint_complexity(code, CubicTree::single_edge()), CubicTree::single_edge()};

    const std::vector<CubicTree> trees = all_cubic_trees(n);
    const std::vector<std::int8_t> dims = all_shortened_dims(code);
    const std::uint64_t full = code.full_support();
    const int k = code.dimension();
    const int leaf_max = leaf_kappa_max(code);

    struct Candidate {
        int value = INT_MAX;
        std::size_t index = 0;
    };
    const long long total = static_cast<long long>(trees.size());
    const int nchunks = static_cast<int>(std::min<long long>(total, 64));
    const long long chunk_size = (total + nchunks - 1) / nchunks;
    std::vector<Candidate> best(static_cast<std::size_t>(nchunks));

    detail::for_each_chunk(nchunks, threads, [&](long long c) {
        const std::size_t begin = static_cast<std::size_t>(c * chunk_size);
        const std::size_t end = std::min(trees.size(), static_cast<std::size_t>((c + 1) * chunk_size));
        Candidate& cand = best[static_cast<std::size_t>(c)];
        for (std::size_t i = begin; i < end; ++i) {
            const int value = tree_kappa(trees[i], dims, k, full, leaf_max);
            if (value < cand.value) {
                cand.value = value;
                cand.index = i;
            }
        }
    });

    Candidate overall;
    for (const Candidate& cand : best)
        if (cand.value < overall.value) overall = cand;  // earliest chunk wins ties
    return {overall.value, trees[overall.index]};
}

int kappa_lower_bound(const UProfile& profile, const NodeSplit& split) {
    int bound = profile.k();
    for (int c : split.counts) bound -= profile.at(c);
    return bound;
}

int jordan_separator(const CubicTree& tree) {
    const int n = tree.num_leaves();
    if (n < 3) throw std::invalid_argument("jordan_separator: need n >= 3");
    for (int v = n; v < tree.num_nodes(); ++v)
        if (2 * node_split(tree, v).counts[2] <= n) return v;
    throw std::logic_error("jordan_separator: no qualifying node (impossible for a cubic tree)");
}

EdgeSeparator edge_separator_vstar(const CubicTree& tree) {
    const int n = tree.num_leaves();
    // The 3-leaf star has branch counts (1,1,1) at its only internal node,
    // so no node reaches [n/2, 2n/3]; the separator exists from n = 4 on.
    if (n < 4) throw std::invalid_argument("edge_separator_vstar: need n >= 4");
    int best_node = -1;
    int best_n3 = -1;
    for (int v = n; v < tree.num_nodes(); ++v) {
        const int n3 = node_split(tree, v).counts[2];
        if (2 * n3 >= n && 3 * n3 <= 2 * n && n3 > best_n3) {
            best_n3 = n3;
            best_node = v;
        }
    }
    if (best_node < 0)
        throw std::logic_error("edge_separator_vstar: W empty (impossible for n >= 4)");
    return {best_node, node_split(tree, best_node)};
}

WidthReport compute_width_report(const LinearCode& code, int threads) {
    TreewidthResult tw = treewidth_exhaustive(code, threads);
    TrelliswidthResult tr = trelliswidth_exhaustive(code, threads);
    if (tw.value > tr.value)
        throw std::logic_error("width report: treewidth exceeds trelliswidth");
    WidthReport report{tw.value, tr.value, tw.witness, tr.witness, {}};
    const int k = code.dimension();
    const std::uint64_t full = code.full_support();
    for (int v = 0; v < tw.witness.num_nodes(); ++v) {
        int kv;
        if (tw.witness.is_leaf(v))
            kv = code.length() == 1 ? k : k - code.dim_shortened(full & ~(std::uint64_t{1} << v));
        else
            kv = kappa_node(code, tw.witness, v);
        report.kappa_by_node.emplace_back(v, kv);
    }
    return report;
}

}  // namespace codewidth
