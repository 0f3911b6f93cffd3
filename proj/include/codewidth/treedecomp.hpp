#pragma once

#include <utility>
#include <vector>

#include "codewidth/cubic_tree.hpp"
#include "codewidth/ghw.hpp"
#include "codewidth/trellis.hpp"

namespace codewidth {

/// Local constraint dimension at internal node v:
/// kappa_v = k - sum over the three branches of dim C_{branch leaves}.
int kappa_node(const LinearCode& code, const CubicTree& tree, int v);

/// Constraint complexity of the realization of the code on the tree:
/// the maximum of kappa_v over ALL nodes. At a leaf holding coordinate i the
/// local dimension is k - dim C_{[0,n) \ {i}}, i.e. 1 unless generator
/// column i is zero; this term is what keeps full-space codes at width 1.
/// Defined for the degenerate n <= 2 trees as well (n = 1 gives k).
int constraint_complexity(const LinearCode& code, const CubicTree& tree);

/// Minimum constraint complexity over every leaf-labeled cubic tree, with
/// the first optimal tree in enumeration order as witness. Hard-gated at
/// n <= 8. For n <= 2 the single degenerate topology is used.
struct TreewidthResult {
    int value;
    CubicTree witness;
};

TreewidthResult treewidth_exhaustive(const LinearCode& code, int threads = 0);

/// kappa_v >= k - (U_{n_1} + U_{n_2} + U_{n_3}) for any leaf labeling;
/// evaluates that lower bound from a U-profile and a topological split.
int kappa_lower_bound(const UProfile& profile, const NodeSplit& split);

/// Internal node whose three branches each contain at most n/2 leaves
/// (always exists); smallest node id among qualifiers.
int jordan_separator(const CubicTree& tree);

/// Over W = { internal v : n_3(v) in [n/2, 2n/3] }, picks the v* maximizing
/// n_3, smallest node id on ties. W is nonempty for every cubic tree with
/// n >= 4 leaves; the 3-leaf star is the one topology with no qualifying
/// node, so n = 3 is rejected.
struct EdgeSeparator {
    int node;
    NodeSplit split;
};

EdgeSeparator edge_separator_vstar(const CubicTree& tree);

/// Both exhaustive widths plus witnesses and the kappa_v table of the
/// witness tree (all nodes, ascending id). treewidth <= trelliswidth holds
/// by construction.
struct WidthReport {
    int treewidth;
    int trelliswidth;
    CubicTree witness_tree;
    CoordinateOrder witness_order;
    std::vector<std::pair<int, int>> kappa_by_node;
};

WidthReport compute_width_report(const LinearCode& code, int threads = 0);

}  // namespace codewidth
