#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>

#include "codewidth/cubic_tree.hpp"
#include "codewidth/treedecomp.hpp"
#include "test_util.hpp"

using namespace codewidth;
using testutil::throws_containing;

namespace {

const char* kCaterpillar8 = "(0,1,(2,(3,(4,(5,(6,7))))))";

// Canonical signature of a leaf-labeled tree: the set of leaf bipartitions
// induced by its edges. Two trees are equal iff the signatures match.
std::set<std::uint64_t> split_signature(const CubicTree& t) {
    const int n = t.num_leaves();
    const std::uint64_t full = (std::uint64_t{1} << n) - 1;
    std::set<std::uint64_t> sig;
    for (int v = 0; v < t.num_nodes(); ++v)
        for (int u : t.neighbors(v)) {
            if (u < v) continue;
            // leaves on u's side of edge (v, u)
            std::uint64_t mask = 0;
            std::vector<int> stack{u};
            std::vector<bool> seen(static_cast<std::size_t>(t.num_nodes()), false);
            seen[static_cast<std::size_t>(v)] = seen[static_cast<std::size_t>(u)] = true;
            while (!stack.empty()) {
                const int w = stack.back();
                stack.pop_back();
                if (t.is_leaf(w)) mask |= std::uint64_t{1} << w;
                for (int x : t.neighbors(w))
                    if (!seen[static_cast<std::size_t>(x)]) {
                        seen[static_cast<std::size_t>(x)] = true;
                        stack.push_back(x);
                    }
            }
            sig.insert(std::min(mask, full & ~mask));
        }
    return sig;
}

}  // namespace

TEST_CASE("enumeration counts follow the double factorial") {
    CHECK(cubic_tree_count(3) == 1);
    CHECK(cubic_tree_count(4) == 3);
    CHECK(cubic_tree_count(5) == 15);
    CHECK(cubic_tree_count(8) == 10395);
    for (int n = 3; n <= 8; ++n) {
        long long count = 0;
        enumerate_cubic_trees(n, [&](const CubicTree&) { ++count; });
        CHECK(count == cubic_tree_count(n));
    }
    CHECK(throws_containing([] { enumerate_cubic_trees(11, [](const CubicTree&) {}); }, "3 <= n <= 10"));
}

TEST_CASE("enumerated trees are pairwise distinct") {
    for (int n = 3; n <= 7; ++n) {
        std::set<std::set<std::uint64_t>> seen;
        enumerate_cubic_trees(n, [&](const CubicTree& t) {
            CHECK(t.num_leaves() == n);
            CHECK(t.num_internal() == n - 2);
            seen.insert(split_signature(t));
        });
        CHECK(static_cast<long long>(seen.size()) == cubic_tree_count(n));
    }
}

TEST_CASE("adjacency validation") {
    CHECK(throws_containing([] { CubicTree::from_adjacency(3, {{3}, {3}, {3}, {0, 1}}); }, "degree"));
    // right degrees everywhere, but a 3-leaf star plus a doubled-edge
    // component is not a tree
    CHECK(throws_containing(
        [] {
            CubicTree::from_adjacency(5, {{5}, {5}, {5}, {6}, {7}, {0, 1, 2}, {3, 7, 7}, {4, 6, 6}});
        },
        "connected"));
    CHECK(CubicTree::single_edge().num_leaves() == 2);
    CHECK(CubicTree::single_leaf().num_nodes() == 1);
}

TEST_CASE("node splits") {
    SUBCASE("the unique 4-leaf topology splits (1,1,2) at both internal nodes") {
        enumerate_cubic_trees(4, [](const CubicTree& t) {
            for (int v = 4; v < t.num_nodes(); ++v) {
                const NodeSplit s = node_split(t, v);
                CHECK(s.counts == std::array<int, 3>{1, 1, 2});
            }
        });
    }
    SUBCASE("caterpillar spine node") {
        const CubicTree cat = parse_parenthesis(kCaterpillar8);
        const NodeSplit s = node_split(cat, 9);  // second spine node
        CHECK(s.counts == std::array<int, 3>{1, 2, 5});
        CHECK(s.leaf_sets[0] == std::vector<int>{2});
        CHECK(s.leaf_sets[1] == std::vector<int>{0, 1});
        CHECK(s.leaf_sets[2] == std::vector<int>{3, 4, 5, 6, 7});
    }
    SUBCASE("leaf sets partition the label range") {
        std::mt19937 rng(8);
        for (int trial = 0; trial < 50; ++trial) {
            std::uniform_int_distribution<int> ndist(3, 30);
            const int n = ndist(rng);
            const CubicTree t = random_cubic_tree(n, rng);
            std::uniform_int_distribution<int> vdist(n, t.num_nodes() - 1);
            const NodeSplit s = node_split(t, vdist(rng));
            std::vector<int> all;
            for (const auto& set : s.leaf_sets) all.insert(all.end(), set.begin(), set.end());
            std::sort(all.begin(), all.end());
            std::vector<int> expected(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i) expected[static_cast<std::size_t>(i)] = i;
            CHECK(all == expected);
            CHECK(s.counts[0] >= 1);
            CHECK(s.counts[2] <= n - 2);
        }
    }
    SUBCASE("leaves are rejected") {
        const CubicTree cat = parse_parenthesis(kCaterpillar8);
        CHECK(throws_containing([&] { node_split(cat, 0); }, "not internal"));
    }
}

TEST_CASE("parenthesis serialization") {
    SUBCASE("printed strings parse back to the same leaf-labeled tree") {
        // The parser renumbers internal nodes in preorder, so compare the
        // leaf-bipartition signature (and the reprinted string, which is the
        // exact round-trip contract) rather than raw node ids.
        for (int n : {3, 4, 5}) {
            enumerate_cubic_trees(n, [](const CubicTree& t) {
                const std::string text = to_parenthesis(t);
                const CubicTree back = parse_parenthesis(text);
                CHECK(split_signature(back) == split_signature(t));
                CHECK(to_parenthesis(back) == text);
            });
        }
        std::mt19937 rng(3);
        for (int trial = 0; trial < 20; ++trial) {
            const CubicTree t = random_cubic_tree(40, rng);
            const CubicTree back = parse_parenthesis(to_parenthesis(t));
            CHECK(split_signature(back) == split_signature(t));
            CHECK(to_parenthesis(back) == to_parenthesis(t));
        }
    }
    SUBCASE("canonical strings survive a parse/print round trip byte for byte") {
        for (const char* text : {"(0,1,2)", "(0,(1,2),3)", kCaterpillar8, "((2,4),(0,5),(1,3))"}) {
            CHECK(to_parenthesis(parse_parenthesis(text)) == text);
        }
    }
    SUBCASE("degenerate trees") {
        CHECK(to_parenthesis(CubicTree::single_leaf()) == "0");
        CHECK(to_parenthesis(CubicTree::single_edge()) == "(0,1)");
        CHECK(parse_parenthesis("(0,1)") == CubicTree::single_edge());
    }
    SUBCASE("malformed inputs") {
        CHECK(throws_containing([] { parse_parenthesis("(0,1,(2,3)"); }, "expected"));
        CHECK(throws_containing([] { parse_parenthesis("(0,1,1)"); }, "duplicate"));
        CHECK(throws_containing([] { parse_parenthesis("(0,1,3)"); }, "outside"));
        CHECK(throws_containing([] { parse_parenthesis("(0,1,2,3)"); }, "expected"));
        CHECK(throws_containing([] { parse_parenthesis("(0,1,2)x"); }, "trailing"));
        CHECK(throws_containing([] { parse_parenthesis("((0,1),(2,3))"); }, "2-leaf"));
    }
}

TEST_CASE("kappa at a node") {
    LinearCode rm = LinearCode::reed_muller(1, 3);
    const CubicTree cat = parse_parenthesis(kCaterpillar8);
    // node 11 carries leaf 4; branches {4} / {0,1,2,3} / {5,6,7}
    CHECK(kappa_node(rm, cat, 11) == 3);
    CHECK(throws_containing([&] { kappa_node(rm, cat, 2); }, "not internal"));

    LinearCode rep = LinearCode::from_generator(2, {{1, 1, 1, 1}});
    enumerate_cubic_trees(4, [&](const CubicTree& t) {
        for (int v = 4; v < t.num_nodes(); ++v) CHECK(kappa_node(rep, t, v) == 1);
    });

    // Full-space codes have trivial internal constraints; the width lives at
    // the leaves.
    LinearCode full = LinearCode::reed_muller(2, 2);
    enumerate_cubic_trees(4, [&](const CubicTree& t) {
        for (int v = 4; v < t.num_nodes(); ++v) CHECK(kappa_node(full, t, v) == 0);
        CHECK(constraint_complexity(full, t) == 1);
    });
}

TEST_CASE("constraint complexity") {
    LinearCode rm = LinearCode::reed_muller(1, 3);
    CHECK(constraint_complexity(rm, parse_parenthesis(kCaterpillar8)) == 3);
    CHECK(constraint_complexity(LinearCode::from_generator(2, {{1, 1}}), CubicTree::single_edge()) == 1);
    CHECK(constraint_complexity(LinearCode::from_generator(2, {{1}}), CubicTree::single_leaf()) == 1);
    CHECK(throws_containing([&] { constraint_complexity(rm, CubicTree::single_edge()); }, "leaves"));
}

TEST_CASE("kappa lower bound") {
    UProfile u = u_profile_bruteforce(LinearCode::reed_muller(1, 3));
    const CubicTree cat = parse_parenthesis(kCaterpillar8);
    CHECK(kappa_lower_bound(u, node_split(cat, 9)) == 3);  // 4 - (0+0+1)

    SUBCASE("never exceeds the exact kappa: 1000 random (code, tree, node) triples") {
        std::mt19937 rng(99);
        LinearCode codes[] = {LinearCode::reed_muller(1, 3), LinearCode::reed_solomon(8, 3, 11),
                              LinearCode::from_generator(2, {{1, 1, 0, 0, 1, 1, 0, 1},
                                                             {0, 1, 1, 0, 0, 1, 1, 0},
                                                             {0, 0, 0, 1, 1, 1, 1, 0}}),
                              LinearCode::reed_solomon(8, 6, 11)};
        for (const LinearCode& code : codes) {
            UProfile profile = u_profile_bruteforce(code);
            for (int trial = 0; trial < 250; ++trial) {
                const CubicTree t = random_cubic_tree(8, rng);
                std::uniform_int_distribution<int> vdist(8, t.num_nodes() - 1);
                const int v = vdist(rng);
                CHECK(kappa_lower_bound(profile, node_split(t, v)) <= kappa_node(code, t, v));
            }
        }
    }
}

TEST_CASE("exhaustive treewidth") {
    SUBCASE("RM(1,3) over all 10395 trees") {
        TreewidthResult r = treewidth_exhaustive(LinearCode::reed_muller(1, 3));
        CHECK(r.value == 3);
        CHECK(constraint_complexity(LinearCode::reed_muller(1, 3), r.witness) == 3);
    }
    SUBCASE("MDS example") {
        CHECK(treewidth_exhaustive(LinearCode::reed_solomon(4, 2, 5)).value == 2);
    }
    SUBCASE("repetition code") {
        CHECK(treewidth_exhaustive(LinearCode::from_generator(2, {{1, 1, 1, 1}})).value == 1);
    }
    SUBCASE("full spaces need the leaf terms") {
        CHECK(treewidth_exhaustive(LinearCode::reed_solomon(4, 4, 11)).value == 1);
        CHECK(treewidth_exhaustive(LinearCode::reed_solomon(2, 2, 11)).value == 1);
    }
    SUBCASE("hard gate at n = 8") {
        std::vector<std::vector<std::uint32_t>> row(1, std::vector<std::uint32_t>(9, 1));
        CHECK(throws_containing([&] { treewidth_exhaustive(LinearCode::from_generator(2, row)); },
                                "n <= 8"));
    }
    SUBCASE("deterministic witness, independent of the thread count") {
        LinearCode code = LinearCode::reed_solomon(6, 3, 7);
        TreewidthResult base = treewidth_exhaustive(code, 1);
        for (int threads : {2, 5, 8}) {
            TreewidthResult r = treewidth_exhaustive(code, threads);
            CHECK(r.value == base.value);
            CHECK(r.witness == base.witness);
        }
    }
}

TEST_CASE("jordan separator") {
    SUBCASE("4-leaf topologies qualify everywhere") {
        enumerate_cubic_trees(4, [](const CubicTree& t) {
            const NodeSplit s = node_split(t, jordan_separator(t));
            CHECK(2 * s.counts[2] <= 4);
        });
    }
    SUBCASE("caterpillar picks a middle spine node") {
        const CubicTree cat = parse_parenthesis(kCaterpillar8);
        const int v = jordan_separator(cat);
        CHECK(v == 10);
        CHECK(node_split(cat, v).counts == std::array<int, 3>{1, 3, 4});
    }
    SUBCASE("a qualifying node exists in every enumerated and random tree") {
        for (int n = 3; n <= 7; ++n)
            enumerate_cubic_trees(n, [&](const CubicTree& t) {
                const NodeSplit s = node_split(t, jordan_separator(t));
                CHECK(2 * s.counts[2] <= n);
            });
        std::mt19937 rng(1000);
        for (int trial = 0; trial < 1000; ++trial) {
            std::uniform_int_distribution<int> ndist(3, 200);
            const int n = ndist(rng);
            const CubicTree t = random_cubic_tree(n, rng);
            const NodeSplit s = node_split(t, jordan_separator(t));
            CHECK(2 * s.counts[2] <= n);
        }
    }
}

TEST_CASE("edge separator v*") {
    SUBCASE("caterpillar: nodes with n_3 = 5 beat the qualifying n_3 = 4 nodes") {
        const CubicTree cat = parse_parenthesis(kCaterpillar8);
        const EdgeSeparator sep = edge_separator_vstar(cat);
        CHECK(sep.node == 9);
        CHECK(sep.split.counts == std::array<int, 3>{1, 2, 5});
        // node 10 with counts (1,3,4) is in W but not maximal
        CHECK(node_split(cat, 10).counts[2] == 4);
    }
    SUBCASE("4-leaf topology") {
        enumerate_cubic_trees(4, [](const CubicTree& t) {
            const EdgeSeparator sep = edge_separator_vstar(t);
            CHECK(sep.split.counts == std::array<int, 3>{1, 1, 2});
        });
    }
    SUBCASE("n_3* within [n/2, 2n/3] on random trees") {
        std::mt19937 rng(2000);
        for (int trial = 0; trial < 500; ++trial) {
            std::uniform_int_distribution<int> ndist(4, 120);
            const int n = ndist(rng);
            const EdgeSeparator sep = edge_separator_vstar(random_cubic_tree(n, rng));
            CHECK(2 * sep.split.counts[2] >= n);
            CHECK(3 * sep.split.counts[2] <= 2 * n);
        }
    }
    SUBCASE("the 3-leaf star has no qualifying node and is rejected") {
        // its only internal node splits (1,1,1), below n/2 = 1.5
        const CubicTree star = parse_parenthesis("(0,1,2)");
        CHECK(node_split(star, 3).counts == std::array<int, 3>{1, 1, 1});
        CHECK(throws_containing([&] { edge_separator_vstar(star); }, "n >= 4"));
    }
    SUBCASE("power-of-two leaf counts obey the alpha/beta bracketing") {
        std::mt19937 rng(3000);
        for (int m = 3; m <= 7; ++m) {
            const int n = 1 << m;
            const auto [alpha, beta] = alpha_beta(m);
            for (int trial = 0; trial < 30; ++trial) {
                const EdgeSeparator sep = edge_separator_vstar(random_cubic_tree(n, rng));
                const int n3 = sep.split.counts[2], n2 = sep.split.counts[1];
                CHECK(n3 >= n / 2);
                CHECK(n3 <= alpha);
                CHECK(n2 >= alpha - n / 2 + 1);
                CHECK(n2 <= beta);
                // strict n/6 < n_2* < n/3
                CHECK(6 * n2 > n);
                CHECK(3 * n2 < n);
            }
        }
    }
}

TEST_CASE("treewidth never exceeds trelliswidth") {
    std::mt19937 rng(606);
    for (int trial = 0; trial < 20; ++trial) {
        std::uniform_int_distribution<std::size_t> kdist(1, 4), ndist(3, 6);
        Matrix g = testutil::random_matrix(trial % 2 ? 2 : 3, kdist(rng), ndist(rng), rng);
        if (rank(g) == 0) continue;
        LinearCode code = LinearCode::from_generator(g);
        CHECK(treewidth_exhaustive(code).value <= trelliswidth_exhaustive(code).value);
    }
}

TEST_CASE("width report combines both searches") {
    WidthReport report = compute_width_report(LinearCode::reed_muller(1, 3));
    CHECK(report.treewidth == 3);
    CHECK(report.trelliswidth == 3);
    CHECK(report.treewidth <= report.trelliswidth);
    CHECK(report.kappa_by_node.size() == 14);
    int max_kappa = 0;
    for (const auto& [node, kv] : report.kappa_by_node) max_kappa = std::max(max_kappa, kv);
    CHECK(max_kappa == report.treewidth);

    WidthReport tiny = compute_width_report(LinearCode::from_generator(2, {{1, 1}}));
    CHECK(tiny.treewidth == 1);
    CHECK(tiny.trelliswidth == 1);
}
