#include "codewidth/cubic_tree.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace codewidth {

CubicTree CubicTree::single_leaf() { return CubicTree(1, {{}}); }

CubicTree CubicTree::single_edge() { return CubicTree(2, {{1}, {0}}); }

CubicTree CubicTree::from_adjacency(int num_leaves, std::vector<std::vector<int>> adj) {
    const int n = num_leaves;
    const int nodes = static_cast<int>(adj.size());
    if (n < 1) throw std::invalid_argument("CubicTree: need at least one leaf");
    if (n <= 2) {
        if (nodes != n) throw std::invalid_argument("CubicTree: degenerate tree must have no internal nodes");
    } else if (nodes != 2 * n - 2) {
        throw std::invalid_argument("CubicTree: " + std::to_string(n) + " leaves require " +
                                    std::to_string(2 * n - 2) + " nodes, got " + std::to_string(nodes));
    }
    long long edge_ends = 0;
    for (int v = 0; v < nodes; ++v) {
        const std::size_t deg = adj[static_cast<std::size_t>(v)].size();
        const std::size_t want = v < n ? (nodes == 1 ? 0 : 1) : 3;
        if (deg != want)
            throw std::invalid_argument("CubicTree: node " + std::to_string(v) + " has degree " +
                                        std::to_string(deg) + ", expected " + std::to_string(want));
        for (int u : adj[static_cast<std::size_t>(v)])
            if (u < 0 || u >= nodes || u == v)
                throw std::invalid_argument("CubicTree: bad neighbor " + std::to_string(u));
        edge_ends += static_cast<long long>(deg);
    }
    if (edge_ends != 2LL * (nodes - 1))
        throw std::invalid_argument("CubicTree: wrong edge count for a tree");
    // Edge count n-1 plus connectivity makes it a tree.
    std::vector<bool> seen(static_cast<std::size_t>(nodes), false);
    std::vector<int> stack{0};
    seen[0] = true;
    int reached = 0;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        ++reached;
        for (int u : adj[static_cast<std::size_t>(v)])
            if (!seen[static_cast<std::size_t>(u)]) {
                seen[static_cast<std::size_t>(u)] = true;
                stack.push_back(u);
            }
    }
    if (reached != nodes) throw std::invalid_argument("CubicTree: adjacency is not connected");
    return CubicTree(n, std::move(adj));
}

bool CubicTree::operator==(const CubicTree& other) const {
    if (n_ != other.n_ || adj_.size() != other.adj_.size()) return false;
    for (std::size_t v = 0; v < adj_.size(); ++v) {
        std::vector<int> a = adj_[v], b = other.adj_[v];
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) return false;
    }
    return true;
}

long long cubic_tree_count(int n) {
    if (n < 3 || n > 19) throw std::invalid_argument("cubic_tree_count: need 3 <= n <= 19");
    long long acc = 1;
    for (long long x = 2 * n - 5; x >= 3; x -= 2) acc *= x;
    return acc;
}

namespace {

// Shared workspace for the leaf-attachment enumeration. Node slots are laid
// out for the final size up front: leaves 0..n-1, internal n + creation
// order, so every emitted tree uses the canonical numbering.
struct TreeBuilder {
    int n;
    std::vector<std::vector<int>> adj;
    std::vector<std::pair<int, int>> edges;

    explicit TreeBuilder(int n_) : n(n_), adj(static_cast<std::size_t>(2 * n_ - 2)) {
        const int center = n;
        adj[0] = {center};
        adj[1] = {center};
        adj[2] = {center};
        adj[static_cast<std::size_t>(center)] = {0, 1, 2};
        edges = {{0, center}, {1, center}, {2, center}};
    }

    static void replace(std::vector<int>& list, int from, int to) {
        *std::find(list.begin(), list.end(), from) = to;
    }

    // Splits edge e with a fresh internal node and hangs the new leaf off it.
    void attach(int leaf, int internal, std::size_t e) {
        const auto [a, b] = edges[e];
        replace(adj[static_cast<std::size_t>(a)], b, internal);
        replace(adj[static_cast<std::size_t>(b)], a, internal);
        adj[static_cast<std::size_t>(internal)] = {a, b, leaf};
        adj[static_cast<std::size_t>(leaf)] = {internal};
        edges[e] = {a, internal};
        edges.emplace_back(internal, b);
        edges.emplace_back(leaf, internal);
    }

    void detach(int leaf, int internal, std::size_t e) {
        const int b = edges[edges.size() - 2].second;
        const int a = edges[e].first;
        edges.pop_back();
        edges.pop_back();
        edges[e] = {a, b};
        replace(adj[static_cast<std::size_t>(a)], internal, b);
        replace(adj[static_cast<std::size_t>(b)], internal, a);
        adj[static_cast<std::size_t>(internal)].clear();
        adj[static_cast<std::size_t>(leaf)].clear();
    }

    CubicTree snapshot() const { return CubicTree::from_adjacency(n, adj); }
};

void enumerate_rec(TreeBuilder& b, int next_leaf, const std::function<void(const CubicTree&)>& visit) {
    if (next_leaf == b.n) {
        visit(b.snapshot());
        return;
    }
    const int internal = b.n + next_leaf - 2;
    const std::size_t num_edges = b.edges.size();
    for (std::size_t e = 0; e < num_edges; ++e) {
        b.attach(next_leaf, internal, e);
        enumerate_rec(b, next_leaf + 1, visit);
        b.detach(next_leaf, internal, e);
    }
}

}  // namespace

void enumerate_cubic_trees(int n, const std::function<void(const CubicTree&)>& visit) {
    if (n < 3 || n > 10)
        throw std::invalid_argument("enumerate_cubic_trees: n=" + std::to_string(n) +
                                    " outside the hard gate 3 <= n <= 10");
    TreeBuilder b(n);
    enumerate_rec(b, 3, visit);
}

std::vector<CubicTree> all_cubic_trees(int n) {
    if (n < 3 || n > 8)
        throw std::invalid_argument("all_cubic_trees: n=" + std::to_string(n) +
                                    " outside the hard gate 3 <= n <= 8");
    std::vector<CubicTree> trees;
    trees.reserve(static_cast<std::size_t>(cubic_tree_count(n)));
    enumerate_cubic_trees(n, [&](const CubicTree& t) { trees.push_back(t); });
    return trees;
}

CubicTree random_cubic_tree(int n, std::mt19937& rng) {
    if (n < 3) throw std::invalid_argument("random_cubic_tree: need n >= 3");
    TreeBuilder b(n);
    for (int leaf = 3; leaf < n; ++leaf) {
        std::uniform_int_distribution<std::size_t> pick(0, b.edges.size() - 1);
        b.attach(leaf, n + leaf - 2, pick(rng));
    }
    return b.snapshot();
}

namespace {

void print_subtree(const CubicTree& t, int v, int parent, std::string& out) {
    if (t.is_leaf(v)) {
        out += std::to_string(v);
        return;
    }
    out += '(';
    bool first = true;
    for (int u : t.neighbors(v)) {
        if (u == parent) continue;
        if (!first) out += ',';
        first = false;
        print_subtree(t, u, v, out);
    }
    out += ')';
}

}  // namespace

std::string to_parenthesis(const CubicTree& tree) {
    const int n = tree.num_leaves();
    if (n == 1) return "0";
    if (n == 2) return "(0,1)";
    std::string out;
    print_subtree(tree, n, -1, out);
    return out;
}

namespace {

struct Parser {
    const std::string& s;
    std::size_t pos = 0;

    explicit Parser(const std::string& text) : s(text) {}

    [[noreturn]] void fail(const std::string& msg) const {
        throw std::runtime_error("parse_parenthesis: " + msg + " at offset " + std::to_string(pos));
    }

    void skip_ws() {
        while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t' || s[pos] == '\n' || s[pos] == '\r')) ++pos;
    }

    char peek() {
        skip_ws();
        if (pos >= s.size()) fail("unexpected end of input");
        return s[pos];
    }

    void expect(char c) {
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++pos;
    }

    struct Node {
        bool leaf = false;
        int label = -1;
        std::vector<Node> children;
    };

    Node parse_node() {
        if (peek() == '(') {
            ++pos;
            Node node;
            node.children.push_back(parse_node());
            expect(',');
            node.children.push_back(parse_node());
            if (peek() == ',') {
                ++pos;
                node.children.push_back(parse_node());
            }
            expect(')');
            return node;
        }
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected leaf label or '('");
        int label = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            label = label * 10 + (s[pos] - '0');
            if (label > 1'000'000) fail("leaf label too large");
            ++pos;
        }
        return Node{true, label, {}};
    }
};

int count_leaves(const Parser::Node& node) {
    if (node.leaf) return 1;
    int acc = 0;
    for (const auto& c : node.children) acc += count_leaves(c);
    return acc;
}

// Assigns internal ids in preorder and records adjacency in child order, so
// printing the result reproduces the input string.
int build_adjacency(const Parser::Node& node, int parent, int n, int& next_internal,
                    std::vector<std::vector<int>>& adj, std::vector<bool>& leaf_seen) {
    if (node.leaf) {
        if (node.label < 0 || node.label >= n)
            throw std::runtime_error("parse_parenthesis: leaf label " + std::to_string(node.label) +
                                     " outside [0, " + std::to_string(n) + ")");
        if (leaf_seen[static_cast<std::size_t>(node.label)])
            throw std::runtime_error("parse_parenthesis: duplicate leaf label " +
                                     std::to_string(node.label));
        leaf_seen[static_cast<std::size_t>(node.label)] = true;
        if (parent >= 0) adj[static_cast<std::size_t>(node.label)].push_back(parent);
        return node.label;
    }
    const bool root = parent < 0;
    if (root && node.children.size() != 3)
        throw std::runtime_error("parse_parenthesis: root must have three children");
    if (!root && node.children.size() != 2)
        throw std::runtime_error("parse_parenthesis: non-root internal node must have two children");
    const int id = next_internal++;
    if (!root) adj[static_cast<std::size_t>(id)].push_back(parent);
    for (const auto& c : node.children)
        adj[static_cast<std::size_t>(id)].push_back(build_adjacency(c, id, n, next_internal, adj, leaf_seen));
    return id;
}

}  // namespace

CubicTree parse_parenthesis(const std::string& text) {
    Parser parser(text);
    parser.skip_ws();
    if (parser.pos >= text.size()) throw std::runtime_error("parse_parenthesis: empty input");
    Parser::Node root = parser.parse_node();
    parser.skip_ws();
    if (parser.pos != text.size()) parser.fail("trailing characters");

    if (root.leaf) {
        if (root.label != 0) throw std::runtime_error("parse_parenthesis: single leaf must be labeled 0");
        return CubicTree::single_leaf();
    }
    const int n = count_leaves(root);
    if (root.children.size() == 2) {
        if (n != 2 || !root.children[0].leaf || !root.children[1].leaf)
            throw std::runtime_error("parse_parenthesis: two-child root is only valid for the 2-leaf tree");
        if (root.children[0].label != 0 || root.children[1].label != 1)
            throw std::runtime_error("parse_parenthesis: 2-leaf tree must be (0,1)");
        return CubicTree::single_edge();
    }
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(2 * n - 2));
    std::vector<bool> leaf_seen(static_cast<std::size_t>(n), false);
    int next_internal = n;
    build_adjacency(root, -1, n, next_internal, adj, leaf_seen);
    return CubicTree::from_adjacency(n, std::move(adj));
}

NodeSplit node_split(const CubicTree& tree, int v) {
    if (!tree.is_internal(v))
        throw std::invalid_argument("node_split: node " + std::to_string(v) + " is not internal");
    NodeSplit split;
    split.node = v;
    std::array<std::vector<int>, 3> sets;
    int b = 0;
    for (int u : tree.neighbors(v)) {
        // Collect the leaves of the component of T - v containing u.
        std::vector<int> stack{u};
        std::vector<bool> seen(static_cast<std::size_t>(tree.num_nodes()), false);
        seen[static_cast<std::size_t>(v)] = true;
        seen[static_cast<std::size_t>(u)] = true;
        while (!stack.empty()) {
            const int w = stack.back();
            stack.pop_back();
            if (tree.is_leaf(w)) sets[static_cast<std::size_t>(b)].push_back(w);
            for (int x : tree.neighbors(w))
                if (!seen[static_cast<std::size_t>(x)]) {
                    seen[static_cast<std::size_t>(x)] = true;
                    stack.push_back(x);
                }
        }
        std::sort(sets[static_cast<std::size_t>(b)].begin(), sets[static_cast<std::size_t>(b)].end());
        ++b;
    }
    std::sort(sets.begin(), sets.end(), [](const std::vector<int>& a, const std::vector<int>& b2) {
        return a.size() != b2.size() ? a.size() < b2.size() : a < b2;
    });
    for (int i = 0; i < 3; ++i) {
        split.counts[static_cast<std::size_t>(i)] = static_cast<int>(sets[static_cast<std::size_t>(i)].size());
        split.leaf_sets[static_cast<std::size_t>(i)] = std::move(sets[static_cast<std::size_t>(i)]);
    }
    return split;
}

}  // namespace codewidth
