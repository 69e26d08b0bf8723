#include "tww/witnesses.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace tww {

VertexOrder::VertexOrder(std::vector<int> vertex_at) : vertex_at_(std::move(vertex_at)) {
    const int n = static_cast<int>(vertex_at_.size());
    position_of_.assign(n, -1);
    for (int pos = 0; pos < n; ++pos) {
        const int v = vertex_at_[pos];
        if (v < 0 || v >= n || position_of_[v] != -1)
            throw invalid_input("vertex order is not a bijection");
        position_of_[v] = pos;
    }
}

VertexOrder VertexOrder::identity(int n) {
    std::vector<int> ids(n);
    for (int i = 0; i < n; ++i)
        ids[i] = i;
    return VertexOrder(std::move(ids));
}

int VertexOrder::vertex_at(int pos) const {
    if (pos < 0 || pos >= size())
        throw invalid_input("order position out of range: " + std::to_string(pos));
    return vertex_at_[pos];
}

int VertexOrder::position_of(int v) const {
    if (v < 0 || v >= size())
        throw invalid_input("unknown vertex: v = " + std::to_string(v));
    return position_of_[v];
}

namespace {

// Collapses the subtree below v to a single vertex and returns its current
// id. Invariant kept throughout: each parent sees at most one accumulated
// blob plus at most one freshly returned child blob, so no vertex passes
// red degree 2, and every created red edge leaves the merged vertex.
struct TreeCollapser {
    const std::vector<std::vector<int>>& children;
    std::vector<ContractionStep>& steps;
    int next_id;

    int merge(int a, int b) {
        steps.push_back({std::min(a, b), std::max(a, b), next_id});
        return next_id++;
    }

    int collapse(int v) {
        int acc = -1;
        for (int child : children[v]) {
            const int blob = collapse(child);
            acc = acc < 0 ? blob : merge(acc, blob);
        }
        return acc < 0 ? v : merge(v, acc);
    }
};

std::vector<std::vector<int>> rooted_children(const Graph& tree, int root) {
    const int n = tree.vertex_count();
    std::vector<std::vector<int>> children(n);
    std::vector<int> parent(n, -2);
    parent[root] = -1;
    std::vector<int> stack{root};
    while (!stack.empty()) {
        const int u = stack.back();
        stack.pop_back();
        const bitset& nb = tree.neighbors(u);
        for (auto v = nb.find_first(); v != bitset::npos; v = nb.find_next(v))
            if (parent[v] == -2) {
                parent[v] = u;
                children[u].push_back(static_cast<int>(v));
                stack.push_back(static_cast<int>(v));
            }
    }
    for (auto& c : children)
        std::sort(c.begin(), c.end());
    return children;
}

} // namespace

ContractionSequence tree_sequence(const Graph& tree) {
    if (!is_tree(tree))
        throw invalid_input("input is not a tree (must be connected and acyclic)");

    ContractionSequence seq;
    seq.base = tree;
    const int n = tree.vertex_count();
    if (n == 1)
        return seq;

    auto children = rooted_children(tree, 0);
    TreeCollapser collapser{children, seq.steps, n};
    collapser.collapse(0);
    return seq;
}

ContractionSequence gt_oriented_sequence(const GtGraph& gt) {
    const int n = gt.graph.vertex_count();
    const int t = gt.params.t;
    if (n < t + 1 || gt.root != t)
        throw invalid_input("not a generated apex-tree instance");

    ContractionSequence seq;
    seq.base = gt.graph;
    seq.oriented = true;

    std::vector<std::vector<int>> children(n);
    for (int v = 0; v < n; ++v)
        if (gt.parent[v] >= 0)
            children[gt.parent[v]].push_back(v);

    TreeCollapser collapser{children, seq.steps, n};
    const int tree_blob = collapser.collapse(gt.root);

    // t+1 vertices remain: the apexes and the collapsed tree
    std::vector<int> rest = gt.apexes;
    rest.push_back(tree_blob);
    std::sort(rest.begin(), rest.end());
    int acc = rest[0];
    for (std::size_t i = 1; i < rest.size(); ++i)
        acc = collapser.merge(acc, rest[i]);
    return seq;
}

VertexOrder gt_order(const GtGraph& gt) {
    const int n = gt.graph.vertex_count();
    std::vector<int> pos(n, -1);

    // positions within each layer, top-down: sort by (parent position, code)
    std::vector<std::vector<int>> layout(gt.layers.size());
    layout[0] = {gt.root};
    pos[gt.root] = 0;
    for (std::size_t d = 1; d < gt.layers.size(); ++d) {
        layout[d] = gt.layers[d];
        std::sort(layout[d].begin(), layout[d].end(), [&](int a, int b) {
            return std::make_pair(pos[gt.parent[a]], gt.code[a]) <
                   std::make_pair(pos[gt.parent[b]], gt.code[b]);
        });
        for (int i = 0; i < static_cast<int>(layout[d].size()); ++i)
            pos[layout[d][i]] = i;
    }

    std::vector<int> order = gt.apexes;
    for (std::size_t d = layout.size(); d-- > 0;)
        order.insert(order.end(), layout[d].begin(), layout[d].end());
    return VertexOrder(std::move(order));
}

} // namespace tww
