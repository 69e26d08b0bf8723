#include "tww/graph.hpp"

#include <string>

namespace tww {

Graph::Graph(int n) : n_(n) {
    if (n < 0)
        throw invalid_input("negative vertex count: " + std::to_string(n));
    adj_.assign(n_, bitset(n_));
}

void Graph::check_vertex(int v, const char* who) const {
    if (v < 0 || v >= n_)
        throw invalid_input(std::string("unknown vertex: ") + who + " = " +
                            std::to_string(v) + " (n = " + std::to_string(n_) + ")");
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u, "u");
    check_vertex(v, "v");
    return u != v && adj_[u].test(v);
}

void Graph::add_edge(int u, int v) {
    check_vertex(u, "u");
    check_vertex(v, "v");
    if (u == v)
        throw invalid_input("self-loop rejected: vertex " + std::to_string(u));
    if (adj_[u].test(v))
        return;
    adj_[u].set(v);
    adj_[v].set(u);
    ++m_;
}

int Graph::degree(int v) const {
    check_vertex(v, "v");
    return static_cast<int>(adj_[v].count());
}

const bitset& Graph::neighbors(int v) const {
    check_vertex(v, "v");
    return adj_[v];
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u)
        for (auto v = adj_[u].find_next(u); v != bitset::npos; v = adj_[u].find_next(v))
            out.emplace_back(u, static_cast<int>(v));
    return out;
}

Graph Graph::induced(const std::vector<int>& keep) const {
    Graph h(static_cast<int>(keep.size()));
    std::vector<int> new_id(n_, -1);
    for (int i = 0; i < static_cast<int>(keep.size()); ++i) {
        check_vertex(keep[i], "keep");
        if (new_id[keep[i]] != -1)
            throw invalid_input("duplicate vertex in induced set: " + std::to_string(keep[i]));
        new_id[keep[i]] = i;
    }
    for (int i = 0; i < static_cast<int>(keep.size()); ++i) {
        const bitset& nb = adj_[keep[i]];
        for (auto v = nb.find_first(); v != bitset::npos; v = nb.find_next(v))
            if (new_id[v] > i)
                h.add_edge(i, new_id[v]);
    }
    return h;
}

Graph Graph::without_vertex(int v) const {
    check_vertex(v, "v");
    std::vector<int> keep;
    keep.reserve(n_ - 1);
    for (int u = 0; u < n_; ++u)
        if (u != v)
            keep.push_back(u);
    return induced(keep);
}

bool Graph::operator==(const Graph& other) const {
    return n_ == other.n_ && m_ == other.m_ && adj_ == other.adj_;
}

bool is_connected(const Graph& g) {
    const int n = g.vertex_count();
    if (n <= 1)
        return true;
    bitset seen(n);
    std::vector<int> stack{0};
    seen.set(0);
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        const bitset& nb = g.neighbors(u);
        for (auto v = nb.find_first(); v != bitset::npos; v = nb.find_next(v))
            if (!seen.test(v)) {
                seen.set(v);
                stack.push_back(static_cast<int>(v));
            }
    }
    return seen.count() == static_cast<std::size_t>(n);
}

bool is_forest(const Graph& g) {
    // acyclic iff every connected component has |E| = |V| - 1; a DFS that
    // revisits a non-parent vertex witnesses a cycle
    const int n = g.vertex_count();
    std::vector<int> parent(n, -2);
    for (int s = 0; s < n; ++s) {
        if (parent[s] != -2)
            continue;
        parent[s] = -1;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            const bitset& nb = g.neighbors(u);
            for (auto v = nb.find_first(); v != bitset::npos; v = nb.find_next(v)) {
                if (static_cast<int>(v) == parent[u])
                    continue;
                if (parent[v] != -2)
                    return false;
                parent[v] = u;
                stack.push_back(static_cast<int>(v));
            }
        }
    }
    return true;
}

bool is_tree(const Graph& g) {
    return g.vertex_count() >= 1 && g.edge_count() == g.vertex_count() - 1 && is_connected(g);
}

} // namespace tww
