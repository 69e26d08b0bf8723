#ifndef TWW_GRAPH_HPP
#define TWW_GRAPH_HPP

#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "tww/error.hpp"

namespace tww {

using bitset = boost::dynamic_bitset<std::uint64_t>;

/// Simple undirected graph over contiguous vertex ids 0..n-1, all edges
/// black. Value type: build it, then treat it as frozen.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    int vertex_count() const { return n_; }
    long edge_count() const { return m_; }

    bool has_edge(int u, int v) const;
    void add_edge(int u, int v);
    int degree(int v) const;

    const bitset& neighbors(int v) const;

    /// Edges as (u, v) pairs with u < v, lexicographically sorted.
    std::vector<std::pair<int, int>> edges() const;

    /// Induced subgraph on `keep` (must be distinct, in range); vertices are
    /// relabeled 0..keep.size()-1 in the order given.
    Graph induced(const std::vector<int>& keep) const;

    /// Induced subgraph with one vertex removed, remaining ids compacted in
    /// increasing order.
    Graph without_vertex(int v) const;

    bool operator==(const Graph& other) const;

private:
    void check_vertex(int v, const char* who) const;

    int n_ = 0;
    long m_ = 0;
    std::vector<bitset> adj_;
};

bool is_connected(const Graph& g);
bool is_forest(const Graph& g);
bool is_tree(const Graph& g);

} // namespace tww

#endif
