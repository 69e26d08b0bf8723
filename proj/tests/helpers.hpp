#ifndef TWW_TEST_HELPERS_HPP
#define TWW_TEST_HELPERS_HPP

#include <random>
#include <utility>
#include <vector>

#include "tww/partition.hpp"
#include "tww/sequence.hpp"

namespace tww::test {

inline Graph make_graph(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges)
        g.add_edge(u, v);
    return g;
}

inline Graph path(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v)
        g.add_edge(v, v + 1);
    return g;
}

inline Graph cycle(int n) {
    Graph g = path(n);
    g.add_edge(n - 1, 0);
    return g;
}

inline Graph complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            g.add_edge(u, v);
    return g;
}

inline Graph star(int leaves) {
    Graph g(leaves + 1);
    for (int v = 1; v <= leaves; ++v)
        g.add_edge(0, v);
    return g;
}

/// Uniformly random full contraction sequence over g.
inline ContractionSequence random_sequence(const Graph& g, std::mt19937_64& rng) {
    ContractionSequence seq;
    seq.base = g;
    std::vector<int> alive(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v)
        alive[v] = v;
    int fresh = g.vertex_count();
    while (alive.size() > 1) {
        const int i = static_cast<int>(rng() % alive.size());
        int j = static_cast<int>(rng() % (alive.size() - 1));
        if (j >= i)
            ++j;
        seq.steps.push_back({alive[i], alive[j], fresh});
        alive[std::min(i, j)] = fresh++;
        alive.erase(alive.begin() + std::max(i, j));
    }
    return seq;
}

/// The snapshot's surviving vertices, as a partition of the base set.
inline Partition snapshot_partition(int n, const ReplaySnapshot& snap) {
    return Partition(n, snap.members);
}

/// True when the snapshot trigraph equals q under the bijection that sends
/// each surviving vertex to the quotient vertex of its member set (parts in
/// both are identified by smallest member).
inline bool matches_quotient(const ReplaySnapshot& snap, const Partition& parts,
                             const Trigraph& q) {
    const int k = static_cast<int>(snap.ids.size());
    if (q.vertex_count() != k)
        return false;
    std::vector<int> to_quotient(k);
    for (int i = 0; i < k; ++i) {
        // members are sorted, so front() is the smallest
        to_quotient[i] = parts.part_of(snap.members[i].front());
    }
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            const int a = snap.ids[i], b = snap.ids[j];
            const int qa = to_quotient[i], qb = to_quotient[j];
            if (snap.trigraph.black(a, b) != q.black(qa, qb))
                return false;
            if (snap.trigraph.red(a, b) != q.red(qa, qb))
                return false;
        }
    return true;
}

} // namespace tww::test

#endif
