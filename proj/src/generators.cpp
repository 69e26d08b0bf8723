#include "tww/generators.hpp"

#include <random>
#include <set>

namespace tww {

GtGraph build_gt(const GtParams& params, long long max_vertices) {
    if (params.t < 1)
        throw invalid_input("apex count must be at least 1, got " + std::to_string(params.t));
    if (params.depth < 1)
        throw invalid_input("depth must be at least 1, got " + std::to_string(params.depth));
    if (params.t > 20)
        throw invalid_input("arity 2^t too large: t = " + std::to_string(params.t));

    const long long arity = params.arity();
    long long tree_nodes = 1, layer = 1;
    for (int d = 0; d < params.depth; ++d) {
        layer *= arity;
        tree_nodes += layer;
        if (tree_nodes + params.t > max_vertices)
            throw invalid_input("instance too large: more than " + std::to_string(max_vertices) +
                                " vertices at t = " + std::to_string(params.t) + ", depth = " +
                                std::to_string(params.depth));
    }

    const int n = static_cast<int>(params.t + tree_nodes);
    GtGraph out;
    out.params = params;
    out.graph = Graph(n);
    out.parent.assign(n, -1);
    out.node_depth.assign(n, -1);
    out.code.assign(n, 0);

    for (int x = 0; x < params.t; ++x)
        out.apexes.push_back(x);

    out.root = params.t;
    out.node_depth[out.root] = 0;
    out.layers.push_back({out.root});

    int next = out.root + 1;
    for (int d = 1; d <= params.depth; ++d) {
        std::vector<int> current;
        current.reserve(out.layers[d - 1].size() * arity);
        for (int p : out.layers[d - 1]) {
            for (long long c = 0; c < arity; ++c) {
                const int child = next++;
                out.parent[child] = p;
                out.node_depth[child] = d;
                out.code[child] = static_cast<std::uint32_t>(c);
                out.graph.add_edge(p, child);
                for (int x = 0; x < params.t; ++x)
                    if ((c >> x) & 1)
                        out.graph.add_edge(child, x);
                current.push_back(child);
            }
        }
        out.layers.push_back(std::move(current));
    }
    return out;
}

Graph build_paley(long long q) {
    if (q < 2)
        throw invalid_input("q must be a prime congruent to 1 mod 4, got " + std::to_string(q));
    for (long long d = 2; d * d <= q; ++d)
        if (q % d == 0)
            throw invalid_input("q is not prime: " + std::to_string(q));
    if (q % 4 != 1)
        throw invalid_input("q is not congruent to 1 mod 4: " + std::to_string(q));
    if (q > 10000)
        throw invalid_input("q too large: " + std::to_string(q));

    std::set<long long> residues;
    for (long long x = 1; x < q; ++x)
        residues.insert((x * x) % q);

    Graph g(static_cast<int>(q));
    for (long long i = 0; i < q; ++i)
        for (long long j = i + 1; j < q; ++j)
            if (residues.count((j - i) % q))
                g.add_edge(static_cast<int>(i), static_cast<int>(j));
    return g;
}

Graph fig1_graph() {
    // vertices a..g = 0..6
    Graph g(7);
    const int a = 0, b = 1, c = 2, d = 3, e = 4, f = 5, gg = 6;
    for (auto [x, y] : std::vector<std::pair<int, int>>{{a, b},
                                                        {a, d},
                                                        {a, f},
                                                        {b, c},
                                                        {b, d},
                                                        {b, e},
                                                        {b, f},
                                                        {c, e},
                                                        {c, f},
                                                        {d, e},
                                                        {d, gg},
                                                        {e, gg},
                                                        {f, gg}})
        g.add_edge(x, y);
    return g;
}

ContractionSequence fig1_sequence() {
    ContractionSequence seq;
    seq.base = fig1_graph();
    // e*f, a*d, b*ef, ad*g, bef*c, then the final merge
    seq.steps = {{4, 5, 7}, {0, 3, 8}, {1, 7, 9}, {8, 6, 10}, {9, 2, 11}, {10, 11, 12}};
    return seq;
}

Graph build_kary_tree(int arity, int depth) {
    if (arity < 1)
        throw invalid_input("arity must be at least 1, got " + std::to_string(arity));
    if (depth < 0)
        throw invalid_input("depth must be nonnegative, got " + std::to_string(depth));

    long long count = 1, layer = 1;
    for (int d = 0; d < depth; ++d) {
        layer *= arity;
        count += layer;
        if (count > 2'000'000)
            throw invalid_input("tree too large");
    }
    Graph g(static_cast<int>(count));
    int next = 1;
    std::vector<int> frontier{0};
    for (int d = 0; d < depth; ++d) {
        std::vector<int> current;
        current.reserve(frontier.size() * arity);
        for (int p : frontier)
            for (int c = 0; c < arity; ++c) {
                g.add_edge(p, next);
                current.push_back(next++);
            }
        frontier = std::move(current);
    }
    return g;
}

Graph random_tree(int n, std::uint64_t seed) {
    if (n < 1)
        throw invalid_input("tree needs at least one vertex");
    std::mt19937_64 rng(seed);
    Graph g(n);
    for (int v = 1; v < n; ++v)
        g.add_edge(v, static_cast<int>(rng() % v));
    return g;
}

Graph random_graph(int n, double p, std::uint64_t seed) {
    if (n < 0)
        throw invalid_input("negative vertex count");
    if (p < 0.0 || p > 1.0)
        throw invalid_input("edge probability out of [0, 1]: " + std::to_string(p));
    std::mt19937_64 rng(seed);
    // fixed-point threshold keeps the draw identical across standard libraries
    const std::uint64_t threshold =
        p >= 1.0 ? ~std::uint64_t{0} : static_cast<std::uint64_t>(p * 18446744073709551616.0);
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            const std::uint64_t draw = rng();
            if (p >= 1.0 || draw < threshold)
                g.add_edge(u, v);
        }
    return g;
}

} // namespace tww
