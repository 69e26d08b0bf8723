#ifndef TWW_TRIGRAPH_HPP
#define TWW_TRIGRAPH_HPP

#include <vector>

#include "tww/graph.hpp"

namespace tww {

/// Graph with black (definite) and red (heterogeneous) edges. Vertex ids
/// live in [0, capacity); not every id is present, because contractions
/// retire two ids and introduce a fresh one. Dense bitset rows per vertex
/// for each color.
///
/// Contraction of u, v into a fresh w keeps wz black exactly when uz and vz
/// were both black, drops wz when neither uz nor vz existed, and makes wz
/// red otherwise; everything not incident to u, v is unchanged.
class Trigraph {
public:
    Trigraph() = default;
    explicit Trigraph(const Graph& g); // all-black copy of g
    explicit Trigraph(int capacity);   // capacity ids, none present yet

    int capacity() const { return static_cast<int>(present_.size()); }
    int vertex_count() const { return static_cast<int>(present_.count()); }
    bool has_vertex(int v) const;
    std::vector<int> vertices() const;

    bool black(int u, int v) const;
    bool red(int u, int v) const;
    const bitset& black_neighbors(int v) const;
    const bitset& red_neighbors(int v) const;

    int red_degree(int v) const;
    int max_red_degree() const;

    // builders; validate ids and the black/red disjointness invariant
    void add_vertex(int v);
    void add_black(int u, int v);
    void add_red(int u, int v);

    bool operator==(const Trigraph& other) const;

    friend Trigraph contract(const Trigraph& t, int u, int v, int w);

private:
    void check_present(int v, const char* who) const;
    void grow(int capacity);

    bitset present_;
    std::vector<bitset> black_, red_;
};

/// Contract u and v into the fresh vertex w; pure, returns a new value.
Trigraph contract(const Trigraph& t, int u, int v, int w);

int red_degree(const Trigraph& t, int v);

/// Trigraph with its red edges directed. An arc u->v is stored on u's
/// out-row; at most one arc per unordered pair. Contracting u, v into w
/// orients the surviving red edge wz toward w only when z had arcs into
/// both u and v; in every other case the arc leaves w.
class DiTrigraph {
public:
    DiTrigraph() = default;
    explicit DiTrigraph(const Graph& g); // all-black, no arcs
    explicit DiTrigraph(int capacity);

    int capacity() const { return static_cast<int>(present_.size()); }
    int vertex_count() const { return static_cast<int>(present_.count()); }
    bool has_vertex(int v) const;
    std::vector<int> vertices() const;

    bool black(int u, int v) const;
    bool arc(int from, int to) const;
    bool red(int u, int v) const; // arc in either direction
    const bitset& black_neighbors(int v) const;
    const bitset& out_neighbors(int v) const;

    int out_red_degree(int v) const;
    int max_out_red_degree() const;

    void add_vertex(int v);
    void add_black(int u, int v);
    void add_arc(int from, int to);

    /// Forget arc directions.
    Trigraph underlying() const;

    friend DiTrigraph contract_oriented(const DiTrigraph& d, int u, int v, int w);

private:
    void check_present(int v, const char* who) const;
    void grow(int capacity);

    bitset present_;
    std::vector<bitset> black_, out_;
};

DiTrigraph contract_oriented(const DiTrigraph& d, int u, int v, int w);

int out_red_degree(const DiTrigraph& d, int v);

} // namespace tww

#endif
