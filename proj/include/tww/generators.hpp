#ifndef TWW_GENERATORS_HPP
#define TWW_GENERATORS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "tww/graph.hpp"
#include "tww/sequence.hpp"

namespace tww {

using Rational = boost::rational<long long>;

/// Parameters of a truncated apex-tree instance: t apex vertices over the
/// full 2^t-ary tree of the given depth (root-to-leaf edges).
struct GtParams {
    int t = 1;
    int depth = 1;

    long long arity() const { return 1LL << t; }
};

/// The built instance. Ids: apexes 0..t-1, then tree nodes breadth-first
/// (root = t), children in increasing neighborhood-code order.
struct GtGraph {
    Graph graph;
    GtParams params;
    std::vector<int> apexes;             // ascending
    int root = 0;
    std::vector<std::vector<int>> layers; // layers[d] = tree nodes at depth d
    std::vector<int> parent;              // -1 for apexes and the root
    std::vector<int> node_depth;          // -1 for apexes
    std::vector<std::uint32_t> code;      // neighborhood in X; 0 for apexes/root
};

/// Build the instance; throws when the vertex count would exceed
/// max_vertices.
GtGraph build_gt(const GtParams& params, long long max_vertices = 1'000'000);

/// One coefficient * 2^exponent term with exact rational parts.
struct ExpTerm {
    Rational coeff;
    Rational exponent;
};

/// Report on the tree-depth formula: the depth value f(t) at which the
/// construction's lower bound holds, evaluated in extended precision, never
/// used to size a built graph.
struct DepthFormulaReport {
    Rational a;                      // (1 - eps) * t
    Rational ct_coeff;               // C_t = ct_coeff * 2^a, i.e. 1/eps
    std::vector<ExpTerm> inner_exponent; // exact expression of the 2^... exponent
    double inner_exponent_value = 0; // the same, numerically
    double log2_f_minus_2 = 0;       // log2(f(t) - 2)
    std::string f_decimal;           // exact ceiled integer; empty when too large
    bool f_materialized = false;
    int precision_bits = 0;
};

/// Evaluate f(t) = ceil(2 + C_t * 2^E) with C_t = 2^{(1-eps)t}/eps and
/// E = (1-eps)t * (2 + C_t(2^{(1-eps)t}+1)). Requires 0 < eps <= 1/2 and
/// t > 1/eps. The integer is materialized only while its bit length stays
/// below max_f_bits.
DepthFormulaReport f_of_t(int t, const Rational& eps, int precision_bits = 256,
                          long max_f_bits = 1'000'000);

/// Paley graph on Z_q for a prime q = 1 (mod 4): edge ij iff i - j is a
/// nonzero quadratic residue.
Graph build_paley(long long q);

/// The seven-vertex example graph (a..g = 0..6) and its six-step 2-sequence.
Graph fig1_graph();
ContractionSequence fig1_sequence();

Graph build_kary_tree(int arity, int depth);
Graph random_tree(int n, std::uint64_t seed);
Graph random_graph(int n, double p, std::uint64_t seed);

} // namespace tww

#endif
