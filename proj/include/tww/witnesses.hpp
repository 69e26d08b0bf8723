#ifndef TWW_WITNESSES_HPP
#define TWW_WITNESSES_HPP

#include "tww/generators.hpp"
#include "tww/sequence.hpp"
#include "tww/vertex_order.hpp"

namespace tww {

/// Full contraction sequence for a tree with plain width at most 2 and
/// oriented width at most 1. Post-order collapse: under every node the
/// already-collapsed children are folded into one accumulated blob before
/// the next subtree is touched, then the blob merges into its parent.
/// Rejects non-tree input.
ContractionSequence tree_sequence(const Graph& tree);

/// The witness behind the oriented-width bound of the apex-tree instance:
/// collapse the tree part without touching the apexes, then fold the
/// remaining t+1 vertices in increasing id order. Oriented width <= t+1.
ContractionSequence gt_oriented_sequence(const GtGraph& gt);

/// Vertex order for the grid-number bound: apexes first (ascending id),
/// then tree layers by decreasing depth (leaves first, root last), each
/// layer left to right by (parent position, child code).
VertexOrder gt_order(const GtGraph& gt);

} // namespace tww

#endif
