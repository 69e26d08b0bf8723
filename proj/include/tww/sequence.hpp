#ifndef TWW_SEQUENCE_HPP
#define TWW_SEQUENCE_HPP

#include <utility>
#include <vector>

#include "tww/graph.hpp"
#include "tww/partition.hpp"
#include "tww/trigraph.hpp"

namespace tww {

/// One merge: u and v become the fresh vertex w. The i-th step of a
/// sequence over an n-vertex graph must use w = n + i.
struct ContractionStep {
    int u = 0;
    int v = 0;
    int w = 0;

    bool operator==(const ContractionStep&) const = default;
};

/// A (partial) contraction sequence over its base graph. A full sequence
/// has n - 1 steps and ends at a single vertex; anything shorter is a
/// partial sequence, which is a first-class object here.
struct ContractionSequence {
    Graph base;
    std::vector<ContractionStep> steps;
    bool oriented = false;

    bool full() const {
        return base.vertex_count() > 0 &&
               static_cast<int>(steps.size()) == base.vertex_count() - 1;
    }
};

struct WidthReport {
    int width = 0;                              // max red degree over all trigraphs
    std::vector<std::pair<int, int>> per_step;  // (step index, max red degree after it)
    bool partial = false;
};

/// Replay the steps and report the maximum red degree seen anywhere
/// (the base graph contributes 0). Malformed steps throw invalid_input
/// naming the step index; with require_full, a sequence not ending at a
/// single vertex is also rejected.
WidthReport verify(const ContractionSequence& seq, bool require_full = false);

/// Same replay with directed red arcs; the reported width is the maximum
/// number of out-going arcs at any vertex of any ditrigraph.
WidthReport verify_oriented(const ContractionSequence& seq, bool require_full = false);

/// The coarsening chain P_n, ..., P_{n-|steps|}; entry 0 is all singletons,
/// entry i merges the parts of step i-1.
std::vector<Partition> partition_trace(const ContractionSequence& seq);

/// Trigraph after the first `steps` steps, plus the original vertices
/// behind every surviving id (parallel to `ids`).
struct ReplaySnapshot {
    Trigraph trigraph;
    std::vector<int> ids;                   // surviving vertex ids, ascending
    std::vector<std::vector<int>> members;  // original vertices per id
};

ReplaySnapshot replay_to(const ContractionSequence& seq, int steps);

/// Oriented snapshot of the same prefix.
struct OrientedReplaySnapshot {
    DiTrigraph ditrigraph;
    std::vector<int> ids;
    std::vector<std::vector<int>> members;
};

OrientedReplaySnapshot replay_oriented_to(const ContractionSequence& seq, int steps);

} // namespace tww

#endif
