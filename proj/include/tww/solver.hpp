#ifndef TWW_SOLVER_HPP
#define TWW_SOLVER_HPP

#include "tww/graph.hpp"
#include "tww/sequence.hpp"

namespace tww {

struct SolverConfig {
    int max_width_probe = 64;           // give up probing beyond this width
    long node_budget = 200'000'000;     // search nodes across all probes
    std::size_t memo_capacity = 4'000'000; // dead-state cache entries per probe
    int threads = 1;                    // worker threads for the root fan-out
    bool twin_shortcut = true;          // contract true twins without branching
                                        // (off: validation against plain search)
};

/// Outcome of a width computation. `witness` is always a full sequence
/// achieving `value`; with `exact`, value is the true width and
/// lower_bound == value. On budget exhaustion the result degrades to the
/// interval [lower_bound, value] with exact = false, never a guess.
struct SolveResult {
    int value = 0;
    int lower_bound = 0;
    ContractionSequence witness;
    long explored = 0;
    bool exact = false;
};

/// Exact twin-width by iterative deepening over the probe width d: DFS over
/// contraction pairs, pruning any branch where some vertex exceeds red
/// degree d, with failed canonical partition states memoized per probe.
SolveResult exact_twinwidth(const Graph& g, const SolverConfig& cfg = {});

/// Exact oriented twin-width; search states carry arc directions, and so do
/// the memo keys (orientation depends on history, not just the partition).
SolveResult exact_oriented_twinwidth(const Graph& g, const SolverConfig& cfg = {});

/// Upper bound: repeatedly contracts the pair minimizing the resulting
/// maximum red degree (ties by smallest ids); the returned width is replayed
/// through verify, so it is always a sound certificate.
SolveResult greedy_upper_bound(const Graph& g);

/// Independent oracle: walk every full contraction sequence (no pruning, no
/// memoization) and return the minimum width, computed via the partition /
/// quotient view rather than trigraph contraction. |V| <= 7.
int enumerate_all_sequences(const Graph& g);

} // namespace tww

#endif
