#include "tww/sequence.hpp"

#include <algorithm>
#include <string>

namespace tww {

namespace {

int checked_capacity(const ContractionSequence& seq) {
    const int n = seq.base.vertex_count();
    if (n == 0)
        throw invalid_input("empty base graph");
    if (static_cast<int>(seq.steps.size()) > n - 1)
        throw invalid_input("sequence has more steps than a full sequence allows (" +
                            std::to_string(seq.steps.size()) + " > " + std::to_string(n - 1) + ")");
    int cap = n;
    for (const auto& step : seq.steps)
        cap = std::max(cap, step.w + 1);
    return cap;
}

[[noreturn]] void step_fail(int index, const std::string& what) {
    throw invalid_input("step " + std::to_string(index) + ": " + what);
}

void check_step(const bitset& present, const bitset& ever_used, const ContractionStep& s, int i) {
    auto missing = [&](int x) { return x < 0 || x >= static_cast<int>(present.size()) || !present.test(x); };
    if (missing(s.u))
        step_fail(i, "references missing vertex u = " + std::to_string(s.u));
    if (missing(s.v))
        step_fail(i, "references missing vertex v = " + std::to_string(s.v));
    if (s.u == s.v)
        step_fail(i, "contracts vertex " + std::to_string(s.u) + " with itself");
    if (s.w < 0 || ever_used.test(s.w))
        step_fail(i, "duplicate fresh id w = " + std::to_string(s.w));
}

// Shared degree bookkeeping: counts per degree value plus the running max.
struct DegreeLedger {
    std::vector<long> count;
    int cur_max = 0;

    explicit DegreeLedger(int cap) : count(cap + 1, 0) { count[0] = cap; }

    void change(int from, int to) {
        --count[from];
        ++count[to];
        cur_max = std::max(cur_max, to);
    }
    int settle() {
        while (cur_max > 0 && count[cur_max] == 0)
            --cur_max;
        return cur_max;
    }
};

} // namespace

WidthReport verify(const ContractionSequence& seq, bool require_full) {
    const int n = seq.base.vertex_count();
    const int cap = checked_capacity(seq);

    bitset present(cap), ever_used(cap);
    std::vector<bitset> black(cap, bitset(cap)), red(cap, bitset(cap));
    for (int v = 0; v < n; ++v) {
        present.set(v);
        ever_used.set(v);
        black[v] = seq.base.neighbors(v);
        black[v].resize(cap);
    }

    std::vector<int> red_deg(cap, 0);
    DegreeLedger ledger(cap);

    WidthReport report;
    report.per_step.reserve(seq.steps.size());

    for (int i = 0; i < static_cast<int>(seq.steps.size()); ++i) {
        const auto& s = seq.steps[i];
        check_step(present, ever_used, s, i);
        const int u = s.u, v = s.v, w = s.w;
        present.set(w);
        ever_used.set(w);

        bitset both = black[u] & black[v];
        bitset any = black[u] | black[v] | red[u] | red[v];
        both.reset(u);
        both.reset(v);
        any.reset(u);
        any.reset(v);
        bitset reds = any - both;

        black[w] = both;
        red[w] = reds;
        for (auto z = both.find_first(); z != bitset::npos; z = both.find_next(z))
            black[z].set(w);
        for (auto z = reds.find_first(); z != bitset::npos; z = reds.find_next(z))
            red[z].set(w);

        for (int x : {u, v}) {
            for (auto z = black[x].find_first(); z != bitset::npos; z = black[x].find_next(z))
                black[z].reset(x);
            for (auto z = red[x].find_first(); z != bitset::npos; z = red[x].find_next(z))
                red[z].reset(x);
            black[x].reset();
            red[x].reset();
            present.reset(x);
            ledger.change(red_deg[x], 0);
            red_deg[x] = 0;
        }
        ledger.change(0, static_cast<int>(reds.count()));
        red_deg[w] = static_cast<int>(reds.count());
        // only vertices in reds can have gained or lost red edges
        for (auto z = reds.find_first(); z != bitset::npos; z = reds.find_next(z)) {
            const int d = static_cast<int>(red[z].count());
            if (d != red_deg[z]) {
                ledger.change(red_deg[z], d);
                red_deg[z] = d;
            }
        }

        const int step_max = ledger.settle();
        report.per_step.emplace_back(i, step_max);
        report.width = std::max(report.width, step_max);
    }

    report.partial = static_cast<int>(seq.steps.size()) < n - 1;
    if (require_full && report.partial)
        throw invalid_input("sequence does not end at a single vertex (" +
                            std::to_string(seq.steps.size()) + " of " + std::to_string(n - 1) +
                            " steps)");
    return report;
}

WidthReport verify_oriented(const ContractionSequence& seq, bool require_full) {
    const int n = seq.base.vertex_count();
    const int cap = checked_capacity(seq);

    bitset present(cap), ever_used(cap);
    std::vector<bitset> black(cap, bitset(cap)), out(cap, bitset(cap)), in(cap, bitset(cap));
    for (int v = 0; v < n; ++v) {
        present.set(v);
        ever_used.set(v);
        black[v] = seq.base.neighbors(v);
        black[v].resize(cap);
    }

    std::vector<int> out_deg(cap, 0);
    DegreeLedger ledger(cap);

    WidthReport report;
    report.per_step.reserve(seq.steps.size());

    for (int i = 0; i < static_cast<int>(seq.steps.size()); ++i) {
        const auto& s = seq.steps[i];
        check_step(present, ever_used, s, i);
        const int u = s.u, v = s.v, w = s.w;
        present.set(w);
        ever_used.set(w);

        bitset red_u = out[u] | in[u];
        bitset red_v = out[v] | in[v];
        bitset both = black[u] & black[v];
        bitset any = black[u] | black[v] | red_u | red_v;
        both.reset(u);
        both.reset(v);
        any.reset(u);
        any.reset(v);
        bitset reds = any - both;

        black[w] = both;
        for (auto z = both.find_first(); z != bitset::npos; z = both.find_next(z))
            black[z].set(w);
        for (auto z = reds.find_first(); z != bitset::npos; z = reds.find_next(z)) {
            if (out[z].test(u) && out[z].test(v)) {
                out[z].set(w);
                in[w].set(z);
            } else {
                out[w].set(z);
                in[z].set(w);
            }
        }

        for (int x : {u, v}) {
            for (auto z = black[x].find_first(); z != bitset::npos; z = black[x].find_next(z))
                black[z].reset(x);
            for (auto z = out[x].find_first(); z != bitset::npos; z = out[x].find_next(z))
                in[z].reset(x);
            for (auto z = in[x].find_first(); z != bitset::npos; z = in[x].find_next(z))
                out[z].reset(x);
            black[x].reset();
            out[x].reset();
            in[x].reset();
            present.reset(x);
            ledger.change(out_deg[x], 0);
            out_deg[x] = 0;
        }
        ledger.change(0, static_cast<int>(out[w].count()));
        out_deg[w] = static_cast<int>(out[w].count());
        for (auto z = reds.find_first(); z != bitset::npos; z = reds.find_next(z)) {
            const int d = static_cast<int>(out[z].count());
            if (d != out_deg[z]) {
                ledger.change(out_deg[z], d);
                out_deg[z] = d;
            }
        }

        const int step_max = ledger.settle();
        report.per_step.emplace_back(i, step_max);
        report.width = std::max(report.width, step_max);
    }

    report.partial = static_cast<int>(seq.steps.size()) < n - 1;
    if (require_full && report.partial)
        throw invalid_input("sequence does not end at a single vertex (" +
                            std::to_string(seq.steps.size()) + " of " + std::to_string(n - 1) +
                            " steps)");
    return report;
}

std::vector<Partition> partition_trace(const ContractionSequence& seq) {
    const int n = seq.base.vertex_count();
    const int cap = checked_capacity(seq);

    bitset present(cap), ever_used(cap);
    for (int v = 0; v < n; ++v) {
        present.set(v);
        ever_used.set(v);
    }
    std::vector<std::vector<int>> members(cap);
    for (int v = 0; v < n; ++v)
        members[v] = {v};

    std::vector<Partition> trace;
    trace.reserve(seq.steps.size() + 1);
    trace.push_back(Partition::singletons(n));

    for (int i = 0; i < static_cast<int>(seq.steps.size()); ++i) {
        const auto& s = seq.steps[i];
        check_step(present, ever_used, s, i);
        present.reset(s.u);
        present.reset(s.v);
        present.set(s.w);
        ever_used.set(s.w);
        members[s.w] = std::move(members[s.u]);
        members[s.w].insert(members[s.w].end(), members[s.v].begin(), members[s.v].end());
        members[s.u].clear();
        members[s.v].clear();

        std::vector<std::vector<int>> parts;
        for (auto x = present.find_first(); x != bitset::npos; x = present.find_next(x))
            parts.push_back(members[x]);
        trace.emplace_back(n, std::move(parts));
    }
    return trace;
}

ReplaySnapshot replay_to(const ContractionSequence& seq, int steps) {
    if (steps < 0 || steps > static_cast<int>(seq.steps.size()))
        throw invalid_input("snapshot index out of range: " + std::to_string(steps));
    const int n = seq.base.vertex_count();
    if (n == 0)
        throw invalid_input("empty base graph");

    Trigraph t(seq.base);
    std::vector<std::vector<int>> members(n);
    for (int v = 0; v < n; ++v)
        members[v] = {v};

    for (int i = 0; i < steps; ++i) {
        const auto& s = seq.steps[i];
        t = contract(t, s.u, s.v, s.w);
        if (static_cast<int>(members.size()) <= s.w)
            members.resize(s.w + 1);
        members[s.w] = std::move(members[s.u]);
        members[s.w].insert(members[s.w].end(), members[s.v].begin(), members[s.v].end());
        std::sort(members[s.w].begin(), members[s.w].end());
        members[s.u].clear();
        members[s.v].clear();
    }

    ReplaySnapshot snap;
    snap.ids = t.vertices();
    for (int id : snap.ids)
        snap.members.push_back(members[id]);
    snap.trigraph = std::move(t);
    return snap;
}

OrientedReplaySnapshot replay_oriented_to(const ContractionSequence& seq, int steps) {
    if (steps < 0 || steps > static_cast<int>(seq.steps.size()))
        throw invalid_input("snapshot index out of range: " + std::to_string(steps));
    const int n = seq.base.vertex_count();
    if (n == 0)
        throw invalid_input("empty base graph");

    DiTrigraph d(seq.base);
    std::vector<std::vector<int>> members(n);
    for (int v = 0; v < n; ++v)
        members[v] = {v};

    for (int i = 0; i < steps; ++i) {
        const auto& s = seq.steps[i];
        d = contract_oriented(d, s.u, s.v, s.w);
        if (static_cast<int>(members.size()) <= s.w)
            members.resize(s.w + 1);
        members[s.w] = std::move(members[s.u]);
        members[s.w].insert(members[s.w].end(), members[s.v].begin(), members[s.v].end());
        std::sort(members[s.w].begin(), members[s.w].end());
        members[s.u].clear();
        members[s.v].clear();
    }

    OrientedReplaySnapshot snap;
    snap.ids = d.vertices();
    for (int id : snap.ids)
        snap.members.push_back(members[id]);
    snap.ditrigraph = std::move(d);
    return snap;
}

} // namespace tww
