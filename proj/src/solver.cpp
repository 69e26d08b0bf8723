#include "tww/solver.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <climits>
#include <cstdint>
#include <mutex>
#include <thread>
#include <tuple>
#include <type_traits>
#include <unordered_set>
#include <utility>

namespace tww {

namespace {

constexpr int kMaxExactVertices = 60;

int popcount(std::uint64_t x) { return std::popcount(x); }
std::uint64_t bit(int i) { return std::uint64_t{1} << i; }

struct VecHash {
    std::size_t operator()(const std::vector<std::uint64_t>& v) const {
        std::size_t h = 0x9e3779b97f4a7c15ULL ^ v.size();
        for (std::uint64_t x : v) {
            h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return h;
    }
};

using MemoSet = std::unordered_set<std::vector<std::uint64_t>, VecHash>;

enum class Probe { found, failed, exhausted };

// ---------------------------------------------------------------------
// plain search state: slot-indexed masks; slot i holds the set part[i] of
// original vertices and currently carries vertex id ids[i]

struct PlainState {
    std::uint64_t alive = 0;
    std::vector<std::uint64_t> black, red, part;
    std::vector<int> ids;

    explicit PlainState(const Graph& g) {
        const int n = g.vertex_count();
        black.assign(n, 0);
        red.assign(n, 0);
        part.assign(n, 0);
        ids.resize(n);
        for (int v = 0; v < n; ++v) {
            alive |= bit(v);
            part[v] = bit(v);
            ids[v] = v;
            const bitset& nb = g.neighbors(v);
            for (auto u = nb.find_first(); u != bitset::npos; u = nb.find_next(u))
                black[v] |= bit(static_cast<int>(u));
        }
    }
};

struct PlainCandidate {
    int i, j;          // slots, i < j
    int score;         // max red degree right after the contraction
    bool twin;
};

std::vector<std::uint64_t> plain_key(const PlainState& st) {
    std::vector<std::uint64_t> key;
    key.reserve(popcount(st.alive));
    for (std::uint64_t rest = st.alive; rest; rest &= rest - 1)
        key.push_back(st.part[std::countr_zero(rest)]);
    std::sort(key.begin(), key.end());
    return key;
}

// Resulting max red degree if slots i, j were contracted; -1 when some
// vertex would exceed d. Sets `twin` for true twins (identical black and
// red neighborhoods), whose contraction is always safe to take first.
int plain_probe_pair(const PlainState& st, int i, int j, int d, bool& twin) {
    const std::uint64_t ij = bit(i) | bit(j);
    const std::uint64_t black_w = (st.black[i] & st.black[j]) & ~ij;
    const std::uint64_t any = (st.black[i] | st.black[j] | st.red[i] | st.red[j]) & ~ij;
    const std::uint64_t red_w = any & ~black_w;

    twin = (red_w & ~(st.red[i] | st.red[j])) == 0 &&
           (st.red[i] & ~bit(j)) == (st.red[j] & ~bit(i));

    int worst = popcount(red_w);
    if (worst > d)
        return -1;
    for (std::uint64_t rest = red_w; rest; rest &= rest - 1) {
        const int z = std::countr_zero(rest);
        const int dz = popcount(st.red[z] & ~ij) + 1;
        if (dz > d)
            return -1;
        worst = std::max(worst, dz);
    }
    return worst;
}

void plain_apply(PlainState& st, int i, int j) {
    const std::uint64_t ij = bit(i) | bit(j);
    const std::uint64_t black_w = (st.black[i] & st.black[j]) & ~ij;
    const std::uint64_t any = (st.black[i] | st.black[j] | st.red[i] | st.red[j]) & ~ij;
    const std::uint64_t red_w = any & ~black_w;

    for (std::uint64_t rest = any; rest; rest &= rest - 1) {
        const int z = std::countr_zero(rest);
        st.black[z] &= ~ij;
        st.red[z] &= ~ij;
        if (black_w & bit(z))
            st.black[z] |= bit(i);
        else
            st.red[z] |= bit(i);
    }
    st.black[i] = black_w;
    st.red[i] = red_w;
    st.black[j] = st.red[j] = 0;
    st.part[i] |= st.part[j];
    st.part[j] = 0;
    st.alive &= ~bit(j);
}

struct PlainSearch {
    int d;
    long budget;
    std::size_t memo_capacity;
    bool twin_shortcut = true;

    std::atomic<long>* explored;
    std::atomic<bool>* stop; // set when another worker already found a witness
    MemoSet* failed;
    std::mutex* memo_mutex; // null when single-threaded

    std::vector<ContractionStep> steps;

    bool memo_lookup(const std::vector<std::uint64_t>& key) {
        if (memo_mutex) {
            std::lock_guard<std::mutex> lock(*memo_mutex);
            return failed->count(key) != 0;
        }
        return failed->count(key) != 0;
    }

    void memo_insert(std::vector<std::uint64_t>&& key) {
        if (memo_mutex) {
            std::lock_guard<std::mutex> lock(*memo_mutex);
            if (failed->size() < memo_capacity)
                failed->insert(std::move(key));
            return;
        }
        if (failed->size() < memo_capacity)
            failed->insert(std::move(key));
    }

    Probe dfs(const PlainState& st, int alive_count, int fresh) {
        if (alive_count == 1)
            return Probe::found;
        if (stop && stop->load(std::memory_order_relaxed))
            return Probe::exhausted;
        if (explored->fetch_add(1, std::memory_order_relaxed) >= budget)
            return Probe::exhausted;

        auto key = plain_key(st);
        if (memo_lookup(key))
            return Probe::failed;

        std::vector<PlainCandidate> cands;
        bool have_twin = false;
        for (std::uint64_t ri = st.alive; ri && !have_twin; ri &= ri - 1) {
            const int i = std::countr_zero(ri);
            for (std::uint64_t rj = ri & (ri - 1); rj; rj &= rj - 1) {
                const int j = std::countr_zero(rj);
                bool twin = false;
                const int score = plain_probe_pair(st, i, j, d, twin);
                if (twin && twin_shortcut) {
                    cands.clear();
                    cands.push_back({i, j, score < 0 ? 0 : score, true});
                    have_twin = true;
                    break;
                }
                if (score >= 0)
                    cands.push_back({i, j, score, false});
            }
        }
        std::sort(cands.begin(), cands.end(), [&](const PlainCandidate& a, const PlainCandidate& b) {
            const int au = std::min(st.ids[a.i], st.ids[a.j]), av = std::max(st.ids[a.i], st.ids[a.j]);
            const int bu = std::min(st.ids[b.i], st.ids[b.j]), bv = std::max(st.ids[b.i], st.ids[b.j]);
            return std::tie(a.score, au, av) < std::tie(b.score, bu, bv);
        });

        bool any_exhausted = false;
        for (const auto& cand : cands) {
            PlainState child = st;
            plain_apply(child, cand.i, cand.j);
            const int u = std::min(st.ids[cand.i], st.ids[cand.j]);
            const int v = std::max(st.ids[cand.i], st.ids[cand.j]);
            child.ids[cand.i] = fresh;
            steps.push_back({u, v, fresh});
            const Probe sub = dfs(child, alive_count - 1, fresh + 1);
            if (sub == Probe::found)
                return Probe::found;
            steps.pop_back();
            if (sub == Probe::exhausted)
                any_exhausted = true;
        }
        if (any_exhausted)
            return Probe::exhausted;
        memo_insert(std::move(key));
        return Probe::failed;
    }
};

// ---------------------------------------------------------------------
// oriented search state: red arcs as out/in masks per slot

struct OrientedState {
    std::uint64_t alive = 0;
    std::vector<std::uint64_t> black, out, in, part;
    std::vector<int> ids;

    explicit OrientedState(const Graph& g) {
        const int n = g.vertex_count();
        black.assign(n, 0);
        out.assign(n, 0);
        in.assign(n, 0);
        part.assign(n, 0);
        ids.resize(n);
        for (int v = 0; v < n; ++v) {
            alive |= bit(v);
            part[v] = bit(v);
            ids[v] = v;
            const bitset& nb = g.neighbors(v);
            for (auto u = nb.find_first(); u != bitset::npos; u = nb.find_next(u))
                black[v] |= bit(static_cast<int>(u));
        }
    }
};

std::vector<std::uint64_t> oriented_key(const OrientedState& st) {
    // canonical slot order = ascending part mask; arcs re-indexed by rank
    std::vector<std::pair<std::uint64_t, int>> order;
    order.reserve(popcount(st.alive));
    for (std::uint64_t rest = st.alive; rest; rest &= rest - 1) {
        const int s = std::countr_zero(rest);
        order.emplace_back(st.part[s], s);
    }
    std::sort(order.begin(), order.end());
    std::vector<int> rank(st.part.size(), -1);
    for (int r = 0; r < static_cast<int>(order.size()); ++r)
        rank[order[r].second] = r;

    std::vector<std::uint64_t> key;
    key.reserve(2 * order.size());
    for (const auto& [mask, slot] : order)
        key.push_back(mask);
    for (const auto& [mask, slot] : order) {
        std::uint64_t arcs = 0;
        for (std::uint64_t rest = st.out[slot]; rest; rest &= rest - 1)
            arcs |= bit(rank[std::countr_zero(rest)]);
        key.push_back(arcs);
    }
    return key;
}

int oriented_probe_pair(const OrientedState& st, int i, int j, int d) {
    const std::uint64_t ij = bit(i) | bit(j);
    const std::uint64_t red_i = st.out[i] | st.in[i];
    const std::uint64_t red_j = st.out[j] | st.in[j];
    const std::uint64_t black_w = (st.black[i] & st.black[j]) & ~ij;
    const std::uint64_t any = (st.black[i] | st.black[j] | red_i | red_j) & ~ij;
    const std::uint64_t red_w = any & ~black_w;

    int out_w = 0;
    int worst = 0;
    for (std::uint64_t rest = red_w; rest; rest &= rest - 1) {
        const int z = std::countr_zero(rest);
        const bool toward = (st.out[z] & ij) == ij;
        int dz = popcount(st.out[z] & ~ij);
        if (toward)
            ++dz;
        else
            ++out_w;
        if (dz > d)
            return -1;
        worst = std::max(worst, dz);
    }
    if (out_w > d)
        return -1;
    return std::max(worst, out_w);
}

void oriented_apply(OrientedState& st, int i, int j) {
    const std::uint64_t ij = bit(i) | bit(j);
    const std::uint64_t red_i = st.out[i] | st.in[i];
    const std::uint64_t red_j = st.out[j] | st.in[j];
    const std::uint64_t black_w = (st.black[i] & st.black[j]) & ~ij;
    const std::uint64_t any = (st.black[i] | st.black[j] | red_i | red_j) & ~ij;

    std::uint64_t out_w = 0, in_w = 0;
    for (std::uint64_t rest = any; rest; rest &= rest - 1) {
        const int z = std::countr_zero(rest);
        const bool toward = (st.out[z] & ij) == ij;
        st.black[z] &= ~ij;
        st.out[z] &= ~ij;
        st.in[z] &= ~ij;
        if (black_w & bit(z)) {
            st.black[z] |= bit(i);
        } else if (toward) {
            st.out[z] |= bit(i);
            in_w |= bit(z);
        } else {
            st.in[z] |= bit(i);
            out_w |= bit(z);
        }
    }
    st.black[i] = black_w;
    st.out[i] = out_w;
    st.in[i] = in_w;
    st.black[j] = st.out[j] = st.in[j] = 0;
    st.part[i] |= st.part[j];
    st.part[j] = 0;
    st.alive &= ~bit(j);
}

struct OrientedSearch {
    int d;
    long budget;
    std::size_t memo_capacity;

    std::atomic<long>* explored;
    std::atomic<bool>* stop;
    MemoSet* failed;
    std::mutex* memo_mutex;

    std::vector<ContractionStep> steps;

    bool memo_lookup(const std::vector<std::uint64_t>& key) {
        if (memo_mutex) {
            std::lock_guard<std::mutex> lock(*memo_mutex);
            return failed->count(key) != 0;
        }
        return failed->count(key) != 0;
    }

    void memo_insert(std::vector<std::uint64_t>&& key) {
        if (memo_mutex) {
            std::lock_guard<std::mutex> lock(*memo_mutex);
            if (failed->size() < memo_capacity)
                failed->insert(std::move(key));
            return;
        }
        if (failed->size() < memo_capacity)
            failed->insert(std::move(key));
    }

    Probe dfs(const OrientedState& st, int alive_count, int fresh) {
        if (alive_count == 1)
            return Probe::found;
        if (stop && stop->load(std::memory_order_relaxed))
            return Probe::exhausted;
        if (explored->fetch_add(1, std::memory_order_relaxed) >= budget)
            return Probe::exhausted;

        auto key = oriented_key(st);
        if (memo_lookup(key))
            return Probe::failed;

        std::vector<PlainCandidate> cands;
        for (std::uint64_t ri = st.alive; ri; ri &= ri - 1) {
            const int i = std::countr_zero(ri);
            for (std::uint64_t rj = ri & (ri - 1); rj; rj &= rj - 1) {
                const int j = std::countr_zero(rj);
                const int score = oriented_probe_pair(st, i, j, d);
                if (score >= 0)
                    cands.push_back({i, j, score, false});
            }
        }
        std::sort(cands.begin(), cands.end(), [&](const PlainCandidate& a, const PlainCandidate& b) {
            const int au = std::min(st.ids[a.i], st.ids[a.j]), av = std::max(st.ids[a.i], st.ids[a.j]);
            const int bu = std::min(st.ids[b.i], st.ids[b.j]), bv = std::max(st.ids[b.i], st.ids[b.j]);
            return std::tie(a.score, au, av) < std::tie(b.score, bu, bv);
        });

        bool any_exhausted = false;
        for (const auto& cand : cands) {
            OrientedState child = st;
            oriented_apply(child, cand.i, cand.j);
            const int u = std::min(st.ids[cand.i], st.ids[cand.j]);
            const int v = std::max(st.ids[cand.i], st.ids[cand.j]);
            child.ids[cand.i] = fresh;
            steps.push_back({u, v, fresh});
            const Probe sub = dfs(child, alive_count - 1, fresh + 1);
            if (sub == Probe::found)
                return Probe::found;
            steps.pop_back();
            if (sub == Probe::exhausted)
                any_exhausted = true;
        }
        if (any_exhausted)
            return Probe::exhausted;
        memo_insert(std::move(key));
        return Probe::failed;
    }
};

void check_config(const SolverConfig& cfg) {
    if (cfg.max_width_probe <= 0 || cfg.node_budget <= 0 || cfg.memo_capacity == 0 ||
        cfg.threads <= 0)
        throw invalid_input("solver configuration values must be positive");
}

// Runs one feasibility probe at width d; fans the root branching out to
// cfg.threads workers when asked to. The boolean outcome is independent of
// the schedule; the witness is deterministic only single-threaded.
template <typename State, typename Search>
Probe run_probe(const Graph& g, int d, const SolverConfig& cfg, std::atomic<long>& explored,
                std::vector<ContractionStep>& witness) {
    State root(g);
    const int n = g.vertex_count();
    MemoSet failed;

    if (cfg.threads <= 1) {
        Search search;
        search.d = d;
        search.budget = cfg.node_budget;
        search.memo_capacity = cfg.memo_capacity;
        if constexpr (std::is_same_v<Search, PlainSearch>)
            search.twin_shortcut = cfg.twin_shortcut;
        search.explored = &explored;
        search.stop = nullptr;
        search.failed = &failed;
        search.memo_mutex = nullptr;
        const Probe out = search.dfs(root, n, n);
        if (out == Probe::found)
            witness = search.steps;
        return out;
    }

    // root fan-out: each worker owns a disjoint share of the first-level
    // branches; the memo cache is shared (idempotent entries)
    std::mutex memo_mutex, result_mutex;
    std::atomic<bool> stop{false};
    std::atomic<int> next_branch{0};
    std::atomic<bool> saw_exhausted{false};
    std::vector<std::pair<int, int>> branches;
    for (std::uint64_t ri = root.alive; ri; ri &= ri - 1) {
        const int i = std::countr_zero(ri);
        for (std::uint64_t rj = ri & (ri - 1); rj; rj &= rj - 1)
            branches.emplace_back(i, std::countr_zero(rj));
    }

    std::vector<ContractionStep> found_steps;
    bool found = false;
    auto worker = [&] {
        Search search;
        search.d = d;
        search.budget = cfg.node_budget;
        search.memo_capacity = cfg.memo_capacity;
        if constexpr (std::is_same_v<Search, PlainSearch>)
            search.twin_shortcut = cfg.twin_shortcut;
        search.explored = &explored;
        search.stop = &stop;
        search.failed = &failed;
        search.memo_mutex = &memo_mutex;
        while (true) {
            const int b = next_branch.fetch_add(1);
            if (b >= static_cast<int>(branches.size()) || stop.load())
                return;
            auto [i, j] = branches[b];
            bool twin = false;
            int score;
            if constexpr (std::is_same_v<Search, PlainSearch>)
                score = plain_probe_pair(root, i, j, d, twin);
            else
                score = oriented_probe_pair(root, i, j, d);
            if (score < 0)
                continue;
            State child = root;
            if constexpr (std::is_same_v<Search, PlainSearch>)
                plain_apply(child, i, j);
            else
                oriented_apply(child, i, j);
            const int u = std::min(root.ids[i], root.ids[j]);
            const int v = std::max(root.ids[i], root.ids[j]);
            child.ids[i] = n;
            search.steps.assign(1, {u, v, n});
            const Probe sub = search.dfs(child, n - 1, n + 1);
            if (sub == Probe::found) {
                std::lock_guard<std::mutex> lock(result_mutex);
                if (!found) {
                    found = true;
                    found_steps = search.steps;
                }
                stop.store(true);
                return;
            }
            if (sub == Probe::exhausted)
                saw_exhausted.store(true);
        }
    };

    std::vector<std::thread> pool;
    const int workers = std::min<int>(cfg.threads, std::max<int>(1, static_cast<int>(branches.size())));
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w)
        pool.emplace_back(worker);
    for (auto& th : pool)
        th.join();

    if (found) {
        witness = found_steps;
        return Probe::found;
    }
    return saw_exhausted.load() ? Probe::exhausted : Probe::failed;
}

template <typename State, typename Search>
SolveResult solve_exact(const Graph& g, const SolverConfig& cfg, bool oriented) {
    check_config(cfg);
    const int n = g.vertex_count();
    if (n < 1)
        throw invalid_input("graph must have at least one vertex");
    if (n > kMaxExactVertices)
        throw invalid_input("exact search limited to " + std::to_string(kMaxExactVertices) +
                            " vertices, got " + std::to_string(n));

    SolveResult result;
    result.witness.base = g;
    result.witness.oriented = oriented;
    if (n == 1) {
        result.exact = true;
        return result;
    }

    // certified upper bound first; probing stops once it is reached
    SolveResult greedy = greedy_upper_bound(g);
    int upper = oriented ? verify_oriented(greedy.witness).width : greedy.value;
    std::vector<ContractionStep> best_steps = greedy.witness.steps;

    std::atomic<long> explored{0};
    int d = 0;
    bool exhausted = false;
    for (; d < upper && d <= cfg.max_width_probe; ++d) {
        std::vector<ContractionStep> witness;
        const Probe out = run_probe<State, Search>(g, d, cfg, explored, witness);
        if (out == Probe::found) {
            upper = d;
            best_steps = std::move(witness);
            break;
        }
        if (out == Probe::exhausted) {
            exhausted = true;
            break;
        }
    }

    result.value = upper;
    result.lower_bound = exhausted || d > cfg.max_width_probe ? d : upper;
    result.exact = !exhausted && d <= cfg.max_width_probe;
    result.witness.steps = std::move(best_steps);
    result.explored = explored.load();
    return result;
}

} // namespace

SolveResult exact_twinwidth(const Graph& g, const SolverConfig& cfg) {
    return solve_exact<PlainState, PlainSearch>(g, cfg, false);
}

SolveResult exact_oriented_twinwidth(const Graph& g, const SolverConfig& cfg) {
    return solve_exact<OrientedState, OrientedSearch>(g, cfg, true);
}

SolveResult greedy_upper_bound(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 1)
        throw invalid_input("graph must have at least one vertex");

    const int cap = 2 * n - 1;
    bitset present(std::max(cap, 1));
    std::vector<bitset> black(cap, bitset(cap)), red(cap, bitset(cap));
    std::vector<int> deg(cap, 0);
    for (int v = 0; v < n; ++v) {
        present.set(v);
        black[v] = g.neighbors(v);
        black[v].resize(cap);
    }

    SolveResult result;
    result.witness.base = g;
    long evaluated = 0;

    bitset both(cap), any(cap), reds(cap);
    for (int step = 0; step + 1 < n; ++step) {
        int cur_max = 0, cnt_max = 0;
        for (auto x = present.find_first(); x != bitset::npos; x = present.find_next(x)) {
            if (deg[x] > cur_max) {
                cur_max = deg[x];
                cnt_max = 1;
            } else if (deg[x] == cur_max) {
                ++cnt_max;
            }
        }

        int best_u = -1, best_v = -1, best_score = -1;
        for (auto u = present.find_first(); u != bitset::npos; u = present.find_next(u)) {
            for (auto v = present.find_next(u); v != bitset::npos; v = present.find_next(v)) {
                ++evaluated;
                both = black[u] & black[v];
                any = black[u] | black[v] | red[u] | red[v];
                both.reset(u);
                both.reset(v);
                any.reset(u);
                any.reset(v);
                reds = any - both;

                int local = static_cast<int>(reds.count());
                int affected_at_max = (deg[u] == cur_max) + (deg[v] == cur_max);
                for (auto z = reds.find_first(); z != bitset::npos; z = reds.find_next(z)) {
                    bitset zr = red[z];
                    zr.reset(u);
                    zr.reset(v);
                    const int dz = static_cast<int>(zr.count()) + 1;
                    local = std::max(local, dz);
                    if (deg[z] == cur_max)
                        ++affected_at_max;
                }
                int unaffected = cur_max;
                if (affected_at_max >= cnt_max) {
                    // every current maximizer is touched; recompute the rest
                    unaffected = 0;
                    for (auto z = present.find_first(); z != bitset::npos; z = present.find_next(z))
                        if (z != u && z != v && !reds.test(z))
                            unaffected = std::max(unaffected, deg[z]);
                }
                const int score = std::max(local, unaffected);
                if (best_score < 0 || score < best_score) {
                    best_score = score;
                    best_u = static_cast<int>(u);
                    best_v = static_cast<int>(v);
                }
            }
        }

        const int u = best_u, v = best_v, w = n + step;
        both = black[u] & black[v];
        any = black[u] | black[v] | red[u] | red[v];
        both.reset(u);
        both.reset(v);
        any.reset(u);
        any.reset(v);
        reds = any - both;

        present.set(w);
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
            deg[x] = 0;
        }
        deg[w] = static_cast<int>(reds.count());
        for (auto z = reds.find_first(); z != bitset::npos; z = reds.find_next(z))
            deg[z] = static_cast<int>(red[z].count());

        result.witness.steps.push_back({u, v, w});
    }

    result.value = verify(result.witness, true).width;
    result.lower_bound = 0;
    result.exact = false;
    result.explored = evaluated;
    return result;
}

namespace {

int partition_max_red(const std::vector<std::uint32_t>& parts,
                      const std::vector<std::uint32_t>& adj) {
    const int k = static_cast<int>(parts.size());
    std::vector<int> red_deg(k, 0);
    for (int i = 0; i < k; ++i) {
        for (int j = i + 1; j < k; ++j) {
            bool all = true, none = true;
            for (std::uint32_t rest = parts[i]; rest; rest &= rest - 1) {
                const std::uint32_t hits = adj[std::countr_zero(rest)] & parts[j];
                if (hits != parts[j])
                    all = false;
                if (hits != 0)
                    none = false;
                if (!all && !none)
                    break;
            }
            if (!all && !none) {
                ++red_deg[i];
                ++red_deg[j];
            }
        }
    }
    return *std::max_element(red_deg.begin(), red_deg.end());
}

int enumerate_rec(std::vector<std::uint32_t>& parts, const std::vector<std::uint32_t>& adj) {
    const int k = static_cast<int>(parts.size());
    if (k == 1)
        return 0;
    int best = INT_MAX;
    for (int i = 0; i < k; ++i) {
        for (int j = i + 1; j < k; ++j) {
            std::vector<std::uint32_t> next;
            next.reserve(k - 1);
            for (int x = 0; x < k; ++x)
                if (x != i && x != j)
                    next.push_back(parts[x]);
            next.push_back(parts[i] | parts[j]);
            const int here = partition_max_red(next, adj);
            const int sub = enumerate_rec(next, adj);
            best = std::min(best, std::max(here, sub));
        }
    }
    return best;
}

} // namespace

int enumerate_all_sequences(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 1)
        throw invalid_input("graph must have at least one vertex");
    if (n > 7)
        throw invalid_input("exhaustive enumeration limited to 7 vertices, got " +
                            std::to_string(n));

    std::vector<std::uint32_t> adj(n, 0);
    for (int v = 0; v < n; ++v) {
        const bitset& nb = g.neighbors(v);
        for (auto u = nb.find_first(); u != bitset::npos; u = nb.find_next(u))
            adj[v] |= std::uint32_t{1} << static_cast<int>(u);
    }
    std::vector<std::uint32_t> parts;
    for (int v = 0; v < n; ++v)
        parts.push_back(std::uint32_t{1} << v);
    return enumerate_rec(parts, adj);
}

} // namespace tww
