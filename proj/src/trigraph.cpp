#include "tww/trigraph.hpp"

#include <algorithm>
#include <string>

namespace tww {

namespace {

void check_contract_args(const bitset& present, int u, int v, int w, const char* op) {
    auto missing = [&](int x) { return x < 0 || x >= static_cast<int>(present.size()) || !present.test(x); };
    if (missing(u))
        throw invalid_input(std::string(op) + ": unknown vertex u = " + std::to_string(u));
    if (missing(v))
        throw invalid_input(std::string(op) + ": unknown vertex v = " + std::to_string(v));
    if (u == v)
        throw invalid_input(std::string(op) + ": cannot contract a vertex with itself (u = v = " +
                            std::to_string(u) + ")");
    if (w >= 0 && w < static_cast<int>(present.size()) && present.test(w))
        throw invalid_input(std::string(op) + ": merged vertex id already present: w = " +
                            std::to_string(w));
    if (w < 0)
        throw invalid_input(std::string(op) + ": negative merged vertex id: w = " + std::to_string(w));
}

} // namespace

Trigraph::Trigraph(const Graph& g) : Trigraph(g.vertex_count()) {
    for (int v = 0; v < g.vertex_count(); ++v)
        present_.set(v);
    for (int v = 0; v < g.vertex_count(); ++v)
        black_[v] = g.neighbors(v);
}

Trigraph::Trigraph(int capacity) {
    if (capacity < 0)
        throw invalid_input("negative capacity: " + std::to_string(capacity));
    present_.resize(capacity);
    black_.assign(capacity, bitset(capacity));
    red_.assign(capacity, bitset(capacity));
}

void Trigraph::check_present(int v, const char* who) const {
    if (v < 0 || v >= capacity() || !present_.test(v))
        throw invalid_input(std::string("unknown vertex: ") + who + " = " + std::to_string(v));
}

void Trigraph::grow(int capacity) {
    if (capacity <= this->capacity())
        return;
    present_.resize(capacity);
    for (auto& row : black_)
        row.resize(capacity);
    for (auto& row : red_)
        row.resize(capacity);
    black_.resize(capacity, bitset(capacity));
    red_.resize(capacity, bitset(capacity));
}

bool Trigraph::has_vertex(int v) const {
    return v >= 0 && v < capacity() && present_.test(v);
}

std::vector<int> Trigraph::vertices() const {
    std::vector<int> out;
    out.reserve(vertex_count());
    for (auto v = present_.find_first(); v != bitset::npos; v = present_.find_next(v))
        out.push_back(static_cast<int>(v));
    return out;
}

bool Trigraph::black(int u, int v) const {
    check_present(u, "u");
    check_present(v, "v");
    return black_[u].test(v);
}

bool Trigraph::red(int u, int v) const {
    check_present(u, "u");
    check_present(v, "v");
    return red_[u].test(v);
}

const bitset& Trigraph::black_neighbors(int v) const {
    check_present(v, "v");
    return black_[v];
}

const bitset& Trigraph::red_neighbors(int v) const {
    check_present(v, "v");
    return red_[v];
}

int Trigraph::red_degree(int v) const {
    check_present(v, "v");
    return static_cast<int>(red_[v].count());
}

int Trigraph::max_red_degree() const {
    int best = 0;
    for (auto v = present_.find_first(); v != bitset::npos; v = present_.find_next(v))
        best = std::max(best, static_cast<int>(red_[v].count()));
    return best;
}

void Trigraph::add_vertex(int v) {
    if (v < 0)
        throw invalid_input("negative vertex id: " + std::to_string(v));
    grow(v + 1);
    if (present_.test(v))
        throw invalid_input("vertex already present: " + std::to_string(v));
    present_.set(v);
}

void Trigraph::add_black(int u, int v) {
    check_present(u, "u");
    check_present(v, "v");
    if (u == v)
        throw invalid_input("self-loop rejected: vertex " + std::to_string(u));
    if (red_[u].test(v))
        throw invalid_input("edge already red: " + std::to_string(u) + "-" + std::to_string(v));
    black_[u].set(v);
    black_[v].set(u);
}

void Trigraph::add_red(int u, int v) {
    check_present(u, "u");
    check_present(v, "v");
    if (u == v)
        throw invalid_input("self-loop rejected: vertex " + std::to_string(u));
    if (black_[u].test(v))
        throw invalid_input("edge already black: " + std::to_string(u) + "-" + std::to_string(v));
    red_[u].set(v);
    red_[v].set(u);
}

bool Trigraph::operator==(const Trigraph& other) const {
    if (present_ != other.present_)
        return false;
    for (auto v = present_.find_first(); v != bitset::npos; v = present_.find_next(v)) {
        if (black_[v] != other.black_[v] || red_[v] != other.red_[v])
            return false;
    }
    return true;
}

Trigraph contract(const Trigraph& t, int u, int v, int w) {
    check_contract_args(t.present_, u, v, w, "contract");

    Trigraph r = t;
    r.grow(w + 1);
    r.present_.set(w);

    bitset both = r.black_[u] & r.black_[v];
    bitset any = (r.black_[u] | r.black_[v] | r.red_[u] | r.red_[v]);
    both.reset(u);
    both.reset(v);
    any.reset(u);
    any.reset(v);
    bitset reds = any - both;

    r.black_[w] = both;
    r.red_[w] = reds;
    for (auto z = both.find_first(); z != bitset::npos; z = both.find_next(z))
        r.black_[z].set(w);
    for (auto z = reds.find_first(); z != bitset::npos; z = reds.find_next(z))
        r.red_[z].set(w);

    // retire u and v
    for (int x : {u, v}) {
        for (auto z = r.black_[x].find_first(); z != bitset::npos; z = r.black_[x].find_next(z))
            r.black_[z].reset(x);
        for (auto z = r.red_[x].find_first(); z != bitset::npos; z = r.red_[x].find_next(z))
            r.red_[z].reset(x);
        r.black_[x].reset();
        r.red_[x].reset();
        r.present_.reset(x);
    }
    return r;
}

int red_degree(const Trigraph& t, int v) { return t.red_degree(v); }

DiTrigraph::DiTrigraph(const Graph& g) : DiTrigraph(g.vertex_count()) {
    for (int v = 0; v < g.vertex_count(); ++v)
        present_.set(v);
    for (int v = 0; v < g.vertex_count(); ++v)
        black_[v] = g.neighbors(v);
}

DiTrigraph::DiTrigraph(int capacity) {
    if (capacity < 0)
        throw invalid_input("negative capacity: " + std::to_string(capacity));
    present_.resize(capacity);
    black_.assign(capacity, bitset(capacity));
    out_.assign(capacity, bitset(capacity));
}

void DiTrigraph::check_present(int v, const char* who) const {
    if (v < 0 || v >= capacity() || !present_.test(v))
        throw invalid_input(std::string("unknown vertex: ") + who + " = " + std::to_string(v));
}

void DiTrigraph::grow(int capacity) {
    if (capacity <= this->capacity())
        return;
    present_.resize(capacity);
    for (auto& row : black_)
        row.resize(capacity);
    for (auto& row : out_)
        row.resize(capacity);
    black_.resize(capacity, bitset(capacity));
    out_.resize(capacity, bitset(capacity));
}

bool DiTrigraph::has_vertex(int v) const {
    return v >= 0 && v < capacity() && present_.test(v);
}

std::vector<int> DiTrigraph::vertices() const {
    std::vector<int> out;
    out.reserve(vertex_count());
    for (auto v = present_.find_first(); v != bitset::npos; v = present_.find_next(v))
        out.push_back(static_cast<int>(v));
    return out;
}

bool DiTrigraph::black(int u, int v) const {
    check_present(u, "u");
    check_present(v, "v");
    return black_[u].test(v);
}

bool DiTrigraph::arc(int from, int to) const {
    check_present(from, "from");
    check_present(to, "to");
    return out_[from].test(to);
}

bool DiTrigraph::red(int u, int v) const {
    check_present(u, "u");
    check_present(v, "v");
    return out_[u].test(v) || out_[v].test(u);
}

const bitset& DiTrigraph::black_neighbors(int v) const {
    check_present(v, "v");
    return black_[v];
}

const bitset& DiTrigraph::out_neighbors(int v) const {
    check_present(v, "v");
    return out_[v];
}

int DiTrigraph::out_red_degree(int v) const {
    check_present(v, "v");
    return static_cast<int>(out_[v].count());
}

int DiTrigraph::max_out_red_degree() const {
    int best = 0;
    for (auto v = present_.find_first(); v != bitset::npos; v = present_.find_next(v))
        best = std::max(best, static_cast<int>(out_[v].count()));
    return best;
}

void DiTrigraph::add_vertex(int v) {
    if (v < 0)
        throw invalid_input("negative vertex id: " + std::to_string(v));
    grow(v + 1);
    if (present_.test(v))
        throw invalid_input("vertex already present: " + std::to_string(v));
    present_.set(v);
}

void DiTrigraph::add_black(int u, int v) {
    check_present(u, "u");
    check_present(v, "v");
    if (u == v)
        throw invalid_input("self-loop rejected: vertex " + std::to_string(u));
    if (out_[u].test(v) || out_[v].test(u))
        throw invalid_input("edge already red: " + std::to_string(u) + "-" + std::to_string(v));
    black_[u].set(v);
    black_[v].set(u);
}

void DiTrigraph::add_arc(int from, int to) {
    check_present(from, "from");
    check_present(to, "to");
    if (from == to)
        throw invalid_input("self-loop rejected: vertex " + std::to_string(from));
    if (black_[from].test(to))
        throw invalid_input("edge already black: " + std::to_string(from) + "-" + std::to_string(to));
    if (out_[to].test(from))
        throw invalid_input("anti-parallel arc rejected: " + std::to_string(from) + "->" +
                            std::to_string(to));
    out_[from].set(to);
}

Trigraph DiTrigraph::underlying() const {
    Trigraph t(capacity());
    for (auto v = present_.find_first(); v != bitset::npos; v = present_.find_next(v))
        t.add_vertex(static_cast<int>(v));
    for (auto v = present_.find_first(); v != bitset::npos; v = present_.find_next(v)) {
        for (auto z = black_[v].find_next(v); z != bitset::npos; z = black_[v].find_next(z))
            t.add_black(static_cast<int>(v), static_cast<int>(z));
        for (auto z = out_[v].find_first(); z != bitset::npos; z = out_[v].find_next(z))
            if (!t.red(static_cast<int>(v), static_cast<int>(z)))
                t.add_red(static_cast<int>(v), static_cast<int>(z));
    }
    return t;
}

DiTrigraph contract_oriented(const DiTrigraph& d, int u, int v, int w) {
    check_contract_args(d.present_, u, v, w, "contract_oriented");

    DiTrigraph r = d;
    r.grow(w + 1);
    r.present_.set(w);

    bitset red_u = r.out_[u];
    bitset red_v = r.out_[v];
    for (auto z = r.present_.find_first(); z != bitset::npos; z = r.present_.find_next(z)) {
        if (r.out_[z].test(u))
            red_u.set(z);
        if (r.out_[z].test(v))
            red_v.set(z);
    }

    bitset both_black = r.black_[u] & r.black_[v];
    bitset any = r.black_[u] | r.black_[v] | red_u | red_v;
    both_black.reset(u);
    both_black.reset(v);
    any.reset(u);
    any.reset(v);
    bitset reds = any - both_black;

    r.black_[w] = both_black;
    for (auto z = both_black.find_first(); z != bitset::npos; z = both_black.find_next(z))
        r.black_[z].set(w);
    for (auto z = reds.find_first(); z != bitset::npos; z = reds.find_next(z)) {
        // toward w only when z pointed into both contracted vertices
        if (r.out_[z].test(u) && r.out_[z].test(v))
            r.out_[z].set(w);
        else
            r.out_[w].set(static_cast<int>(z));
    }

    for (int x : {u, v}) {
        for (auto z = r.black_[x].find_first(); z != bitset::npos; z = r.black_[x].find_next(z))
            r.black_[z].reset(x);
        r.black_[x].reset();
        r.out_[x].reset();
        for (auto z = r.present_.find_first(); z != bitset::npos; z = r.present_.find_next(z))
            r.out_[z].reset(x);
        r.present_.reset(x);
    }
    return r;
}

int out_red_degree(const DiTrigraph& d, int v) { return d.out_red_degree(v); }

} // namespace tww
