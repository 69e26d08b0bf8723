#include "tww/io.hpp"

#include <fstream>
#include <sstream>

namespace tww {

namespace {

// Strip comments and blank lines; returns false at end of input.
bool next_content_line(std::istream& in, std::string& line) {
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        auto end = line.find_last_not_of(" \t\r");
        if (end == std::string::npos)
            continue;
        line.erase(end + 1);
        return true;
    }
    return false;
}

[[noreturn]] void bad(const std::string& what) { throw parse_error(what); }

std::ifstream open_in(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        bad("cannot open file: " + path);
    return in;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out)
        bad("cannot write file: " + path);
    return out;
}

} // namespace

Graph read_graph(std::istream& in) {
    std::string line;
    if (!next_content_line(in, line))
        bad("graph file: missing header");
    std::istringstream head(line);
    std::string tag;
    long n = -1, m = -1;
    if (!(head >> tag >> n >> m) || tag != "g" || n < 0 || m < 0)
        bad("graph file: expected header 'g <n> <m>', got '" + line + "'");

    Graph g(static_cast<int>(n));
    long seen = 0;
    while (next_content_line(in, line)) {
        std::istringstream row(line);
        long u = 0, v = 0;
        if (!(row >> tag >> u >> v) || tag != "e")
            bad("graph file: expected 'e <u> <v>', got '" + line + "'");
        if (u < 1 || u > n || v < 1 || v > n)
            bad("graph file: vertex out of range in '" + line + "'");
        if (u == v)
            bad("graph file: self-loop in '" + line + "'");
        g.add_edge(static_cast<int>(u - 1), static_cast<int>(v - 1));
        ++seen;
    }
    if (seen != m || g.edge_count() != m)
        bad("graph file: header announces " + std::to_string(m) + " edges, found " +
            std::to_string(seen));
    return g;
}

void write_graph(std::ostream& out, const Graph& g) {
    out << "g " << g.vertex_count() << " " << g.edge_count() << "\n";
    for (const auto& [u, v] : g.edges())
        out << "e " << u + 1 << " " << v + 1 << "\n";
}

std::vector<ContractionStep> read_steps(std::istream& in, int expect_n) {
    std::string line;
    if (!next_content_line(in, line))
        bad("sequence file: missing header");
    std::istringstream head(line);
    std::string tag;
    long n = -1;
    if (!(head >> tag >> n) || tag != "seq" || n < 1)
        bad("sequence file: expected header 'seq <n>', got '" + line + "'");
    if (expect_n >= 0 && n != expect_n)
        bad("sequence file: header n = " + std::to_string(n) + " does not match the graph (n = " +
            std::to_string(expect_n) + ")");

    std::vector<ContractionStep> steps;
    while (next_content_line(in, line)) {
        std::istringstream row(line);
        long u = 0, v = 0, w = 0;
        if (!(row >> tag >> u >> v >> w) || tag != "c")
            bad("sequence file: expected 'c <u> <v> <w>', got '" + line + "'");
        const long expected_w = n + static_cast<long>(steps.size()) + 1;
        if (w != expected_w)
            bad("sequence file: step " + std::to_string(steps.size()) + " has w = " +
                std::to_string(w) + ", expected " + std::to_string(expected_w));
        steps.push_back({static_cast<int>(u - 1), static_cast<int>(v - 1), static_cast<int>(w - 1)});
    }
    return steps;
}

void write_steps(std::ostream& out, int n, const std::vector<ContractionStep>& steps) {
    out << "seq " << n << "\n";
    for (const auto& s : steps)
        out << "c " << s.u + 1 << " " << s.v + 1 << " " << s.w + 1 << "\n";
}

std::vector<int> read_order(std::istream& in, int expect_n) {
    std::string line;
    if (!next_content_line(in, line))
        bad("order file: missing 'o' line");
    std::istringstream row(line);
    std::string tag;
    if (!(row >> tag) || tag != "o")
        bad("order file: expected 'o <v1> ... <vn>', got '" + line + "'");
    std::vector<int> order;
    long v = 0;
    while (row >> v)
        order.push_back(static_cast<int>(v - 1));
    if (expect_n >= 0 && static_cast<int>(order.size()) != expect_n)
        bad("order file: " + std::to_string(order.size()) + " entries, expected " +
            std::to_string(expect_n));
    std::vector<char> seen(order.size(), 0);
    for (int x : order) {
        if (x < 0 || x >= static_cast<int>(order.size()) || seen[x])
            bad("order file: not a permutation");
        seen[x] = 1;
    }
    return order;
}

void write_order(std::ostream& out, const std::vector<int>& vertex_at) {
    out << "o";
    for (int v : vertex_at)
        out << " " << v + 1;
    out << "\n";
}

Graph load_graph(const std::string& path) {
    auto in = open_in(path);
    return read_graph(in);
}

void save_graph(const std::string& path, const Graph& g) {
    auto out = open_out(path);
    write_graph(out, g);
}

std::vector<ContractionStep> load_steps(const std::string& path, int expect_n) {
    auto in = open_in(path);
    return read_steps(in, expect_n);
}

void save_steps(const std::string& path, int n, const std::vector<ContractionStep>& steps) {
    auto out = open_out(path);
    write_steps(out, n, steps);
}

std::vector<int> load_order(const std::string& path, int expect_n) {
    auto in = open_in(path);
    return read_order(in, expect_n);
}

void save_order(const std::string& path, const std::vector<int>& vertex_at) {
    auto out = open_out(path);
    write_order(out, vertex_at);
}

namespace {

std::string dot_label(const std::vector<int>& members) {
    std::string label;
    for (int v : members) {
        if (!label.empty())
            label += " ";
        label += std::to_string(v + 1);
    }
    return label;
}

} // namespace

std::string to_dot(const ReplaySnapshot& snap) {
    std::ostringstream out;
    out << "graph trigraph {\n";
    for (std::size_t i = 0; i < snap.ids.size(); ++i)
        out << "  v" << snap.ids[i] << " [label=\"" << dot_label(snap.members[i]) << "\"];\n";
    for (std::size_t i = 0; i < snap.ids.size(); ++i) {
        for (std::size_t j = i + 1; j < snap.ids.size(); ++j) {
            const int u = snap.ids[i], v = snap.ids[j];
            if (snap.trigraph.black(u, v))
                out << "  v" << u << " -- v" << v << ";\n";
            else if (snap.trigraph.red(u, v))
                out << "  v" << u << " -- v" << v << " [color=red penwidth=2];\n";
        }
    }
    out << "}\n";
    return out.str();
}

std::string to_dot(const OrientedReplaySnapshot& snap) {
    std::ostringstream out;
    out << "digraph ditrigraph {\n";
    for (std::size_t i = 0; i < snap.ids.size(); ++i)
        out << "  v" << snap.ids[i] << " [label=\"" << dot_label(snap.members[i]) << "\"];\n";
    for (std::size_t i = 0; i < snap.ids.size(); ++i) {
        for (std::size_t j = 0; j < snap.ids.size(); ++j) {
            const int u = snap.ids[i], v = snap.ids[j];
            if (u < v && snap.ditrigraph.black(u, v))
                out << "  v" << u << " -> v" << v << " [dir=none];\n";
            if (snap.ditrigraph.arc(u, v))
                out << "  v" << u << " -> v" << v << " [color=red penwidth=2];\n";
        }
    }
    out << "}\n";
    return out.str();
}

} // namespace tww
