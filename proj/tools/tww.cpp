// Command-line front end: generate graphs, compute and verify widths,
// analyze ordered adjacency matrices, export trigraph snapshots.
//
// Exit codes: 0 = success / claim verified, 2 = claim violated,
// 1 = usage or IO error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "tww/generators.hpp"
#include "tww/io.hpp"
#include "tww/matrix.hpp"
#include "tww/sequence.hpp"
#include "tww/solver.hpp"
#include "tww/witnesses.hpp"

using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitViolated = 2;

struct RunContext {
    std::string subcommand;
    std::vector<std::string> inputs;
    json params = json::object();
    std::uint64_t seed = 0;
    std::string output;
    json result = json::object();
    std::chrono::steady_clock::time_point started = std::chrono::steady_clock::now();
    bool emit_json = false;

    json manifest() const {
        const auto wall =
            std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - started);
        return json{{"tool", "tww"},
                    {"subcommand", subcommand},
                    {"inputs", inputs},
                    {"params", params},
                    {"seed", seed},
                    {"output", output},
                    {"wall_ms", wall.count()},
                    {"result", result}};
    }

    // every file output gets the manifest next to it; --json prints it too
    void finish() const {
        if (!output.empty() && output != "-") {
            std::ofstream side(output + ".manifest.json");
            side << manifest().dump(2) << "\n";
        }
        if (emit_json)
            std::cout << manifest().dump(2) << "\n";
    }
};

void write_graph_output(const std::string& path, const tww::Graph& g) {
    if (path.empty() || path == "-")
        tww::write_graph(std::cout, g);
    else
        tww::save_graph(path, g);
}

tww::SolverConfig config_from(long budget, int max_width, long memo, int threads) {
    tww::SolverConfig cfg;
    cfg.node_budget = budget;
    cfg.max_width_probe = max_width;
    cfg.memo_capacity = static_cast<std::size_t>(memo);
    cfg.threads = threads;
    return cfg;
}

json width_report_json(const tww::WidthReport& report) {
    json per_step = json::array();
    for (auto [step, width] : report.per_step)
        per_step.push_back({{"step", step}, {"max_red_degree", width}});
    return json{{"width", report.width}, {"partial", report.partial}, {"per_step", per_step}};
}

int run_gen(RunContext& ctx, const std::string& family, int t, int depth, long long cap,
            long long q, int n, int arity, double p, const std::string& witness_path) {
    tww::Graph g;
    if (family == "gt") {
        auto gt = tww::build_gt({t, depth}, cap);
        g = gt.graph;
        ctx.params["t"] = t;
        ctx.params["depth"] = depth;
    } else if (family == "paley") {
        g = tww::build_paley(q);
        ctx.params["q"] = q;
    } else if (family == "tree") {
        g = tww::random_tree(n, ctx.seed);
        ctx.params["n"] = n;
    } else if (family == "kary") {
        g = tww::build_kary_tree(arity, depth);
        ctx.params["arity"] = arity;
        ctx.params["depth"] = depth;
    } else if (family == "fig1") {
        g = tww::fig1_graph();
        if (!witness_path.empty()) {
            auto seq = tww::fig1_sequence();
            tww::save_steps(witness_path, 7, seq.steps);
        }
    } else if (family == "random") {
        g = tww::random_graph(n, p, ctx.seed);
        ctx.params["n"] = n;
        ctx.params["p"] = p;
    } else {
        throw tww::invalid_input("unknown family: " + family +
                                 " (expected gt|paley|tree|kary|fig1|random)");
    }
    write_graph_output(ctx.output, g);
    ctx.result = {{"vertices", g.vertex_count()}, {"edges", g.edge_count()}};
    ctx.finish();
    return kExitOk;
}

int run_solve(RunContext& ctx, const std::string& graph_path, const std::string& mode,
              const tww::SolverConfig& cfg, const std::string& witness_path) {
    tww::Graph g = tww::load_graph(graph_path);
    tww::SolveResult res;
    if (mode == "exact") {
        res = tww::exact_twinwidth(g, cfg);
    } else if (mode == "oriented") {
        res = tww::exact_oriented_twinwidth(g, cfg);
    } else {
        res = tww::greedy_upper_bound(g);
        if (tww::is_tree(g)) {
            // trees have a constructive width-2 sequence; take it when the
            // pairwise greedy does worse
            tww::ContractionSequence seq = tww::tree_sequence(g);
            const int width = tww::verify(seq, true).width;
            if (width < res.value) {
                res.value = width;
                res.witness = std::move(seq);
            }
        }
    }

    if (!witness_path.empty())
        tww::save_steps(witness_path, g.vertex_count(), res.witness.steps);

    ctx.result = {{"mode", mode},
                  {"value", res.value},
                  {"lower_bound", res.lower_bound},
                  {"exact", res.exact},
                  {"explored", res.explored},
                  {"witness", witness_path}};
    if (!ctx.emit_json) {
        if (res.exact)
            std::cout << (mode == "oriented" ? "oriented twin-width " : "twin-width ")
                      << res.value << " (exact)\n";
        else
            std::cout << (mode == "greedy" ? "upper bound " : "bounds [")
                      << (mode == "greedy" ? std::to_string(res.value)
                                           : std::to_string(res.lower_bound) + ", " +
                                                 std::to_string(res.value) + "]")
                      << (mode == "greedy" ? " (verified)" : " (budget exhausted)") << "\n";
    }
    ctx.finish();
    return kExitOk;
}

int run_verify(RunContext& ctx, const std::string& graph_path, const std::string& seq_path,
               bool oriented, bool full, int expect_width) {
    tww::Graph g = tww::load_graph(graph_path);
    tww::ContractionSequence seq;
    seq.base = g;
    seq.steps = tww::load_steps(seq_path, g.vertex_count());
    seq.oriented = oriented;

    tww::WidthReport report;
    try {
        report = oriented ? tww::verify_oriented(seq, full) : tww::verify(seq, full);
    } catch (const tww::invalid_input& err) {
        std::cerr << "violation: " << err.what() << "\n";
        return kExitViolated;
    }

    ctx.result = width_report_json(report);
    ctx.result["oriented"] = oriented;
    if (!ctx.emit_json)
        std::cout << (oriented ? "oriented width " : "width ") << report.width
                  << (report.partial ? " (partial sequence)" : "") << "\n";
    ctx.finish();
    if (expect_width >= 0 && report.width > expect_width) {
        std::cerr << "violation: width " << report.width << " exceeds expected " << expect_width
                  << "\n";
        return kExitViolated;
    }
    return kExitOk;
}

// graph input: header 'g'; raw matrix input: header 'm'
bool input_is_matrix(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw tww::parse_error("cannot open file: " + path);
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        for (char c : line) {
            if (c == ' ' || c == '\t' || c == '\r')
                continue;
            return c == 'm';
        }
    }
    throw tww::parse_error("empty input file: " + path);
}

int run_matrix(RunContext& ctx, const std::string& input_path, const std::string& order_path,
               bool use_gt_order, int t, int depth, bool tree_only, int grid_k, int mixed_k,
               bool gridnum, bool mixednum, bool chain, bool min_orders) {
    tww::OrderedMatrix m;
    if (input_is_matrix(input_path)) {
        if (!order_path.empty() || use_gt_order || min_orders)
            throw tww::invalid_input("orders only apply to graph inputs");
        m = tww::load_matrix(input_path);
    } else {
        tww::Graph g = tww::load_graph(input_path);
        if (min_orders) {
            // minimized over every vertex order; only the numbers make sense
            if (gridnum)
                ctx.result = {{"graph_grid_number", tww::graph_grid_number(g)}};
            else if (mixednum)
                ctx.result = {{"graph_mixed_number", tww::graph_mixed_number(g)}};
            else
                throw tww::invalid_input("--min-orders requires --gridnum or --mixednum");
            if (!ctx.emit_json)
                std::cout << ctx.result.begin().key() << " " << ctx.result.begin().value() << "\n";
            ctx.finish();
            return kExitOk;
        }
        tww::VertexOrder order;
        if (use_gt_order) {
            auto gt = tww::build_gt({t, depth});
            if (!(gt.graph == g))
                throw tww::invalid_input(
                    "--gt-order: input graph is not the generated instance for these parameters");
            order = tww::gt_order(gt);
            ctx.params["t"] = t;
            ctx.params["depth"] = depth;
        } else if (!order_path.empty()) {
            order = tww::VertexOrder(tww::load_order(order_path, g.vertex_count()));
            ctx.inputs.push_back(order_path);
        } else {
            order = tww::VertexOrder::identity(g.vertex_count());
        }
        m = tww::adjacency_matrix(g, order);
        if (tree_only) {
            if (!use_gt_order)
                throw tww::invalid_input("--tree-only requires --gt-order");
            std::vector<int> first_t(t);
            for (int i = 0; i < t; ++i)
                first_t[i] = i;
            m = tww::delete_rows_cols(m, first_t, first_t);
        }
    }

    if (grid_k > 0) {
        auto witness = tww::find_grid_minor(m, grid_k);
        ctx.result = {{"k", grid_k}, {"grid_minor", witness.has_value()}};
        if (witness)
            ctx.result["division"] = {{"row_cuts", witness->row_cuts}, {"col_cuts", witness->col_cuts}};
    } else if (mixed_k > 0) {
        auto witness = tww::find_mixed_minor(m, mixed_k);
        ctx.result = {{"k", mixed_k}, {"mixed_minor", witness.has_value()}};
        if (witness)
            ctx.result["division"] = {{"row_cuts", witness->row_cuts}, {"col_cuts", witness->col_cuts}};
    } else if (gridnum) {
        ctx.result = {{"grid_number", tww::grid_number(m)}};
    } else if (mixednum) {
        ctx.result = {{"mixed_number", tww::mixed_number(m)}};
    } else if (chain) {
        ctx.result = {{"chain", tww::longest_decreasing_chain(m)},
                      {"chain_upper_triangle",
                       tww::longest_decreasing_chain(m, tww::Region::upper_triangle)},
                      {"chain_lower_triangle",
                       tww::longest_decreasing_chain(m, tww::Region::lower_triangle)}};
    } else {
        throw tww::invalid_input("pick one of --grid K, --mixed K, --gridnum, --mixednum, --chain");
    }

    if (!ctx.emit_json) {
        for (auto it = ctx.result.begin(); it != ctx.result.end(); ++it)
            if (it.key() != "division")
                std::cout << it.key() << " " << it.value() << "\n";
    }
    ctx.finish();
    return kExitOk;
}

int run_export(RunContext& ctx, const std::string& graph_path, const std::string& seq_path,
               int frame, bool oriented) {
    tww::Graph g = tww::load_graph(graph_path);
    tww::ContractionSequence seq;
    seq.base = g;
    if (!seq_path.empty()) {
        seq.steps = tww::load_steps(seq_path, g.vertex_count());
        ctx.inputs.push_back(seq_path);
    }
    if (frame < 0)
        frame = static_cast<int>(seq.steps.size());

    std::string dot;
    if (oriented)
        dot = tww::to_dot(tww::replay_oriented_to(seq, frame));
    else
        dot = tww::to_dot(tww::replay_to(seq, frame));

    if (ctx.output.empty() || ctx.output == "-") {
        std::cout << dot;
    } else {
        std::ofstream out(ctx.output);
        if (!out)
            throw tww::parse_error("cannot write file: " + ctx.output);
        out << dot;
    }
    ctx.result = {{"frame", frame}, {"oriented", oriented}};
    ctx.finish();
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"twin-width toolkit: contraction sequences, exact solvers, grid minors"};
    app.require_subcommand(1);

    RunContext ctx;
    int exit_code = kExitOk;

    // ---- gen ----------------------------------------------------------
    auto* gen = app.add_subcommand("gen", "generate a graph family to a graph file");
    std::string gen_family;
    int gen_t = 1, gen_depth = 1, gen_n = 10, gen_arity = 2;
    long long gen_cap = 1'000'000, gen_q = 5;
    double gen_p = 0.5;
    std::string gen_out, gen_witness;
    gen->add_option("family", gen_family, "gt|paley|tree|kary|fig1|random")->required();
    gen->add_option("--t", gen_t, "apex count (gt)");
    gen->add_option("--depth", gen_depth, "tree depth (gt, kary)");
    gen->add_option("--cap", gen_cap, "vertex-count guard (gt)");
    gen->add_option("--q", gen_q, "prime = 1 mod 4 (paley)");
    gen->add_option("--n", gen_n, "vertex count (tree, random)");
    gen->add_option("--arity", gen_arity, "children per node (kary)");
    gen->add_option("--p", gen_p, "edge probability (random)");
    gen->add_option("--seed", ctx.seed, "RNG seed (tree, random)");
    gen->add_option("-o,--output", gen_out, "graph file (stdout when omitted)");
    gen->add_option("--witness", gen_witness, "also write the known 2-sequence (fig1)");
    gen->callback([&] {
        ctx.subcommand = "gen";
        ctx.output = gen_out;
        ctx.params["family"] = gen_family;
        exit_code = run_gen(ctx, gen_family, gen_t, gen_depth, gen_cap, gen_q, gen_n, gen_arity,
                            gen_p, gen_witness);
    });

    // ---- solve --------------------------------------------------------
    auto* solve = app.add_subcommand("solve", "compute twin-width (exact, oriented, or greedy)");
    std::string solve_graph, solve_witness;
    bool solve_exact_flag = false, solve_oriented = false, solve_greedy = false;
    long solve_budget = 200'000'000, solve_memo = 4'000'000;
    int solve_max_width = 64, solve_threads = 1;
    solve->add_option("graph", solve_graph, "graph file")->required();
    solve->add_flag("--exact", solve_exact_flag, "minimum width (default)");
    solve->add_flag("--oriented", solve_oriented, "minimum oriented width");
    solve->add_flag("--greedy", solve_greedy, "verified upper bound only");
    solve->add_option("--budget", solve_budget, "search-node budget");
    solve->add_option("--max-width", solve_max_width, "probe cutoff");
    solve->add_option("--memo-cap", solve_memo, "memoized states per probe");
    solve->add_option("--threads", solve_threads, "root fan-out workers");
    solve->add_option("--witness", solve_witness, "write the witness sequence here");
    solve->callback([&] {
        ctx.subcommand = "solve";
        ctx.inputs = {solve_graph};
        if (solve_oriented + solve_greedy + solve_exact_flag > 1)
            throw tww::invalid_input("pick one of --exact, --oriented, --greedy");
        const std::string mode = solve_oriented ? "oriented" : (solve_greedy ? "greedy" : "exact");
        ctx.params = {{"mode", mode},
                      {"budget", solve_budget},
                      {"max_width", solve_max_width},
                      {"memo_cap", solve_memo},
                      {"threads", solve_threads}};
        exit_code = run_solve(ctx, solve_graph, mode,
                              config_from(solve_budget, solve_max_width, solve_memo, solve_threads),
                              solve_witness);
    });

    // ---- verify -------------------------------------------------------
    auto* verify_cmd = app.add_subcommand("verify", "replay a sequence and report its width");
    std::string verify_graph, verify_seq;
    bool verify_oriented_flag = false, verify_full = false;
    int verify_expect = -1;
    verify_cmd->add_option("graph", verify_graph, "graph file")->required();
    verify_cmd->add_option("sequence", verify_seq, "sequence file")->required();
    verify_cmd->add_flag("--oriented", verify_oriented_flag, "measure out-going red arcs");
    verify_cmd->add_flag("--full", verify_full, "require the sequence to end at one vertex");
    verify_cmd->add_option("--expect-width", verify_expect, "exit 2 when the width exceeds this");
    verify_cmd->callback([&] {
        ctx.subcommand = "verify";
        ctx.inputs = {verify_graph, verify_seq};
        ctx.params = {{"oriented", verify_oriented_flag},
                      {"full", verify_full},
                      {"expect_width", verify_expect}};
        exit_code = run_verify(ctx, verify_graph, verify_seq, verify_oriented_flag, verify_full,
                               verify_expect);
    });

    // ---- matrix -------------------------------------------------------
    auto* matrix_cmd = app.add_subcommand("matrix", "grid/mixed minors and decreasing chains");
    std::string matrix_input, matrix_order;
    bool matrix_gt_order = false, matrix_tree_only = false;
    bool matrix_gridnum = false, matrix_mixednum = false, matrix_chain = false,
         matrix_min_orders = false;
    int matrix_t = 1, matrix_depth = 1, matrix_grid_k = 0, matrix_mixed_k = 0;
    matrix_cmd->add_option("input", matrix_input, "graph file or matrix file")->required();
    matrix_cmd->add_option("--order", matrix_order, "vertex order file (graph input)");
    matrix_cmd->add_flag("--gt-order", matrix_gt_order, "use the generated-instance order");
    matrix_cmd->add_option("--t", matrix_t, "apex count (with --gt-order)");
    matrix_cmd->add_option("--depth", matrix_depth, "tree depth (with --gt-order)");
    matrix_cmd->add_flag("--tree-only", matrix_tree_only, "drop the apex rows/columns first");
    matrix_cmd->add_option("--grid", matrix_grid_k, "test for a k-grid minor");
    matrix_cmd->add_option("--mixed", matrix_mixed_k, "test for a k-mixed minor");
    matrix_cmd->add_flag("--gridnum", matrix_gridnum, "largest k with a grid minor");
    matrix_cmd->add_flag("--mixednum", matrix_mixednum, "largest k with a mixed minor");
    matrix_cmd->add_flag("--chain", matrix_chain, "longest decreasing chain of 1-entries");
    matrix_cmd->add_flag("--min-orders", matrix_min_orders,
                         "minimize the number over all vertex orders (n <= 8)");
    matrix_cmd->callback([&] {
        ctx.subcommand = "matrix";
        ctx.inputs = {matrix_input};
        exit_code = run_matrix(ctx, matrix_input, matrix_order, matrix_gt_order, matrix_t,
                               matrix_depth, matrix_tree_only, matrix_grid_k, matrix_mixed_k,
                               matrix_gridnum, matrix_mixednum, matrix_chain, matrix_min_orders);
    });

    // ---- export -------------------------------------------------------
    auto* export_cmd = app.add_subcommand("export", "DOT snapshot of a sequence frame");
    std::string export_graph, export_seq, export_out;
    bool export_dot = false, export_oriented = false;
    int export_frame = -1;
    export_cmd->add_option("graph", export_graph, "graph file")->required();
    export_cmd->add_flag("--dot", export_dot, "DOT output (the only format)")->required();
    export_cmd->add_option("--seq", export_seq, "sequence file to replay");
    export_cmd->add_option("--frame", export_frame, "steps applied before the snapshot");
    export_cmd->add_flag("--oriented", export_oriented, "directed red arcs");
    export_cmd->add_option("-o,--output", export_out, "DOT file (stdout when omitted)");
    export_cmd->callback([&] {
        ctx.subcommand = "export";
        ctx.inputs = {export_graph};
        ctx.output = export_out;
        ctx.params = {{"frame", export_frame}, {"oriented", export_oriented}};
        exit_code = run_export(ctx, export_graph, export_seq, export_frame, export_oriented);
    });

    app.add_flag("--json", ctx.emit_json, "print a machine-readable run manifest");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    } catch (const tww::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const tww::invalid_input& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return exit_code;
}
