#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "tww/generators.hpp"
#include "tww/partition.hpp"
#include "tww/trigraph.hpp"

#include "helpers.hpp"

using namespace tww;
using namespace tww::test;

// vertices a..g = 0..6 throughout
namespace {
constexpr int A = 0, B = 1, C = 2, D = 3, E = 4, F = 5, G = 6;
}

TEST_CASE("contracting e and f in the fig1 graph") {
    Trigraph t(fig1_graph());
    Trigraph after = contract(t, E, F, 7);

    CHECK(!after.has_vertex(E));
    CHECK(!after.has_vertex(F));
    CHECK(after.has_vertex(7));
    CHECK(after.vertex_count() == 6);

    CHECK(after.red(7, A));
    CHECK(after.red(7, D));
    CHECK(after.black(7, B));
    CHECK(after.black(7, C));
    CHECK(after.black(7, G));
    CHECK(after.red_degree(7) == 2);

    // the rest of the trigraph is untouched
    CHECK(after.black(A, B));
    CHECK(after.black(D, G));
    CHECK(!after.red(A, B));
    CHECK(after.red_degree(B) == 0);
}

TEST_CASE("contracting true twins creates no red edges") {
    Graph g = make_graph(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}});
    Trigraph after = contract(Trigraph(g), 0, 1, 4);
    CHECK(after.max_red_degree() == 0);
    CHECK(after.black(4, 2));
    CHECK(after.black(4, 3));
}

TEST_CASE("contracting isolated vertices yields an isolated vertex") {
    Trigraph after = contract(Trigraph(Graph(2)), 0, 1, 2);
    CHECK(after.vertex_count() == 1);
    CHECK(after.red_degree(2) == 0);
    CHECK(after.black_neighbors(2).none());
}

TEST_CASE("contract input validation") {
    Trigraph t(complete(3));
    CHECK_THROWS_WITH_AS(contract(t, 5, 1, 9), doctest::Contains("unknown vertex"), invalid_input);
    CHECK_THROWS_WITH_AS(contract(t, 1, 1, 9), doctest::Contains("with itself"), invalid_input);
    CHECK_THROWS_WITH_AS(contract(t, 0, 1, 2), doctest::Contains("already present"), invalid_input);
}

TEST_CASE("oriented contraction: new red edge leaves the merged vertex") {
    // path 0-1-2; merging the leaf 0 into its neighbor 1 reddens the edge
    // to the far vertex 2, oriented away from the merged vertex
    DiTrigraph after = contract_oriented(DiTrigraph(path(3)), 0, 1, 3);
    CHECK(after.red(3, 2));
    CHECK(after.arc(3, 2));
    CHECK(!after.arc(2, 3));
    CHECK(after.out_red_degree(3) == 1);
    CHECK(after.out_red_degree(2) == 0);
}

TEST_CASE("oriented contraction: two out-arcs to the same head merge outward") {
    DiTrigraph d(3);
    d.add_vertex(0);
    d.add_vertex(1);
    d.add_vertex(2);
    d.add_arc(0, 2);
    d.add_arc(1, 2);
    DiTrigraph after = contract_oriented(d, 0, 1, 3);
    CHECK(after.arc(3, 2));
    CHECK(!after.arc(2, 3));
}

TEST_CASE("oriented contraction: arcs into both endpoints keep pointing in") {
    DiTrigraph d(3);
    d.add_vertex(0);
    d.add_vertex(1);
    d.add_vertex(2);
    d.add_arc(2, 0);
    d.add_arc(2, 1);
    DiTrigraph after = contract_oriented(d, 0, 1, 3);
    CHECK(after.arc(2, 3));
    CHECK(!after.arc(3, 2));
    CHECK(after.out_red_degree(3) == 0);
    CHECK(after.out_red_degree(2) == 1); // had 2 out-arcs, now 1
}

TEST_CASE("red degree on the fig1 graph") {
    Trigraph t(fig1_graph());
    for (int v = 0; v < 7; ++v)
        CHECK(red_degree(t, v) == 0);

    Trigraph one = contract(t, E, F, 7);
    CHECK(red_degree(one, 7) == 2);

    Trigraph two = contract(one, A, D, 8);
    CHECK(red_degree(two, 8) == 2);
    CHECK(two.red(8, 7));
    CHECK(two.red(8, G));
}

TEST_CASE("out red degree basics") {
    DiTrigraph d(complete(4));
    CHECK(d.max_out_red_degree() == 0);

    // a contraction creating r red edges gives the merged vertex out-degree r
    Graph g = make_graph(5, {{0, 2}, {0, 3}, {1, 3}, {1, 4}});
    DiTrigraph after = contract_oriented(DiTrigraph(g), 0, 1, 5);
    CHECK(after.out_red_degree(5) == 2); // 2 and 4 differ, 3 is shared black
    CHECK(out_red_degree(after, 2) == 0);
}

TEST_CASE("quotient by singletons embeds the graph") {
    Graph g = fig1_graph();
    CHECK(quotient(g, Partition::singletons(7)) == Trigraph(g));
}

TEST_CASE("quotient matches contraction on the fig1 graph") {
    Graph g = fig1_graph();
    Partition p(7, {{E, F}, {A}, {B}, {C}, {D}, {G}});
    Trigraph q = quotient(g, p);

    ContractionSequence seq{g, {{E, F, 7}}, false};
    auto snap = replay_to(seq, 1);
    CHECK(matches_quotient(snap, p, q));
}

TEST_CASE("quotient by the one-part partition is K_1") {
    Graph g = fig1_graph();
    Trigraph q = quotient(g, Partition(7, {{0, 1, 2, 3, 4, 5, 6}}));
    CHECK(q.vertex_count() == 1);
    CHECK(q.max_red_degree() == 0);
}

TEST_CASE("partition validation") {
    CHECK_THROWS_WITH_AS(Partition(4, {{0, 1}, {1, 2}, {3}}), doctest::Contains("overlapping"),
                         invalid_input);
    CHECK_THROWS_WITH_AS(Partition(4, {{0, 1}, {2}}), doctest::Contains("cover"), invalid_input);
    CHECK_THROWS_WITH_AS(Partition(4, {{0, 1}, {}, {2, 3}}), doctest::Contains("empty"),
                         invalid_input);
}

TEST_CASE("commutation: folding contractions equals the quotient") {
    std::mt19937_64 rng(20240517);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 9);
        Graph g = random_graph(n, 0.4, rng());
        ContractionSequence seq = random_sequence(g, rng);
        auto trace = partition_trace(seq);
        for (int len = 0; len <= static_cast<int>(seq.steps.size()); ++len) {
            auto snap = replay_to(seq, len);
            CHECK(matches_quotient(snap, trace[len], quotient(g, trace[len])));
        }
    }
}

TEST_CASE("contract never turns red edges black") {
    std::mt19937_64 rng(987654);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 3 + static_cast<int>(rng() % 8);
        Graph g = random_graph(n, 0.5, rng());
        ContractionSequence seq = random_sequence(g, rng);

        Trigraph t(g);
        for (const auto& s : seq.steps) {
            Trigraph next = contract(t, s.u, s.v, s.w);
            for (int a : next.vertices()) {
                if (a == s.w)
                    continue;
                for (int b : next.vertices()) {
                    if (b == s.w || b <= a)
                        continue;
                    if (t.red(a, b))
                        CHECK(next.red(a, b)); // red edges survive until merged away
                }
            }
            t = next;
        }
    }
}

TEST_CASE("dropping arc directions commutes with contraction") {
    std::mt19937_64 rng(55555);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 3 + static_cast<int>(rng() % 8);
        Graph g = random_graph(n, 0.5, rng());
        ContractionSequence seq = random_sequence(g, rng);

        Trigraph t(g);
        DiTrigraph d(g);
        for (const auto& s : seq.steps) {
            t = contract(t, s.u, s.v, s.w);
            d = contract_oriented(d, s.u, s.v, s.w);
            CHECK(d.underlying() == t);
        }
    }
}
