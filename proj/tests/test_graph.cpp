#include "bdg/errors.hpp"
#include "bdg/graph.hpp"

#include <doctest.h>

#include <set>
#include <string>
#include <vector>

using bdg::Int;
using bdg::WeightedDualGraph;

namespace {

// Chain A1 - A2 - ... - An of (-2)-curves.
WeightedDualGraph chain(int n) {
    WeightedDualGraph g;
    for (int i = 1; i <= n; ++i) {
        g.add_vertex("A" + std::to_string(i), -2);
    }
    for (int i = 1; i < n; ++i) {
        g.add_edge("A" + std::to_string(i), "A" + std::to_string(i + 1));
    }
    return g;
}

} // namespace

TEST_CASE("vertex and edge bookkeeping") {
    WeightedDualGraph g;
    g.add_vertex("B", -3);
    g.add_vertex("A", -2, "spine");
    g.add_edge("A", "B");

    CHECK(g.vertex_count() == 2);
    CHECK(g.edge_count() == 1);
    CHECK(g.weight("B") == -3);
    CHECK(g.vertex("A").label == "spine");
    CHECK(g.has_edge("B", "A"));
    CHECK(g.vertex_ids() == std::vector<std::string>{"A", "B"});
    CHECK(g.neighbors("A") == std::vector<std::string>{"B"});
    CHECK(g.degree("A") == 1);

    g.set_weight("A", -7);
    CHECK(g.weight("A") == -7);

    g.remove_edge("B", "A");
    CHECK(g.edge_count() == 0);
    g.remove_vertex("B");
    CHECK_FALSE(g.has_vertex("B"));
    CHECK(g.vertex_count() == 1);
}

TEST_CASE("removing a vertex drops its edges") {
    WeightedDualGraph g = chain(3);
    g.remove_vertex("A2");
    CHECK(g.edge_count() == 0);
    CHECK(g.vertex_count() == 2);
}

TEST_CASE("id and edge validation") {
    WeightedDualGraph g;
    CHECK_THROWS_AS(g.add_vertex("", -1), bdg::InputError);
    CHECK_THROWS_AS(g.add_vertex("a b", -1), bdg::InputError);
    CHECK_THROWS_AS(g.add_vertex("a#b", -1), bdg::InputError);
    g.add_vertex("A", -1);
    CHECK_THROWS_AS(g.add_vertex("A", -2), bdg::InputError);
    CHECK_THROWS_AS(g.add_edge("A", "A"), bdg::InputError);
    CHECK_THROWS_AS(g.add_edge("A", "missing"), bdg::InputError);
    g.add_vertex("B", -2);
    g.add_edge("A", "B");
    CHECK_THROWS_AS(g.add_edge("B", "A"), bdg::InputError);
    CHECK_THROWS_AS(g.remove_edge("A", "missing"), bdg::InputError);
    g.remove_edge("A", "B");
    CHECK_THROWS_AS(g.remove_edge("A", "B"), bdg::InputError);
    CHECK_THROWS_AS(g.weight("missing"), bdg::InputError);
    CHECK_THROWS_AS(g.set_weight("missing", 0), bdg::InputError);
    CHECK_THROWS_AS(g.remove_vertex("missing"), bdg::InputError);
}

TEST_CASE("equality ignores labels") {
    WeightedDualGraph a;
    a.add_vertex("X", -1, "one label");
    WeightedDualGraph b;
    b.add_vertex("X", -1, "another");
    CHECK(a == b);
    b.set_weight("X", -2);
    CHECK(a != b);
}

TEST_CASE("intersection matrix layout") {
    WeightedDualGraph g = chain(3);
    const bdg::IntersectionMatrix m = bdg::intersection_matrix(g);
    CHECK(m.ordering == std::vector<std::string>{"A1", "A2", "A3"});
    CHECK(m.entries == bdg::IntMatrix{{Int(-2), Int(1), Int(0)},
                                      {Int(1), Int(-2), Int(1)},
                                      {Int(0), Int(1), Int(-2)}});

    const bdg::IntersectionMatrix rev =
        bdg::intersection_matrix(g, {"A3", "A2", "A1"});
    CHECK(rev.entries[0][0] == -2);
    CHECK(rev.entries[0][1] == 1);
    CHECK(rev.entries[0][2] == 0);

    CHECK_THROWS_AS(bdg::intersection_matrix(g, {"A1", "A2"}), bdg::InputError);
    CHECK_THROWS_AS(bdg::intersection_matrix(g, {"A1", "A2", "A2"}), bdg::InputError);
    CHECK_THROWS_AS(bdg::intersection_matrix(g, {"A1", "A2", "Q"}), bdg::InputError);
}

TEST_CASE("chain determinants follow the n+1 law") {
    for (int n = 1; n <= 10; ++n) {
        CAPTURE(n);
        CHECK(bdg::determinant_d(chain(n)) == Int(n + 1));
        CHECK(bdg::is_negative_definite(chain(n)));
    }
}

TEST_CASE("empty graph conventions") {
    WeightedDualGraph g;
    CHECK(bdg::determinant_d(g) == 1);
    CHECK(bdg::is_negative_definite(g));
    CHECK(bdg::connected_components(g).empty());
}

TEST_CASE("negative definiteness boundary cases") {
    WeightedDualGraph zero;
    zero.add_vertex("A", 0);
    CHECK_FALSE(bdg::is_negative_definite(zero));

    // Two (-2)-curves meeting twice is not simple, so model the degenerate
    // cycle shape: a (-2) chain closed up has determinant 0.
    WeightedDualGraph cycle4;
    for (int i = 0; i < 4; ++i) {
        cycle4.add_vertex("A" + std::to_string(i), -2);
    }
    for (int i = 0; i < 4; ++i) {
        cycle4.add_edge("A" + std::to_string(i), "A" + std::to_string((i + 1) % 4));
    }
    CHECK(bdg::determinant_d(cycle4) == 0);
    CHECK_FALSE(bdg::is_negative_definite(cycle4));
}

TEST_CASE("connected components are ordered by smallest member") {
    WeightedDualGraph g;
    g.add_vertex("Q", -2);
    g.add_vertex("B", -3);
    g.add_vertex("C", -4);
    g.add_vertex("A", -5);
    g.add_edge("B", "Q");
    const auto comps = bdg::connected_components(g);
    REQUIRE(comps.size() == 3);
    CHECK(comps[0].vertex_ids() == std::vector<std::string>{"A"});
    CHECK(comps[1].vertex_ids() == std::vector<std::string>{"B", "Q"});
    CHECK(comps[1].has_edge("B", "Q"));
    CHECK(comps[2].vertex_ids() == std::vector<std::string>{"C"});
}

TEST_CASE("induced subgraph keeps interior edges only") {
    WeightedDualGraph g = chain(4);
    const WeightedDualGraph sub = bdg::induced_subgraph(g, {"A1", "A2", "A4"});
    CHECK(sub.vertex_count() == 3);
    CHECK(sub.edge_count() == 1);
    CHECK(sub.has_edge("A1", "A2"));
    CHECK_THROWS_AS(bdg::induced_subgraph(g, {"A1", "nope"}), bdg::InputError);
}

TEST_CASE("shape predicates") {
    CHECK(bdg::is_connected(chain(5)));
    CHECK(bdg::is_tree(chain(5)));
    CHECK(bdg::is_path_graph(chain(5)));
    CHECK_FALSE(bdg::has_branch_vertex(chain(5)));

    WeightedDualGraph single;
    single.add_vertex("A", -2);
    CHECK(bdg::is_connected(single));
    CHECK(bdg::is_tree(single));
    CHECK(bdg::is_path_graph(single));

    WeightedDualGraph empty;
    CHECK(bdg::is_connected(empty)); // vacuously: no vertex pair is separated
    CHECK_FALSE(bdg::is_tree(empty));

    WeightedDualGraph star = chain(3);
    star.add_vertex("B", -2);
    star.add_edge("A2", "B");
    CHECK(bdg::is_tree(star));
    CHECK(bdg::has_branch_vertex(star));
    CHECK_FALSE(bdg::is_path_graph(star));

    WeightedDualGraph two = chain(2);
    two.add_vertex("Z", -2);
    CHECK_FALSE(bdg::is_connected(two));
    CHECK_FALSE(bdg::is_tree(two));
    CHECK_FALSE(bdg::is_path_graph(two));
}
