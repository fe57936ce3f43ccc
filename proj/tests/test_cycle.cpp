#include "bdg/corpus.hpp"
#include "bdg/cycle.hpp"
#include "bdg/errors.hpp"
#include "bdg/graph.hpp"

#include <doctest.h>

#include <map>
#include <random>
#include <string>

using bdg::Cycle;
using bdg::Int;
using bdg::Rat;
using bdg::WeightedDualGraph;

namespace {

WeightedDualGraph chain(int n, long long weight = -2) {
    WeightedDualGraph g;
    for (int i = 1; i <= n; ++i) {
        g.add_vertex("A" + std::to_string(i), weight);
    }
    for (int i = 1; i < n; ++i) {
        g.add_edge("A" + std::to_string(i), "A" + std::to_string(i + 1));
    }
    return g;
}

Cycle make(const WeightedDualGraph& g, std::map<std::string, Rat> coeffs) {
    return Cycle(g, std::move(coeffs));
}

Cycle random_cycle(const WeightedDualGraph& g, std::mt19937& rng, int lo, int hi) {
    std::uniform_int_distribution<int> dist(lo, hi);
    std::map<std::string, Rat> coeffs;
    for (const auto& id : g.vertex_ids()) {
        coeffs[id] = dist(rng);
    }
    return Cycle(g, std::move(coeffs));
}

} // namespace

TEST_CASE("cycle accessors and validation") {
    const WeightedDualGraph g = chain(3);
    const Cycle z = make(g, {{"A1", Rat(2)}, {"A2", Rat(0)}});
    CHECK(z.at("A1") == 2);
    CHECK(z.at("A2") == 0);
    CHECK(z.at("A3") == 0); // missing id means zero
    CHECK(z.support() == std::set<std::string>{"A1"});
    CHECK(z.is_integral());
    CHECK_FALSE(z.is_zero());
    CHECK_THROWS_AS(z.at("missing"), bdg::InputError);
    CHECK_THROWS_AS(make(g, {{"missing", Rat(1)}}), bdg::InputError);

    const Cycle half = make(g, {{"A1", Rat(1, 2)}});
    CHECK_FALSE(half.is_integral());
    CHECK(make(g, {}).is_zero());
}

TEST_CASE("cycle addition requires equal graphs") {
    const WeightedDualGraph g = chain(2);
    const Cycle a = make(g, {{"A1", Rat(1)}});
    const Cycle b = make(g, {{"A1", Rat(2)}, {"A2", Rat(5)}});
    const Cycle sum = a + b;
    CHECK(sum.at("A1") == 3);
    CHECK(sum.at("A2") == 5);
    CHECK(sum == make(g, {{"A1", Rat(3)}, {"A2", Rat(5)}}));

    const WeightedDualGraph other = chain(3);
    CHECK_THROWS_AS(a + make(other, {}), bdg::InputError);
}

TEST_CASE("canonical degree of a rational curve") {
    CHECK(bdg::canonical_degree(-1) == -1);
    CHECK(bdg::canonical_degree(-2) == 0);
    CHECK(bdg::canonical_degree(-5) == 3);
    CHECK(bdg::canonical_degree(0) == -2);
}

TEST_CASE("pairing is symmetric and bilinear") {
    std::mt19937 rng(4301);
    WeightedDualGraph g = chain(5, -3);
    g.add_vertex("B", -2);
    g.add_edge("A3", "B");
    for (int trial = 0; trial < 100; ++trial) {
        const Cycle x = random_cycle(g, rng, -4, 4);
        const Cycle y = random_cycle(g, rng, -4, 4);
        const Cycle z = random_cycle(g, rng, -4, 4);
        CAPTURE(trial);
        REQUIRE(bdg::pairing(x, y) == bdg::pairing(y, x));
        REQUIRE(bdg::pairing(x + y, z) == bdg::pairing(x, z) + bdg::pairing(y, z));
    }
}

TEST_CASE("pairing on a fixed pair") {
    const WeightedDualGraph g = chain(2);
    const Cycle a = make(g, {{"A1", Rat(1)}});
    const Cycle b = make(g, {{"A2", Rat(1)}});
    CHECK(bdg::pairing(a, a) == -2);
    CHECK(bdg::pairing(a, b) == 1);
    CHECK(bdg::canonical_pairing(a) == 0);
}

TEST_CASE("arithmetic genus of basic cycles") {
    // A single (-2)-curve has genus 0; so does the whole (-2)-chain.
    const WeightedDualGraph g = chain(4);
    CHECK(bdg::pa_genus(make(g, {{"A1", Rat(1)}})) == 0);
    CHECK(bdg::pa_genus(make(g, {{"A1", Rat(1)},
                                 {"A2", Rat(1)},
                                 {"A3", Rat(1)},
                                 {"A4", Rat(1)}})) == 0);
    // Doubling a (-2)-curve: p_a = (-8 + 0)/2 + 1 = -3.
    CHECK(bdg::pa_genus(make(g, {{"A1", Rat(2)}})) == -3);

    CHECK_THROWS_AS(bdg::pa_genus(make(g, {{"A1", Rat(1, 2)}})), bdg::InputError);
    CHECK_THROWS_AS(bdg::pa_genus(make(g, {})), bdg::InputError);
}

TEST_CASE("genus of a sum obeys the junction formula") {
    // p_a(x + y) = p_a(x) + p_a(y) + (x . y) - 1 for integral cycles.
    std::mt19937 rng(4302);
    WeightedDualGraph g = chain(4, -3);
    g.add_vertex("B", -4);
    g.add_edge("A2", "B");
    for (int trial = 0; trial < 100; ++trial) {
        const Cycle x = random_cycle(g, rng, 1, 4);
        const Cycle y = random_cycle(g, rng, 1, 4);
        CAPTURE(trial);
        REQUIRE(bdg::pa_genus(x + y) ==
                bdg::pa_genus(x) + bdg::pa_genus(y) + bdg::pairing(x, y) - 1);
    }
}

TEST_CASE("anti-canonical cycle satisfies the adjunction equations") {
    for (const auto& entry : bdg::corpus()) {
        const WeightedDualGraph d = entry.boundary().d_part();
        for (const auto& comp : bdg::connected_components(d)) {
            const bdg::DSharpResult ds = bdg::compute_d_sharp(comp);
            for (const auto& id : comp.vertex_ids()) {
                const Cycle unit = make(comp, {{id, Rat(1)}});
                CAPTURE(entry.name);
                CAPTURE(id);
                REQUIRE(Rat(bdg::canonical_degree(comp.weight(id))) +
                            bdg::pairing(unit, ds.cycle) ==
                        0);
            }
        }
    }
}

TEST_CASE("anti-canonical cycle needs negative definiteness") {
    WeightedDualGraph g;
    g.add_vertex("A", 0);
    CHECK_THROWS_AS(bdg::compute_d_sharp(g), bdg::InputError);
}

TEST_CASE("c_pairing sums the coefficients seen by the marked curve") {
    const WeightedDualGraph g = chain(3);
    // alpha solves the (-2)-chain adjunction: all zero.
    const bdg::DSharpResult plain = bdg::compute_d_sharp(g);
    CHECK_FALSE(plain.c_pairing.has_value());
    CHECK(plain.cycle.is_zero());
    CHECK(plain.integral);
    CHECK_THROWS_AS(bdg::k_gamma_mumford(plain), bdg::InputError);

    const bdg::DSharpResult with_c =
        bdg::compute_d_sharp(g, std::set<std::string>{"A1", "A3"});
    REQUIRE(with_c.c_pairing.has_value());
    CHECK(*with_c.c_pairing == 0);
    CHECK(bdg::k_gamma_mumford(with_c) == -1);
}

TEST_CASE("k_gamma on a weighted chain") {
    // Chain (-3) - (-2): alpha = (2/5, 1/5); meeting A1 gives c = 2/5.
    WeightedDualGraph g;
    g.add_vertex("A1", -3);
    g.add_vertex("A2", -2);
    g.add_edge("A1", "A2");
    const bdg::DSharpResult ds =
        bdg::compute_d_sharp(g, std::set<std::string>{"A1"});
    CHECK(ds.cycle.at("A1") == Rat(2, 5));
    CHECK(ds.cycle.at("A2") == Rat(1, 5));
    CHECK_FALSE(ds.integral);
    CHECK(*ds.c_pairing == Rat(2, 5));
    CHECK(bdg::k_gamma_mumford(ds) == Rat(-3, 5));
}
