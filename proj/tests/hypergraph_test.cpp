#include <algorithm>

#include "doctest.h"
#include "lolab/hypergraph.hpp"
#include "lolab/subsets.hpp"

using namespace lolab;

TEST_CASE("verify_lo examples") {
    const Hypergraph3 h(3, {{1, 2, 3}});
    CHECK(verify_lo(h, 3, {0, 1, 2}).ok);
    CHECK(verify_lo(h, 3, {0, 2, 0}).ok);
    CHECK_FALSE(verify_lo(h, 3, {0, 1, 1}).ok);
    CHECK(verify_lo(h, 3, {0, 1, 1}).violating_edge == 0);
    CHECK_THROWS_AS(verify_lo(h, 3, {0, 1, 3}), std::invalid_argument);
    CHECK_THROWS_AS(verify_lo(h, 3, {0, 1}), std::invalid_argument);

    // repeated coordinate: ok iff the singleton coordinate is the strict max
    const Hypergraph3 rep(2, {{1, 1, 2}});
    CHECK(verify_lo(rep, 3, {0, 1}).ok);
    CHECK_FALSE(verify_lo(rep, 3, {1, 0}).ok);
    CHECK_FALSE(verify_lo(rep, 3, {1, 1}).ok);
}

TEST_CASE("verify_lo is invariant under coordinate permutation") {
    const Assignment a{0, 2, 1, 0};
    const std::array<int, 3> base{2, 3, 4};
    std::array<int, 3> e = base;
    std::sort(e.begin(), e.end());
    do {
        const Hypergraph3 h(4, {e});
        CHECK(verify_lo(h, 3, a).ok ==
              verify_lo(Hypergraph3(4, {base}), 3, a).ok);
    } while (std::next_permutation(e.begin(), e.end()));
}

TEST_CASE("exact solver") {
    SUBCASE("single edge at l=2 has exactly one 1") {
        const Hypergraph3 h(3, {{1, 2, 3}});
        const SolveResult r = solve_lo_exact(h, 2);
        REQUIRE(r.status == SolveStatus::Sat);
        CHECK(std::count(r.assignment.begin(), r.assignment.end(), 1) == 1);
    }
    SUBCASE("constant edge is unsatisfiable at any l") {
        const Hypergraph3 h(1, {{1, 1, 1}});
        for (int l : {2, 3, 4})
            CHECK(solve_lo_exact(h, l).status == SolveStatus::Unsat);
    }
    SUBCASE("budget exhaustion") {
        // 8 vertices, contradictory first edge forces full backtracking
        Hypergraph3 h(8, {{1, 1, 1}, {2, 3, 4}, {5, 6, 7}});
        CHECK(solve_lo_exact(h, 4, 2).status == SolveStatus::Budget);
    }
    SUBCASE("planted instances are solvable at l=2") {
        for (std::uint64_t seed = 1; seed <= 10; ++seed) {
            const PlantedInstance p = plant_lo2(12, 30, seed);
            const SolveResult r = solve_lo_exact(p.graph, 2);
            CHECK(r.status == SolveStatus::Sat);
        }
    }
}

TEST_CASE("gadget reduction") {
    SUBCASE("smallest case") {
        const Hypergraph3 out = gadget_reduce(Hypergraph3(1, {}));
        CHECK(out.vertex_count == 2);
        REQUIRE(out.edges.size() == 1);
        CHECK(out.edges[0] == std::array<int, 3>{1, 1, 2});
    }
    SUBCASE("LO2 colouring lifts to LO3 by h'(n_x) = h(x) + 1") {
        const PlantedInstance p = plant_lo2(10, 25, 5);
        const Hypergraph3 out = gadget_reduce(p.graph);
        Assignment lifted = p.plant;
        for (int c : p.plant) lifted.push_back(c + 1);
        CHECK(verify_lo(out, 3, lifted).ok);
    }
    SUBCASE("edge order is the input edges then the gadget edges") {
        const Hypergraph3 h(2, {{1, 2, 2}});
        const Hypergraph3 out = gadget_reduce(h);
        REQUIRE(out.edges.size() == 3);
        CHECK(out.edges[0] == std::array<int, 3>{1, 2, 2});
        CHECK(out.edges[1] == std::array<int, 3>{1, 1, 3});
        CHECK(out.edges[2] == std::array<int, 3>{2, 2, 4});
    }
}

TEST_CASE("planted generation") {
    const PlantedInstance a = plant_lo2(15, 40, 77);
    const PlantedInstance b = plant_lo2(15, 40, 77);
    CHECK(a.graph == b.graph);
    CHECK(a.plant == b.plant);
    CHECK(verify_lo(a.graph, 2, a.plant).ok);
    CHECK(a.graph.edges.size() == 40);
    CHECK_THROWS_AS(plant_lo2(2, 1, 1), std::invalid_argument);
}

TEST_CASE("instance serialization round-trips") {
    const Hypergraph3 h(4, {{1, 2, 3}, {2, 2, 4}});
    const std::string text = encode_instance(h);
    CHECK(text == "p hlo 4 2\ne 1 2 3\ne 2 2 4\n");
    CHECK(decode_instance(text) == h);

    const PlantedInstance p = plant_lo2(20, 50, 3);
    CHECK(decode_instance(encode_instance(p.graph)) == p.graph);

    CHECK_THROWS_AS(decode_instance("q hlo 1 0\n"), ParseError);
    CHECK_THROWS_AS(decode_instance("p hlo 3 2\ne 1 2 3\n"), ParseError);
    CHECK_THROWS_AS(decode_instance("p hlo 3 1\ne 1 2 4\n"), std::invalid_argument);
}

TEST_CASE("assignment serialization") {
    const Assignment a{0, 2, 1};
    CHECK(encode_assignment(a) == "a 0 2 1\n");
    CHECK(decode_assignment("a 0 2 1\n") == a);
    CHECK_THROWS_AS(decode_assignment("b 0 1\n"), ParseError);
    CHECK_THROWS_AS(decode_assignment("a 0 x\n"), ParseError);
}
