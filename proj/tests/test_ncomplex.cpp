#include <doctest.h>

#include <algorithm>

#include "dmorse/ncomplex.hpp"
#include "oracles.hpp"

using namespace dmorse;

TEST_CASE("simplex counts match brute force for n = 3..6") {
    for (int n = 3; n <= 6; ++n) {
        const NComplex k = NComplex::enumerate(n);
        CHECK(k.size() == oracle::disconnected_count_bruteforce(n));
        CHECK(k.size() == oracle::disconnected_count_recurrence(n));
    }
}

TEST_CASE("simplex count matches the connected-graph recurrence for n = 7") {
    const NComplex k = NComplex::enumerate(7);
    CHECK(k.size() == oracle::disconnected_count_recurrence(7));
    CHECK(k.size() == 230896);
}

TEST_CASE("small complexes") {
    const NComplex k3 = NComplex::enumerate(3);
    CHECK(k3.size() == 4);
    CHECK(k3.max_dimension() == 0);
    CHECK(k3.count(-1) == 1);
    CHECK(k3.count(0) == 3);
    CHECK(k3.graph(0) == LabeledGraph(3));
    CHECK(k3.simplices(0) ==
          std::vector<LabeledGraph>{LabeledGraph(3, {{1, 2}}), LabeledGraph(3, {{1, 3}}), LabeledGraph(3, {{2, 3}})});

    const NComplex k4 = NComplex::enumerate(4);
    CHECK(k4.size() == 26);
    CHECK(k4.max_dimension() == 2);
    CHECK(k4.count(0) == 6);
    CHECK(k4.count(1) == 15);
    CHECK(k4.count(2) == 4);  // the four triangles
}

TEST_CASE("top dimension is C(n-1,2) - 1") {
    for (int n = 3; n <= 7; ++n) {
        const NComplex k = NComplex::enumerate(n);
        CHECK(k.max_dimension() == static_cast<int>(oracle::binomial(n - 1, 2)) - 1);
        CHECK(k.top_dimension() == k.max_dimension());
        CHECK(k.count(k.max_dimension()) == static_cast<std::size_t>(n));  // K_{n-1} plus an isolated vertex
    }
}

TEST_CASE("faces and cofaces") {
    const NComplex k = NComplex::enumerate(4);
    const LabeledGraph g(4, {{2, 4}, {3, 4}});
    CHECK(k.faces(g) == std::vector<LabeledGraph>{LabeledGraph(4, {{3, 4}}), LabeledGraph(4, {{2, 4}})});
    CHECK(k.cofaces(g) == std::vector<LabeledGraph>{LabeledGraph(4, {{2, 3}, {2, 4}, {3, 4}})});

    // two edges never connect four vertices, three edges only sometimes
    CHECK(k.cofaces(LabeledGraph(4, {{1, 2}})).size() == 5);
    const auto up = k.cofaces(LabeledGraph(4, {{1, 2}, {3, 4}}));
    CHECK(up.empty());
    CHECK(k.cofaces(LabeledGraph(4, {{1, 2}, {1, 3}})).size() == 1);

    CHECK(k.faces(LabeledGraph(4, {{1, 2}})) == std::vector<LabeledGraph>{LabeledGraph(4)});
    CHECK(k.faces(LabeledGraph(4)).empty());
}

TEST_CASE("the complex is down-closed and contains exactly the disconnected graphs, n <= 6") {
    for (int n = 3; n <= 6; ++n) {
        const NComplex k = NComplex::enumerate(n);
        const std::uint64_t total = std::uint64_t{1} << pair_count(n);
        for (std::uint64_t m = 0; m < total; ++m) {
            const bool in = k.find_mask(m).has_value();
            if (in != !oracle::connected(m, n)) {
                FAIL("membership disagrees for mask " << m << " at n=" << n);
            }
        }
        for (SimplexId s = 0; static_cast<std::size_t>(s) < k.size(); ++s) {
            const auto m = k.mask(s);
            for (int b = 0; b < pair_count(n); ++b)
                if ((m >> b) & 1u) {
                    if (!k.find_mask(m & ~(LabeledGraph::Mask{1} << b))) FAIL("face missing at n=" << n);
                }
        }
    }
}

TEST_CASE("ids run through dimensions in canonical order") {
    const NComplex k = NComplex::enumerate(5);
    for (SimplexId s = 1; static_cast<std::size_t>(s) < k.size(); ++s) {
        const int d0 = k.dimension(s - 1), d1 = k.dimension(s);
        CHECK(d0 <= d1);
        if (d0 == d1) CHECK(k.mask(s - 1) < k.mask(s));
    }
    for (int d = -1; d <= k.max_dimension(); ++d) {
        const SimplexId first = k.first_id(d);
        CHECK(k.dimension(first) == d);
        CHECK(k.graph(first).edge_count() == d + 1);
    }
}

TEST_CASE("abstract interface agrees with graph queries") {
    const NComplex k = NComplex::enumerate(5);
    for (SimplexId s = 0; static_cast<std::size_t>(s) < k.size(); ++s) {
        const auto e = k.elements(s);
        REQUIRE(k.find(std::span<const int>(e)) == s);
        for (SimplexId f : k.faces(s)) CHECK(k.is_subset(f, s));
        for (SimplexId c : k.cofaces(s)) CHECK(k.dimension(c) == k.dimension(s) + 1);
        CHECK(k.label(s) == k.graph(s).to_string());
    }
}

TEST_CASE("errors") {
    CHECK_THROWS_AS(NComplex::enumerate(2), GraphError);
    CHECK_THROWS_AS(NComplex::enumerate(8), CapacityError);

    const NComplex k = NComplex::enumerate(4);
    const LabeledGraph path(4, {{1, 2}, {2, 3}, {3, 4}});
    CHECK_FALSE(k.contains_graph(path));
    CHECK_THROWS_AS(k.id_of(path), NotInComplex);
    CHECK_THROWS_AS(k.id_of(LabeledGraph(5)), NotInComplex);
    CHECK_THROWS_AS(k.faces(path), NotInComplex);
}
