#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "dmorse/forman.hpp"
#include "dmorse/morse.hpp"
#include "oracles.hpp"

using namespace dmorse;

namespace {

// Hollow triangle with a cyclic field around it.
struct Triangle {
    ExplicitComplex k{{{1, 2}, {2, 3}, {1, 3}}};
    DiscreteVectorField v{k.size()};
    SimplexId a = k.id({1}), b = k.id({2}), c = k.id({3});
    SimplexId ab = k.id({1, 2}), bc = k.id({2, 3}), ca = k.id({1, 3});
    Triangle() {
        v.add(a, ab);
        v.add(b, bc);
        v.add(c, ca);
    }
};

}  // namespace

TEST_CASE("a triangle field has a 3-cycle witness") {
    Triangle t;
    REQUIRE(validate_matching(t.k, t.v).ok());
    const VPath gamma({t.a, t.ab, t.b, t.bc, t.c, t.ca, t.a});
    CHECK(check_vpath(t.k, t.v, gamma).empty());
    CHECK(gamma.is_closed());
    CHECK(gamma.arrow_count() == 3);

    const auto report = is_acyclic(t.k, t.v);
    CHECK_FALSE(report.acyclic);
    REQUIRE(report.witness.has_value());
    CHECK(report.witness_dimension == 0);
    CHECK(report.witness->is_closed());
    CHECK(report.witness->arrow_count() == 3);
    CHECK(check_vpath(t.k, t.v, *report.witness).empty());

    const auto idx = check_closed_path_indices(t.k, t.v, gamma);
    CHECK(idx.x == 2);
    CHECK(idx.y == 1);
    CHECK(idx.i == std::size_t{2});
    CHECK(idx.j == std::size_t{3});

    const VPath rotated({t.b, t.bc, t.c, t.ca, t.a, t.ab, t.b});
    const auto r = check_closed_path_indices(t.k, t.v, rotated);
    CHECK(r.i == std::size_t{2});
    CHECK(r.j == std::size_t{3});
}

TEST_CASE("breaking one arrow of the triangle cycle makes it acyclic") {
    Triangle t;
    t.v.remove_involving(t.c);
    CHECK(is_acyclic(t.k, t.v).acyclic);
    CHECK_THROWS_AS(check_closed_path_indices(t.k, t.v, VPath({t.a, t.ab, t.b, t.bc, t.c, t.ca, t.a})),
                    std::invalid_argument);
}

TEST_CASE("V-path checks") {
    Triangle t;
    CHECK_THROWS_AS(VPath({t.a, t.ab}), std::invalid_argument);
    CHECK_THROWS_AS(VPath({t.a}), std::invalid_argument);
    CHECK(check_vpath(t.k, t.v, VPath({t.a, t.ab, t.b})).empty());
    CHECK_FALSE(check_vpath(t.k, t.v, VPath({t.a, t.ab, t.a})).empty());   // repeats alpha
    CHECK_FALSE(check_vpath(t.k, t.v, VPath({t.a, t.ab, t.c})).empty());   // not a face
    CHECK_FALSE(check_vpath(t.k, t.v, VPath({t.a, t.bc, t.b})).empty());   // not an arrow
    CHECK_THROWS_AS(check_closed_path_indices(t.k, t.v, VPath({t.a, t.ab, t.b})), std::invalid_argument);
}

TEST_CASE("matching violations are classified") {
    const ExplicitComplex k({{1, 2, 3}});
    const SimplexId v1 = k.id({1}), v2 = k.id({2});
    const SimplexId e12 = k.id({1, 2}), e13 = k.id({1, 3}), e23 = k.id({2, 3});
    const SimplexId tri = k.id({1, 2, 3});

    SUBCASE("unknown simplex") {
        DiscreteVectorField v(k.size());
        v.add(v1, static_cast<SimplexId>(k.size() + 3));
        const auto r = validate_matching(k, v);
        CHECK(r.count(ViolationKind::unknown_simplex) == 1);
        CHECK_THROWS_AS(is_acyclic(k, v), InvalidField);
    }
    SUBCASE("not a face") {
        DiscreteVectorField v(k.size());
        v.add(v1, e23);
        const auto r = validate_matching(k, v);
        CHECK(r.count(ViolationKind::not_a_face) == 1);
        CHECK(r.count(ViolationKind::wrong_codimension) == 0);
    }
    SUBCASE("wrong codimension") {
        DiscreteVectorField v(k.size());
        v.add(v1, tri);
        const auto r = validate_matching(k, v);
        CHECK(r.count(ViolationKind::wrong_codimension) == 1);
        CHECK(r.count(ViolationKind::not_a_face) == 0);
    }
    SUBCASE("reused simplex") {
        DiscreteVectorField v(k.size());
        v.add(v1, e12);
        v.add(v1, e13);
        v.add(v2, e12);
        const auto r = validate_matching(k, v);
        CHECK(r.count(ViolationKind::reused_simplex) == 2);
        CHECK_FALSE(r.ok());
        try {
            is_acyclic(k, v);
            FAIL("expected InvalidField");
        } catch (const InvalidField& e) {
            CHECK(e.report().count(ViolationKind::reused_simplex) == 2);
        }
    }
    SUBCASE("valid") {
        DiscreteVectorField v(k.size());
        v.add(v1, e12);
        v.add(e23, tri);
        CHECK(validate_matching(k, v).ok());
    }
    CHECK(to_string(ViolationKind::reused_simplex) == "reused_simplex");
}

TEST_CASE("the empty field is acyclic and every nonempty simplex is critical") {
    const ExplicitComplex k({{1, 2, 3}, {3, 4}});
    const DiscreteVectorField v(k.size());
    CHECK(is_acyclic(k, v).acyclic);
    CHECK(critical_simplices(k, v).size() == k.size() - 1);
}

TEST_CASE("critical simplices partition the complex with the arrows") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        const ExplicitComplex k(oracle::random_generators(rng, 5, 20));
        const auto v = oracle::random_matching(k, rng);
        REQUIRE(validate_matching(k, v).ok());
        const auto crit = critical_simplices(k, v);
        const SimplexId empty = k.id({});
        std::size_t unpaired_nonempty = 0;
        for (SimplexId s = 0; static_cast<std::size_t>(s) < k.size(); ++s)
            if (s != empty && !v.is_paired(s)) ++unpaired_nonempty;
        const bool empty_paired = v.is_paired(empty);
        CHECK(crit.size() == unpaired_nonempty + (empty_paired ? 1 : 0));
        for (const auto& c : crit) {
            CHECK(c.dimension == k.dimension(c.simplex));
            if (c.paired_with_empty) CHECK(v.partner(c.simplex) == empty);
            else CHECK_FALSE(v.is_paired(c.simplex));
        }
        CHECK(k.size() == 2 * v.arrows().size() + unpaired_nonempty + (empty_paired ? 0 : 1));
    }
}

TEST_CASE("V-digraph arcs agree with a direct enumeration on N_4") {
    const NComplex k = NComplex::enumerate(4);
    const auto staged = build_forman_field(k);
    std::mt19937 rng(5);
    const DiscreteVectorField random = oracle::random_matching(k, rng);
    for (const DiscreteVectorField* v : {&staged.field(), &random}) {
        for (int d = -1; d <= k.max_dimension(); ++d) {
            const VDigraph g = v_digraph(k, *v, d);
            std::set<std::pair<SimplexId, SimplexId>> got, want;
            for (std::size_t i = 0; i < g.nodes.size(); ++i)
                for (SimplexId t : g.arcs[i]) got.emplace(g.nodes[i], t);
            for (const Arrow& a : v->arrows()) {
                if (k.dimension(a.tail) != d) continue;
                const auto he = k.elements(a.head);
                for (SimplexId s = 0; static_cast<std::size_t>(s) < k.size(); ++s) {
                    if (s == a.tail || k.dimension(s) != d || !v->is_tail(s)) continue;
                    const auto se = k.elements(s);
                    if (std::includes(he.begin(), he.end(), se.begin(), se.end())) want.emplace(a.tail, s);
                }
            }
            CHECK(got == want);
        }
    }
}

TEST_CASE("random matchings: acyclicity agrees with closed-path enumeration") {
    std::mt19937 rng(2024);
    int cyclic = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const ExplicitComplex k(oracle::random_generators(rng, 4 + trial % 3, 12));
        const auto v = oracle::random_matching(k, rng);
        REQUIRE(validate_matching(k, v).ok());
        const auto closed = oracle::closed_paths(k, v, v.arrows().size() + 1);
        const auto report = is_acyclic(k, v);
        CHECK(report.acyclic == closed.empty());
        if (!report.acyclic) {
            ++cyclic;
            REQUIRE(report.witness.has_value());
            CHECK(report.witness->is_closed());
            CHECK(check_vpath(k, v, *report.witness).empty());
            CHECK(check_closed_path_indices(k, v, *report.witness).holds());
        }
        for (const auto& p : closed) {
            const VPath gamma(p);
            REQUIRE(check_vpath(k, v, gamma).empty());
            const auto idx = check_closed_path_indices(k, v, gamma);
            CHECK(idx.holds());
        }
    }
    CHECK(cyclic >= 10);
}

TEST_CASE("DOT export") {
    Triangle t;
    std::ostringstream out;
    write_dot(out, t.k, t.v, 0);
    const std::string dot = out.str();
    CHECK(dot.rfind("digraph", 0) == 0);
    CHECK(dot.find("s" + std::to_string(t.a) + " -> s" + std::to_string(t.ab) + " [style=bold") != std::string::npos);
    CHECK(dot.find("s" + std::to_string(t.ab) + " -> s" + std::to_string(t.b) + ";") != std::string::npos);
}
