#include <doctest.h>

#include <map>
#include <numeric>
#include <random>
#include <sstream>

#include "dmorse/homology.hpp"
#include "oracles.hpp"

using namespace dmorse;

namespace {

// Fraction-free elimination; returns the determinant of a square matrix.
BigInt bareiss_determinant(std::vector<std::vector<BigInt>> a) {
    const std::size_t n = a.size();
    BigInt prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t r = k + 1;
            while (r < n && a[r][k] == 0) ++r;
            if (r == n) return 0;
            std::swap(a[k], a[r]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

BigInt product(const std::vector<BigInt>& v) {
    BigInt p = 1;
    for (const auto& x : v) p *= x;
    return p;
}

}  // namespace

TEST_CASE("boundary of a triangle") {
    const ExplicitComplex k({{1, 2, 3}});
    const auto d2 = boundary_matrix(k, 2);
    REQUIRE(d2.cols() == 1);
    REQUIRE(d2.rows() == 3);
    // faces of {1,2,3}: drop 1 -> {2,3} (+), drop 2 -> {1,3} (-), drop 3 -> {1,2} (+)
    std::map<SimplexId, int> col;
    for (const auto& t : d2.entries) col[d2.row_simplices[t.row]] = t.value;
    CHECK(col[k.id({2, 3})] == 1);
    CHECK(col[k.id({1, 3})] == -1);
    CHECK(col[k.id({1, 2})] == 1);

    const auto d0 = boundary_matrix(k, 0);
    CHECK(d0.rows() == 1);
    CHECK(d0.cols() == 3);
    CHECK(d0.entries.size() == 3);
    for (const auto& t : d0.entries) CHECK(t.value == 1);

    CHECK_THROWS_AS(boundary_matrix(k, 3), std::out_of_range);
    CHECK_THROWS_AS(boundary_matrix(k, -1), std::out_of_range);

    std::ostringstream out;
    write_triplets(out, d2);
    CHECK(out.str() == "0 0 1\n1 0 -1\n2 0 1\n");
}

TEST_CASE("boundary squared is zero on N_n, n <= 6") {
    for (int n = 3; n <= 6; ++n) {
        const NComplex k = NComplex::enumerate(n);
        for (int d = 1; d <= k.max_dimension(); ++d) {
            const auto hi = boundary_matrix(k, d);
            const auto lo = boundary_matrix(k, d - 1);
            std::map<SimplexId, std::size_t> lo_col;
            for (std::size_t c = 0; c < lo.cols(); ++c) lo_col[lo.col_simplices[c]] = c;
            std::vector<std::vector<std::pair<std::size_t, int>>> lo_cols(lo.cols());
            for (const auto& t : lo.entries) lo_cols[t.col].emplace_back(t.row, t.value);
            std::vector<std::vector<std::pair<std::size_t, int>>> hi_cols(hi.cols());
            for (const auto& t : hi.entries) hi_cols[t.col].emplace_back(t.row, t.value);
            bool zero = true;
            for (const auto& col : hi_cols) {
                std::map<std::size_t, long long> acc;
                for (auto [r, v] : col)
                    for (auto [r2, v2] : lo_cols[lo_col.at(hi.row_simplices[r])]) acc[r2] += v * v2;
                for (const auto& [r2, s] : acc) zero = zero && s == 0;
            }
            CHECK_MESSAGE(zero, "n=" << n << " d=" << d);
        }
    }
}

TEST_CASE("Smith normal form examples") {
    CHECK(smith_normal_form({{1, 0}, {0, 1}}) == std::vector<BigInt>{1, 1});
    CHECK(smith_normal_form({{2, 4}, {6, 8}}) == std::vector<BigInt>{2, 4});
    CHECK(smith_normal_form({{0, 0}, {0, 0}}).empty());
    CHECK(smith_normal_form(std::vector<std::vector<long long>>{}).empty());
    CHECK(smith_normal_form({{2, 0}, {0, 3}}) == std::vector<BigInt>{1, 6});
    CHECK(smith_normal_form({{6}}) == std::vector<BigInt>{6});
    CHECK(smith_normal_form({{-3}}) == std::vector<BigInt>{3});
    // duplicate triplets are summed
    CHECK(smith_normal_form(1, 1, {{0, 0, BigInt(2)}, {0, 0, BigInt(3)}}) == std::vector<BigInt>{5});
}

TEST_CASE("Smith normal form against determinant and gcd oracles") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + trial % 6;
        const int range = 1 + trial % 9;
        std::uniform_int_distribution<long long> entry(-range, range);
        std::bernoulli_distribution sparse(0.4);
        std::vector<std::vector<long long>> a(n, std::vector<long long>(n));
        std::vector<std::vector<BigInt>> big(n, std::vector<BigInt>(n));
        long long g = 0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                a[i][j] = sparse(rng) ? 0 : entry(rng);
                big[i][j] = a[i][j];
                g = std::gcd(g, a[i][j]);
            }
        const auto inv = smith_normal_form(a);
        for (std::size_t t = 1; t < inv.size(); ++t) CHECK(inv[t] % inv[t - 1] == 0);
        for (const auto& x : inv) CHECK(x > 0);
        if (g == 0) {
            CHECK(inv.empty());
            continue;
        }
        REQUIRE_FALSE(inv.empty());
        CHECK(inv.front() == g);
        BigInt det = bareiss_determinant(big);
        if (det < 0) det = -det;
        if (det != 0) {
            CHECK(inv.size() == static_cast<std::size_t>(n));
            CHECK(product(inv) == det);
        } else {
            CHECK(inv.size() < static_cast<std::size_t>(n));
        }
    }
}

TEST_CASE("reduced Betti numbers of N_3, N_4, N_5") {
    const auto b3 = reduced_betti(NComplex::enumerate(3));
    CHECK(b3.betti == std::vector<long long>{2});
    const auto b4 = reduced_betti(NComplex::enumerate(4));
    CHECK(b4.betti == std::vector<long long>{0, 6, 0});
    CHECK(b4.simplex_counts == std::vector<std::size_t>{1, 6, 15, 4});
    const auto b5 = reduced_betti(NComplex::enumerate(5));
    for (std::size_t d = 0; d < b5.betti.size(); ++d) CHECK(b5.betti[d] == (d == 2 ? 24 : 0));
    CHECK(b3.torsion_free());
    CHECK(b4.torsion_free());
    CHECK(b5.torsion_free());
}

TEST_CASE("reduced homology of small spaces") {
    SUBCASE("sphere") {
        const auto r = reduced_betti(ExplicitComplex({{1, 2}, {2, 3}, {1, 3}}));
        CHECK(r.betti == std::vector<long long>{0, 1});
    }
    SUBCASE("two points") {
        CHECK(reduced_betti(ExplicitComplex({{1}, {2}})).betti == std::vector<long long>{1});
    }
    SUBCASE("solid simplex is acyclic") {
        CHECK(reduced_betti(ExplicitComplex({{1, 2, 3, 4}})).betti == std::vector<long long>{0, 0, 0, 0});
    }
    SUBCASE("projective plane has Z/2 torsion") {
        const std::vector<std::vector<int>> tri = {{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}, {1, 2, 6},
                                                   {2, 3, 5}, {3, 4, 6}, {2, 4, 5}, {3, 5, 6}, {2, 4, 6}};
        // closed surface: every edge lies on two triangles
        std::map<std::pair<int, int>, int> edge_use;
        for (const auto& t : tri)
            for (int a = 0; a < 3; ++a)
                for (int b = a + 1; b < 3; ++b) ++edge_use[{t[a], t[b]}];
        CHECK(edge_use.size() == 15);
        for (const auto& [e, c] : edge_use) CHECK(c == 2);

        const auto r = reduced_betti(ExplicitComplex(tri));
        CHECK(r.betti == std::vector<long long>{0, 0, 0});
        CHECK_FALSE(r.torsion_free());
        CHECK(r.torsion[1] == std::vector<BigInt>{2});
        CHECK(r.torsion[0].empty());
        CHECK(r.torsion[2].empty());
    }
}

TEST_CASE("Morse prediction") {
    const NComplex k = NComplex::enumerate(5);
    const auto v = build_forman_field(k);
    const auto census = critical_census(k, v.field());
    const auto predicted = morse_predicted_betti(census);
    CHECK(predicted.betti.size() == static_cast<std::size_t>(k.max_dimension() + 1));
    CHECK(predicted.betti[2] == 24);
    CHECK(predicted.same_homology(reduced_betti(k)));

    CriticalCensus broken = census;
    broken.other_cells.push_back({0, 1, false});
    CHECK_THROWS_AS(morse_predicted_betti(broken), CensusShapeError);
    CriticalCensus two_zero = census;
    two_zero.zero_cells.push_back(LabeledGraph(5, {{1, 3}}));
    CHECK_THROWS_AS(morse_predicted_betti(two_zero), CensusShapeError);
}

TEST_CASE("capacity guard") {
    CHECK_THROWS_AS(reduced_betti(NComplex::enumerate(7)), CapacityError);
}

TEST_CASE("reduced Euler characteristic is (-1)^(n-3) (n-1)!") {
    for (int n = 3; n <= 7; ++n) {
        const NComplex k = NComplex::enumerate(n);
        const long long expected = ((n - 3) % 2 ? -1 : 1) * static_cast<long long>(oracle::factorial(n - 1));
        CHECK(reduced_euler_characteristic(k) == expected);
        if (n <= 5) CHECK(reduced_euler_characteristic(reduced_betti(k)) == expected);
    }
}
