#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "linkq/errors.hpp"
#include "linkq/quiver.hpp"

using namespace linkq;

namespace {

Polynomial poly(std::initializer_list<std::pair<int, long long>> terms) {
    Polynomial p;
    for (const auto& [e, c] : terms) p.add_term(e, c);
    return p;
}

DirectedMultigraph cycle(const std::vector<std::pair<int, int>>& edges, int n) {
    DirectedMultigraph g = DirectedMultigraph::with_vertices(n);
    for (const auto& [u, v] : edges) ++g.weights[u][v];
    return g;
}

long long in_degree(const DirectedMultigraph& g, int v) {
    long long sum = 0;
    for (int u = 0; u < g.vertex_count; ++u) sum += g.weights[u][v];
    return sum;
}

} // namespace

TEST_CASE("complete regular multigraphs") {
    const DirectedMultigraph loops = complete_regular(1, 5);
    CHECK(loops.vertex_count == 1);
    CHECK(loops.weights == std::vector<std::vector<int>>{{5}});

    const DirectedMultigraph k41 = complete_regular(4, 1);
    long long total = 0;
    for (const auto& row : k41.weights) total += std::accumulate(row.begin(), row.end(), 0LL);
    CHECK(total == 16);

    CHECK(complete_regular(0, 7).vertex_count == 0);
    CHECK_THROWS_AS(complete_regular(-1, 1), std::invalid_argument);
}

TEST_CASE("directed join block structure") {
    const DirectedMultigraph j = directed_join(complete_regular(2, 1), complete_regular(4, 1), 1);
    CHECK(j.vertex_count == 6);
    CHECK(j.weights[0][1] == 1);
    CHECK(j.weights[0][3] == 1);
    CHECK(j.weights[3][0] == 0);
    CHECK(j.weights[2][5] == 1);
    CHECK(in_degree_polynomial(j) == poly({{6, 4}, {2, 2}}));

    const DirectedMultigraph empty;
    CHECK(directed_join(empty, complete_regular(3, 2), 9) == complete_regular(3, 2));
    CHECK(directed_join(complete_regular(3, 2), empty, 9) == complete_regular(3, 2));
}

TEST_CASE("graph isomorphism") {
    const DirectedMultigraph k21 = complete_regular(2, 1);
    CHECK(are_isomorphic(k21, k21));
    CHECK_FALSE(are_isomorphic(k21, complete_regular(2, 2)));
    CHECK_FALSE(are_isomorphic(k21, complete_regular(3, 1)));

    // One 6-cycle vs two 3-cycles: identical degree data, different structure.
    const DirectedMultigraph c6 =
        cycle({{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}}, 6);
    const DirectedMultigraph c33 =
        cycle({{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}}, 6);
    const DirectedMultigraph c33_relabeled =
        cycle({{5, 2}, {2, 1}, {1, 5}, {0, 4}, {4, 3}, {3, 0}}, 6);
    CHECK_FALSE(are_isomorphic(c6, c33));
    CHECK(are_isomorphic(c33, c33_relabeled));
    CHECK(are_isomorphic(c33_relabeled, c33));
    CHECK(are_isomorphic(c6, c6));

    CHECK_THROWS_AS(are_isomorphic(complete_regular(13, 1), complete_regular(13, 1)),
                    CapacityError);
    CHECK(are_isomorphic(complete_regular(13, 1), complete_regular(13, 1), 13));
}

TEST_CASE("polynomial text form") {
    CHECK(Polynomial{}.str() == "0");
    CHECK(Polynomial{}.is_zero());
    CHECK(poly({{9, 1}, {4, 4}}).str() == "u^9 + 4u^4");
    CHECK(poly({{1, 1}}).str() == "u");
    CHECK(poly({{1, 2}}).str() == "2u");
    CHECK(poly({{0, 3}}).str() == "3");
    CHECK(poly({{2, 1}, {1, 3}, {0, 1}}).str() == "u^2 + 3u + 1");

    Polynomial accumulated;
    accumulated.add_term(4);
    accumulated.add_term(4);
    accumulated.add_term(4);
    CHECK(accumulated == poly({{4, 3}}));
    CHECK(accumulated.str() == "3u^4");

    CHECK_THROWS_AS(Polynomial{}.add_term(-1), std::invalid_argument);
    CHECK_THROWS_AS(Polynomial{}.add_term(2, 0), std::invalid_argument);
}

TEST_CASE("in-degree polynomial") {
    CHECK(in_degree_polynomial(complete_regular(1, 7)) == poly({{7, 1}}));
    CHECK(in_degree_polynomial(DirectedMultigraph{}).is_zero());
}

TEST_CASE("reference quiver of the 10-crossing torus linkoid over (Z_5, 0, 0)") {
    const ColoringQuiver q = build_quiver(torus_linkoid(10), PointedQuandle(dihedral(5), {0, 0}));
    CHECK(q.graph.vertex_count == 5);
    CHECK(q.vertices.size() == 5);
    CHECK(are_isomorphic(q.graph,
                         directed_join(complete_regular(4, 1), complete_regular(1, 5), 1)));
    CHECK(in_degree_polynomial(q.graph) == poly({{9, 1}, {4, 4}}));
}

TEST_CASE("small quivers") {
    const ColoringQuiver k12 = build_quiver(torus_linkoid(3), PointedQuandle(dihedral(2), {0, 0}));
    CHECK(k12.graph.vertex_count == 1);
    CHECK(k12.graph.weights == std::vector<std::vector<int>>{{2}});
    CHECK(in_degree_polynomial(k12.graph) == poly({{2, 1}}));

    const ColoringQuiver none = build_quiver(torus_linkoid(2), PointedQuandle(dihedral(2), {0, 1}));
    CHECK(none.graph.vertex_count == 0);
    CHECK(none.vertices.empty());
    CHECK(in_degree_polynomial(none.graph).is_zero());
}

TEST_CASE("quiver over an endomorphism subset") {
    const PointedQuandle pq(dihedral(5), {0, 0});
    const LinkoidDiagram d = torus_linkoid(10);
    const QuandleMap identity{5, 5, {0, 1, 2, 3, 4}};

    const ColoringQuiver q = build_quiver(d, pq, std::vector<QuandleMap>{identity});
    CHECK(q.graph.vertex_count == 5);
    for (int a = 0; a < 5; ++a) {
        for (int b = 0; b < 5; ++b) CHECK(q.graph.weights[a][b] == (a == b ? 1 : 0));
    }

    // A quandle endomorphism that moves the basepoint is rejected.
    const QuandleMap shift{5, 5, {1, 2, 3, 4, 0}};
    CHECK_THROWS_AS(build_quiver(d, pq, std::vector<QuandleMap>{shift}), std::invalid_argument);
    CHECK_THROWS_AS(build_quiver(d, pq, std::vector<QuandleMap>{identity, identity}),
                    std::invalid_argument);
    CHECK_THROWS_AS(build_quiver(d, pq, std::vector<QuandleMap>{QuandleMap{4, 4, {0, 1, 2, 3}}}),
                    std::invalid_argument);
}

TEST_CASE("quiver bookkeeping identities") {
    for (int p = 1; p <= 6; ++p) {
        for (int n = 1; n <= 6; ++n) {
            for (int y = 0; y < n; ++y) {
                const PointedQuandle pq(dihedral(n), {y, y});
                const auto endos = enumerate_pointed_homs(pq, pq);
                const ColoringQuiver q = build_quiver(torus_linkoid(p), pq);
                const long long order = static_cast<long long>(endos.size());

                long long total_in = 0;
                for (int v = 0; v < q.graph.vertex_count; ++v) {
                    const long long out =
                        std::accumulate(q.graph.weights[v].begin(), q.graph.weights[v].end(), 0LL);
                    CHECK(out == order);
                    total_in += in_degree(q.graph, v);
                }
                CHECK(total_in == order * q.graph.vertex_count);

                for (const QuandleMap& phi : endos) {
                    for (const Coloring& alpha : q.vertices) {
                        Coloring image;
                        for (int c : alpha) image.push_back(phi.images[c]);
                        CHECK(std::find(q.vertices.begin(), q.vertices.end(), image) !=
                              q.vertices.end());
                    }
                }
            }
        }
    }
}

TEST_CASE("in-degree polynomial matrices") {
    const PolynomialMatrix ref = in_degree_polynomial_matrix(torus_linkoid(10), dihedral(5));
    for (int i = 0; i < 5; ++i) {
        for (int j = 0; j < 5; ++j) {
            CHECK(ref.entries[i][j] == (i == j ? poly({{9, 1}, {4, 4}}) : Polynomial{}));
        }
    }

    const PolynomialMatrix m42 = in_degree_polynomial_matrix(torus_linkoid(4), dihedral(2));
    CHECK(m42.entries[0][0] == poly({{3, 1}, {1, 1}}));
    CHECK(m42.entries[1][1] == poly({{3, 1}, {1, 1}}));
    CHECK(m42.entries[0][1].is_zero());

    const PolynomialMatrix m32 = in_degree_polynomial_matrix(torus_linkoid(3), dihedral(2));
    CHECK(m32.entries[0][0] == poly({{2, 1}}));
    CHECK(m32.entries[1][1] == poly({{2, 1}}));

    CHECK_THROWS_AS(in_degree_polynomial_matrix(parse_linkoid("arcs 2\nopen 0 0\nopen 1 1\n"),
                                                dihedral(2)),
                    std::invalid_argument);
}

TEST_CASE("in-degree polynomial matrix over a subset family") {
    const auto identity_only = [](int, int) {
        return std::vector<QuandleMap>{QuandleMap{2, 2, {0, 1}}};
    };
    const PolynomialMatrix m =
        in_degree_polynomial_matrix(torus_linkoid(4), dihedral(2), identity_only);
    CHECK(m.entries[0][0] == poly({{1, 2}}));
    CHECK(m.entries[1][1] == poly({{1, 2}}));
    CHECK(m.entries[0][1].is_zero());
    CHECK(m.entries[1][0].is_zero());
}

TEST_CASE("DOT export") {
    CHECK(to_dot(complete_regular(1, 1)) == "digraph {\n  v0;\n  v0 -> v0;\n}\n");
    CHECK(to_dot(DirectedMultigraph{}) == "digraph {\n}\n");

    DirectedMultigraph two = DirectedMultigraph::with_vertices(2);
    two.weights[0][1] = 2;
    CHECK(to_dot(two) == "digraph {\n  v0;\n  v1;\n  v0 -> v1;\n  v0 -> v1;\n}\n");

    const ColoringQuiver q = build_quiver(torus_linkoid(3), PointedQuandle(dihedral(2), {0, 0}));
    CHECK(to_dot(q.graph, q.vertices) ==
          "digraph {\n  v0 [label=\"(0,0,0,0)\"];\n  v0 -> v0;\n  v0 -> v0;\n}\n");
    CHECK_THROWS_AS(to_dot(q.graph, {}), std::invalid_argument);
}

TEST_CASE("quiver and polynomial matrix serialization") {
    const ColoringQuiver q = build_quiver(torus_linkoid(3), PointedQuandle(dihedral(2), {0, 0}));
    CHECK(quiver_to_json(q) == R"({"labels":[[0,0,0,0]],"vertex_count":1,"weights":[[2]]})");

    const PolynomialMatrix m = in_degree_polynomial_matrix(torus_linkoid(3), dihedral(2));
    CHECK(polynomial_matrix_to_json(m) == R"({"entries":[["u^2","0"],["0","u^2"]],"order":2})");
    CHECK(polynomial_matrix_to_text(m) == "u^2    0\n  0  u^2\n");
}
