#include <doctest.h>

#include "hcov/geometry.hpp"
#include "hcov/hypergraph.hpp"
#include "oracles.hpp"

using namespace hcov;

namespace {

Hypergraph k34() { return complete_uniform(3); }

std::vector<std::vector<int>> incidence_matrix(const Hypergraph& h) {
    std::vector<std::vector<int>> z(h.vertex_count(), std::vector<int>(h.edge_count(), 0));
    for (int j = 0; j < h.edge_count(); ++j)
        for (int v : h.edge(j)) z[v][j] = 1;
    return z;
}

}  // namespace

TEST_SUITE_BEGIN("hypercore");

TEST_CASE("parse smallest uniform hypergraph") {
    Hypergraph h = parse_hypergraph("hg 1\nn 3\ne 0 1 2\n");
    CHECK(h.vertex_count() == 3);
    REQUIRE(h.edge_count() == 1);
    CHECK(h.edge(0) == std::vector<int>{0, 1, 2});
}

TEST_CASE("parse K^3_4 and validate") {
    std::string text = "hg 1\nn 4\ne 0 1 2\ne 0 1 3\ne 0 2 3\ne 1 2 3\n";
    Hypergraph h = parse_hypergraph(text);
    CHECK(h == k34());
    auto rep = validate(h);
    CHECK(rep.is_uniform);
    CHECK(rep.r == 3);
    CHECK(rep.is_regular);
    CHECK(rep.d == 3);
    CHECK(rep.is_connected);
    CHECK(rep.nu == 4);
    CHECK(rep.e == 4);
    CHECK(rep.tau == 4);
}

TEST_CASE("parse accepts comments and blank lines") {
    Hypergraph h = parse_hypergraph("# header comment\n\nhg 1\nn 2\n# edge next\ne 0 1\n");
    CHECK(h.vertex_count() == 2);
    CHECK(h.edge_count() == 1);
}

TEST_CASE("parse errors carry line numbers and kinds") {
    CHECK_THROWS_WITH_AS(parse_hypergraph("hg 2\nn 1\n"),
                         "line 1: malformed header (expected 'hg 1')", ParseError);
    CHECK_THROWS_WITH_AS(parse_hypergraph("hg 1\nn 2\ne 0 0\n"),
                         "line 3: non-ascending vertices", ParseError);
    CHECK_THROWS_WITH_AS(parse_hypergraph("hg 1\nn 2\ne 1 2\n"),
                         "line 3: vertex index out of range", ParseError);
    CHECK_THROWS_WITH_AS(parse_hypergraph("hg 1\nn 2\ne 1\n"), "line 3: edge of size < 2",
                         ParseError);
    CHECK_THROWS_AS(parse_hypergraph("hg 1\nn 2\nx 0 1\n"), ParseError);
    CHECK_THROWS_AS(parse_hypergraph(""), ParseError);
}

TEST_CASE("validate AG planes") {
    auto rep = validate(affine_plane(3));
    CHECK(rep.is_uniform);
    CHECK(rep.r == 3);
    CHECK(rep.is_regular);
    CHECK(rep.d == 4);
    CHECK(rep.is_connected);
    CHECK(rep.nu == 9);
    CHECK(rep.e == 12);
    CHECK(rep.tau == 9);
}

TEST_CASE("disconnected hypergraph detected") {
    Hypergraph h(4, {{0, 1}, {2, 3}});
    CHECK_FALSE(validate(h).is_connected);
    CHECK(validate(Hypergraph(1, {})).is_connected);
    CHECK_FALSE(validate(Hypergraph(2, {})).is_connected);
}

TEST_CASE("incidence graph shape") {
    auto b1 = incidence_graph(Hypergraph(3, {{0, 1, 2}}));
    CHECK(b1.left == 3);
    CHECK(b1.right == 1);
    CHECK(b1.adjacency.size() == 3);

    auto b2 = incidence_graph(k34());
    CHECK(b2.adjacency.size() == 12);

    auto b3 = incidence_graph(affine_plane(2));
    CHECK(b3.adjacency.size() == 12);  // 6 edges x 2
    std::vector<int> ldeg(b3.left, 0), rdeg(b3.right, 0);
    for (auto [v, e] : b3.adjacency) {
        ldeg[v]++;
        rdeg[e]++;
    }
    for (int d : ldeg) CHECK(d == 3);
    for (int d : rdeg) CHECK(d == 2);
}

TEST_CASE("dual of K^3_4 and the Fano plane") {
    auto d1 = dual(k34());
    auto rep = validate(d1);
    CHECK(rep.nu == 4);
    CHECK(rep.e == 4);
    CHECK(rep.is_uniform);
    CHECK(rep.r == 3);
    CHECK(rep.is_regular);
    CHECK(rep.d == 3);

    auto fano = projective_plane(2);
    auto d2 = validate(dual(fano));
    CHECK(d2.nu == 7);
    CHECK(d2.e == 7);
    CHECK(d2.r == 3);
    CHECK(d2.d == 3);
}

TEST_CASE("dual is an involution on the incidence matrix") {
    for (auto h : {k34(), affine_plane(2), projective_plane(2), affine_plane(3)}) {
        auto dd = dual(dual(h));
        CHECK(incidence_matrix(dd) == incidence_matrix(h));
    }
}

TEST_CASE("dual rejects low-degree vertices") {
    Hypergraph h(3, {{0, 1, 2}});
    CHECK_THROWS_WITH_AS(dual(h), "dual: vertex 0 has degree 1 (< 2)", std::invalid_argument);
}

TEST_CASE("dual transposes the incidence matrix") {
    for (auto h : {k34(), affine_plane(3)}) {
        auto hd = dual(h);
        auto z = incidence_matrix(h);
        auto zt = incidence_matrix(hd);
        REQUIRE(zt.size() == z[0].size());
        for (size_t i = 0; i < z.size(); ++i)
            for (size_t j = 0; j < z[i].size(); ++j) CHECK(z[i][j] == zt[j][i]);
    }
}

TEST_CASE("handshake over incidences") {
    SplitMix64 g(11);
    for (int t = 0; t < 20; ++t) {
        auto h = oracle::random_connected_hypergraph(g, 10);
        int degsum = 0;
        for (int d : h.degrees()) degsum += d;
        CHECK(degsum == h.incidence_count());
    }
}

TEST_CASE("serialize round trip") {
    std::string canonical = "hg 1\nn 4\ne 0 1 2\ne 0 1 3\ne 0 2 3\ne 1 2 3\n";
    CHECK(serialize_hypergraph(parse_hypergraph(canonical)) == canonical);
    SplitMix64 g(5);
    for (int t = 0; t < 10; ++t) {
        auto h = oracle::random_connected_hypergraph(g, 8);
        CHECK(parse_hypergraph(serialize_hypergraph(h)) == h);
    }
}

TEST_CASE("construction rejects invalid edges") {
    CHECK_THROWS_AS(Hypergraph(3, {{0}}), std::invalid_argument);
    CHECK_THROWS_AS(Hypergraph(3, {{0, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(Hypergraph(3, {{1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Hypergraph(-1, {}), std::invalid_argument);
}

TEST_SUITE_END();
