#include <doctest.h>

#include "hcov/geometry.hpp"
#include "hcov/ramanujan.hpp"
#include "hcov/spectra.hpp"

using namespace hcov;

namespace {

void check_field_axioms(int q) {
    Field f = Field::make(q);
    for (int a = 0; a < q; ++a) {
        CHECK(f.add(a, 0) == a);
        CHECK(f.mul(a, 1) == a);
        CHECK(f.add(a, f.neg(a)) == 0);
        if (a != 0) CHECK(f.mul(a, f.inv(a)) == 1);
        for (int b = 0; b < q; ++b) {
            CHECK(f.add(a, b) == f.add(b, a));
            CHECK(f.mul(a, b) == f.mul(b, a));
            for (int c = 0; c < q; ++c) {
                CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
                CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
            }
        }
    }
}

void check_group(const Spectrum& s, size_t i, double value, int mult) {
    REQUIRE(i < s.groups.size());
    CHECK(s.groups[i].value == doctest::Approx(value).epsilon(0).scale(1).margin(1e-8));
    CHECK(s.groups[i].multiplicity == mult);
}

}  // namespace

TEST_SUITE_BEGIN("geometry");

TEST_CASE("prime field arithmetic") {
    Field f5 = Field::make(5);
    CHECK(f5.mul(3, 4) == 2);
    CHECK(f5.inv(2) == 3);
    CHECK(f5.sub(1, 3) == 3);
}

TEST_CASE("GF(4) follows x^2 + x + 1") {
    Field f = Field::make(4);
    // element 2 is x; x^2 = x + 1 which is element 3
    CHECK(f.mul(2, 2) == 3);
    CHECK(f.add(2, 3) == 1);
    CHECK(f.inv(2) == 3);
}

TEST_CASE("field axioms hold exhaustively") {
    for (int q : {2, 3, 4, 5, 7, 8, 9}) check_field_axioms(q);
}

TEST_CASE("unsupported orders are rejected") {
    for (int q : {0, 1, 6, 10, 12, 16, 25}) {
        CHECK_FALSE(Field::supported(q));
        CHECK_THROWS_AS(Field::make(q), std::invalid_argument);
    }
    CHECK(Field::supported(11));
    CHECK(Field::supported(9));
}

TEST_CASE("complete uniform hypergraphs") {
    auto h3 = complete_uniform(3);
    auto rep = validate(h3);
    CHECK(rep.nu == 4);
    CHECK(rep.e == 4);
    CHECK(rep.d == 3);
    CHECK(rep.r == 3);
    CHECK(h3.edge(0) == std::vector<int>{0, 1, 2});

    auto rep2 = validate(complete_uniform(2));
    CHECK(rep2.nu == 3);
    CHECK(rep2.e == 3);
    CHECK(rep2.r == 2);

    auto rep5 = validate(complete_uniform(5));
    CHECK(rep5.nu == 6);
    CHECK(rep5.e == 6);
    CHECK(rep5.d == 5);
    CHECK(rep5.r == 5);

    CHECK_THROWS_AS(complete_uniform(1), std::invalid_argument);
}

TEST_CASE("projective planes") {
    auto fano = projective_plane(2);
    auto rep = validate(fano);
    CHECK(rep.nu == 7);
    CHECK(rep.e == 7);
    CHECK(rep.d == 3);
    CHECK(rep.r == 3);
    auto s = sym_eigenvalues(adjacency_matrix(fano));
    check_group(s, 0, 6.0, 1);
    check_group(s, 1, -1.0, 6);

    auto rep3 = validate(projective_plane(3));
    CHECK(rep3.nu == 13);
    CHECK(rep3.e == 13);
    CHECK(rep3.d == 4);
    CHECK(rep3.r == 4);
}

TEST_CASE("any two points lie on a unique line") {
    for (int q : {2, 3, 4}) {
        auto pg = projective_plane(q);
        int n = pg.vertex_count();
        std::vector<std::vector<int>> pair_count(n, std::vector<int>(n, 0));
        for (const auto& line : pg.edges())
            for (size_t i = 0; i < line.size(); ++i)
                for (size_t j = i + 1; j < line.size(); ++j) pair_count[line[i]][line[j]]++;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) CHECK(pair_count[i][j] == 1);
    }
}

TEST_CASE("affine planes") {
    auto ag2 = affine_plane(2);
    auto rep = validate(ag2);
    CHECK(rep.nu == 4);
    CHECK(rep.e == 6);
    CHECK(rep.d == 3);
    CHECK(rep.r == 2);
    auto s = sym_eigenvalues(adjacency_matrix(ag2));
    check_group(s, 0, 3.0, 1);
    check_group(s, 1, -1.0, 3);

    auto s3 = sym_eigenvalues(adjacency_matrix(affine_plane(3)));
    check_group(s3, 0, 8.0, 1);
    check_group(s3, 1, -1.0, 8);

    auto rep5 = validate(affine_plane(5));
    CHECK(rep5.nu == 25);
    CHECK(rep5.e == 30);
    CHECK(rep5.d == 6);
    CHECK(rep5.r == 5);
}

TEST_CASE("removing a projective line leaves affine parameters") {
    for (int q : {2, 3, 4}) {
        auto pg = projective_plane(q);
        const auto& line0 = pg.edge(0);
        std::vector<int> keep(pg.vertex_count(), 1);
        for (int v : line0) keep[v] = 0;
        std::vector<int> remap(pg.vertex_count(), -1);
        int next = 0;
        for (int v = 0; v < pg.vertex_count(); ++v)
            if (keep[v]) remap[v] = next++;
        std::vector<std::vector<int>> edges;
        for (int e = 1; e < pg.edge_count(); ++e) {
            std::vector<int> ne;
            for (int v : pg.edge(e))
                if (keep[v]) ne.push_back(remap[v]);
            if (ne.size() >= 2) edges.push_back(ne);
        }
        Hypergraph trimmed(next, edges);
        auto rep = validate(trimmed);
        auto ag = validate(affine_plane(q));
        CHECK(rep.nu == ag.nu);
        CHECK(rep.e == ag.e);
        CHECK(rep.d == ag.d);
        CHECK(rep.r == ag.r);
    }
}

TEST_CASE("planes certify as full Ramanujan") {
    for (int q : {2, 3}) {
        CHECK(certify(projective_plane(q)).verdict == Verdict::Full);
        CHECK(certify(affine_plane(q)).verdict == Verdict::Full);
    }
    CHECK(certify(affine_plane(4)).verdict == Verdict::Full);
}

TEST_SUITE_END();
