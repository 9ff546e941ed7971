#include <doctest.h>

#include <cmath>

#include "hcov/geometry.hpp"
#include "hcov/search.hpp"
#include "oracles.hpp"

using namespace hcov;

namespace {

SearchConfig exhaustive(Side side) {
    SearchConfig cfg;
    cfg.side = side;
    cfg.mode = SearchMode::Exhaustive;
    return cfg;
}

}  // namespace

TEST_SUITE_BEGIN("search");

TEST_CASE("free incidence counts") {
    CHECK(free_incidences(complete_uniform(3)).size() == 5);   // 12 - 8 + 1
    CHECK(free_incidences(affine_plane(2)).size() == 3);       // 12 - 10 + 1
    CHECK(free_incidences(projective_plane(2)).size() == 8);   // 21 - 14 + 1
}

TEST_CASE("right-sided witness for K^3_4") {
    auto h = complete_uniform(3);
    auto res = search_cover(h, exhaustive(Side::Right));
    REQUIRE(res.witness.has_value());
    const auto& [s, cert] = *res.witness;
    CHECK(cert.right_sided);
    CHECK(res.explored <= 32);
    // re-verify the witness independently
    CHECK(certify_covering(h, s).right_sided);

    auto again = search_cover(h, exhaustive(Side::Right));
    REQUIRE(again.witness.has_value());
    CHECK(again.witness->first.signs == s.signs);
    CHECK(again.explored == res.explored);
}

TEST_CASE("parallel sweep matches the sequential witness") {
    auto h = projective_plane(2);
    auto seq = search_cover(h, exhaustive(Side::Right));
    auto cfg = exhaustive(Side::Right);
    cfg.jobs = 2;
    auto par = search_cover(h, cfg);
    REQUIRE(seq.witness.has_value());
    REQUIRE(par.witness.has_value());
    CHECK(seq.witness->first.signs == par.witness->first.signs);
}

TEST_CASE("left-sided witness for AG(2,2) under the matching-root condition") {
    auto h = affine_plane(2);
    auto lc = left_condition(h);
    CHECK(lc.holds);
    CHECK(lc.mu_tau == doctest::Approx(0.815834408).epsilon(1e-8));
    CHECK(lc.threshold == doctest::Approx(std::sqrt(2.0) - 1.0));
    auto res = search_cover(h, exhaustive(Side::Left));
    REQUIRE(res.witness.has_value());
    CHECK(res.witness->second.left_sided);
}

TEST_CASE("left condition instances") {
    CHECK(left_condition(complete_uniform(3)).threshold == doctest::Approx(0.0));
    CHECK(left_condition(complete_uniform(3)).holds);

    auto lc1 = left_condition(Hypergraph(3, {{0, 1, 2}}));
    CHECK(lc1.mu_tau == doctest::Approx(std::sqrt(3.0)));
    CHECK(lc1.threshold == doctest::Approx(std::sqrt(2.0)));
    CHECK(lc1.holds);

    auto lc2 = left_condition(affine_plane(3));
    CHECK(lc2.threshold == doctest::Approx(std::sqrt(3.0) - std::sqrt(2.0)));
    CHECK(lc2.mu_tau == doctest::Approx(0.599437535).epsilon(1e-8));
    CHECK(lc2.holds);
}

TEST_CASE("random mode is reproducible") {
    auto h = complete_uniform(3);
    SearchConfig cfg;
    cfg.side = Side::Right;
    cfg.mode = SearchMode::Random;
    cfg.trials = 64;
    cfg.seed = 5;
    auto a = search_cover(h, cfg);
    auto b = search_cover(h, cfg);
    CHECK(a.explored == 64);
    CHECK_FALSE(a.exhausted);
    REQUIRE(a.witness.has_value());
    REQUIRE(b.witness.has_value());
    CHECK(a.witness->first.signs == b.witness->first.signs);

    cfg.jobs = 3;
    auto c = search_cover(h, cfg);
    REQUIRE(c.witness.has_value());
    CHECK(c.witness->first.signs == a.witness->first.signs);
}

TEST_CASE("exhaustive scan reports exhaustion when nothing passes") {
    // single 3-edge: no signing is right-sided (band [1,1], eigenvalue 2)
    Hypergraph h(3, {{0, 1, 2}});
    auto res = search_cover(h, exhaustive(Side::Right));
    CHECK_FALSE(res.witness.has_value());
    CHECK(res.exhausted);
    CHECK(res.explored == 1);  // hypertree: zero free signs
}

TEST_CASE("switching soundness: verdicts constant on a switching class") {
    auto h = affine_plane(2);
    SplitMix64 g(9);
    for (int t = 0; t < 10; ++t) {
        auto s = random_signing(h, g.next());
        auto base = certify_covering(h, s);
        auto sv = switched_at_vertex(h, s, static_cast<int>(g.below(h.vertex_count())));
        auto cv = certify_covering(h, sv);
        CHECK(base.right_sided == cv.right_sided);
        CHECK(base.left_sided == cv.left_sided);
        CHECK(multiset_equal(base.new_spectrum.values, cv.new_spectrum.values, 1e-9));
    }
}

TEST_CASE("tower of right-sided coverings doubles the vertex count") {
    auto levels = build_tower(complete_uniform(3), 2, Side::Right);
    REQUIRE(levels.size() == 2);
    CHECK(levels[0].cover.vertex_count() == 8);
    CHECK(levels[1].cover.vertex_count() == 16);
    for (const auto& lvl : levels) {
        CHECK(lvl.cert.right_sided);
        auto rep = validate(lvl.cover);
        CHECK(rep.is_connected);
        CHECK(rep.d == 3);
        CHECK(rep.r == 3);
    }
    // level signings certify on the previous level's hypergraph
    CHECK(certify_covering(complete_uniform(3), levels[0].signing).right_sided);
    CHECK(certify_covering(levels[0].cover, levels[1].signing).right_sided);
}

TEST_CASE("tower argument validation") {
    CHECK_THROWS_AS(build_tower(complete_uniform(3), 0, Side::Right), std::invalid_argument);
    CHECK_THROWS_AS(build_tower(complete_uniform(3), 1, Side::Full), std::invalid_argument);
}

TEST_CASE("abelian lifts of AG(2,5)") {
    auto levels = abelian_tower(5, {1, 2});
    REQUIRE(levels.size() == 2);
    for (const auto& lvl : levels) {
        CHECK(lvl.block_union_ok);
        CHECK(lvl.lambda_incidence >= lvl.bound_incidence - 1e-8);
        CHECK(lvl.lambda_adjacency >= lvl.bound_adjacency - 1e-8);
    }
    CHECK(levels[0].lift.cover.vertex_count() == 25);
    CHECK(levels[1].lift.cover.vertex_count() == 50);
    auto rep = validate(levels[1].lift.cover);
    CHECK(rep.d == 6);
    CHECK(rep.r == 5);

    CHECK_THROWS_AS(abelian_tower(4, {1}), std::invalid_argument);
    CHECK_THROWS_AS(abelian_tower(6, {1}), std::invalid_argument);
}

TEST_SUITE_END();
