#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hopfmu/generators.hpp"
#include "hopfmu/manifold.hpp"
#include "hopfmu/maps.hpp"

using namespace hopfmu;

namespace {

Cochain random_cochain(const SimplicialComplex& k, int deg, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> val(-4, 4);
    Cochain c(deg);
    for (const auto& s : k.faces(deg)) c.set(s, val(rng));
    return c;
}

} // namespace

TEST_CASE("collapse5 is simplicial; a label-identity assignment is not") {
    auto g = gen_collapse5();
    CHECK(g.map->is_simplicial());

    // 0->A 1->B 2->C 3->D 4->A : facet {0,1,2,3} images A,B,C,D
    std::map<VertexId, VertexId> bad{{0, 0}, {1, 1}, {2, 2}, {3, 3}, {4, 0}};
    SimplicialMap f(g.source, g.target, bad);
    auto violations = f.validate_simplicial();
    CHECK_FALSE(violations.empty());
    CHECK(violations[0].image_vertices.dim() == 3);

    // constant map is simplicial
    std::map<VertexId, VertexId> cst{{0, 0}, {1, 0}, {2, 0}, {3, 0}, {4, 0}};
    SimplicialMap c(g.source, g.target, cst);
    CHECK(c.is_simplicial());
}

TEST_CASE("image_simplex") {
    auto g = gen_collapse5();
    CHECK(g.map->image_simplex(Simplex{{0, 1, 2, 3}}) == Simplex{{0, 1, 2}});
    CHECK(g.map->image_simplex(Simplex{{0, 3, 4}}) == Simplex{{0}});
    CHECK_THROWS_AS(g.map->image_simplex(Simplex{{0, 1, 2, 5}}), Error);
}

TEST_CASE("mu of collapse5") {
    auto g = gen_collapse5();
    Simplex abc{{0, 1, 2}};
    CHECK(g.map->mu(abc) == 3);
    CHECK(g.map->mu(Simplex{{0, 1, 3}}) == 0);
    CHECK_THROWS_AS(g.map->mu(Simplex{{0, 1}}), Error);

    auto table = g.map->mu_all();
    Int total = 0;
    for (const auto& [s, c] : table) total += c;
    CHECK(total == 3); // the two degenerate facets are not counted
    CHECK(table.at(abc) == 3);
}

TEST_CASE("mu of the constant map is all zeros") {
    auto g = gen_collapse5();
    std::map<VertexId, VertexId> cst{{0, 0}, {1, 0}, {2, 0}, {3, 0}, {4, 0}};
    SimplicialMap c(g.source, g.target, cst);
    for (const auto& [s, count] : c.mu_all()) CHECK(count == 0);
}

TEST_CASE("pullback basics and naturality") {
    std::mt19937_64 rng(23);
    auto g = gen_collapse5();
    const auto& k1 = *g.source;
    const auto& k2 = *g.target;

    Cochain one(0);
    for (const auto& s : k2.faces(0)) one.set(s, 1);
    Cochain p1 = g.map->pullback(one);
    for (const auto& s : k1.faces(0)) CHECK(p1(s) == 1);

    // delta f* = f* delta on random cochains
    for (int deg = 0; deg < 2; ++deg) {
        for (int trial = 0; trial < 20; ++trial) {
            Cochain c = random_cochain(k2, deg, rng);
            CHECK(coboundary(k1, g.map->pullback(c)) == g.map->pullback(coboundary(k2, c)));
        }
    }

    // f* omega supported on the three facets over ABC
    auto rep = validate_sphere_2(k2);
    REQUIRE(rep.orientation.has_value());
    Cochain w = fundamental_cocycle(k2, *rep.orientation, Simplex{{0, 1, 2}});
    Cochain fw = g.map->pullback(w);
    CHECK(fw.values().size() == 3);
    for (const auto& [s, v] : fw.values()) CHECK((v == 1 || v == -1));
    CHECK(fw(Simplex{{0, 1, 2}}) != 0);
    CHECK(fw(Simplex{{1, 2, 3}}) != 0);
    CHECK(fw(Simplex{{1, 2, 4}}) != 0);
}

TEST_CASE("pivot edges of collapse5") {
    auto g = gen_collapse5();
    PivotEdge p = g.map->pivot_edge(Simplex{{0, 1, 2, 3}});
    CHECK(p.a == 0);
    CHECK(p.b == 3);
    CHECK(p.collapsed_target_vertex == 0);

    PivotEdge q = g.map->pivot_edge(Simplex{{1, 2, 3, 4}});
    CHECK(q.a == 3);
    CHECK(q.b == 4);

    CHECK_THROWS_AS(g.map->pivot_edge(Simplex{{0, 1, 3, 4}}), Error);
}

TEST_CASE("functoriality: image of a face is a face of the image") {
    auto g = gen_collapse5();
    for (const auto& facet : g.source->facets()) {
        Simplex img = g.map->image_simplex(facet);
        const auto& fv = facet.v;
        for (unsigned mask = 1; mask < (1u << fv.size()); ++mask) {
            Simplex s;
            for (size_t i = 0; i < fv.size(); ++i)
                if (mask & (1u << i)) s.v.push_back(fv[i]);
            CHECK(img.contains(g.map->image_simplex(s)));
        }
    }
}

TEST_CASE("sum of mu equals non-degenerate facet count") {
    auto g = gen_collapse5();
    Int total = 0;
    for (const auto& [s, c] : g.map->mu_all()) total += c;
    Int nondeg = 0;
    for (const auto& facet : g.source->facets())
        if (g.map->image_simplex(facet).dim() == 2) ++nondeg;
    CHECK(total == nondeg);
}
