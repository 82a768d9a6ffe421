#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hopfmu/chains.hpp"
#include "hopfmu/complex.hpp"
#include "hopfmu/manifold.hpp"

using namespace hopfmu;

namespace {

SimplicialComplex boundary_d4() {
    return SimplicialComplex::build(
        "dD4", {{0, 1, 2, 3}, {0, 1, 2, 4}, {0, 1, 3, 4}, {0, 2, 3, 4}, {1, 2, 3, 4}});
}

SimplicialComplex boundary_d3() {
    return SimplicialComplex::build("dD3", {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
}

// the 7-vertex torus: triangles {i, i+1, i+3} and {i, i+2, i+3} mod 7
SimplicialComplex torus7() {
    std::vector<std::vector<VertexId>> f;
    for (int i = 0; i < 7; ++i) {
        f.push_back({i, (i + 1) % 7, (i + 3) % 7});
        f.push_back({i, (i + 2) % 7, (i + 3) % 7});
    }
    return SimplicialComplex::build("T7", f);
}

} // namespace

TEST_CASE("build_complex closure counts for the 4-simplex boundary") {
    auto k = boundary_d4();
    CHECK(k.dim() == 3);
    CHECK(k.facets().size() == 5);
    CHECK(k.face_count(2) == 10);
    CHECK(k.face_count(1) == 10);
    CHECK(k.face_count(0) == 5);
}

TEST_CASE("build_complex rejects bad input") {
    CHECK_THROWS_AS(SimplicialComplex::build("x", {{0, 1, 2}, {0, 1, 2, 3}}), Error);
    CHECK_THROWS_AS(SimplicialComplex::build("x", {{0, 1, 1}}), Error);
}

TEST_CASE("star and link") {
    auto k = boundary_d4();
    auto [star, link] = k.star_and_link(0);
    CHECK(link.dim() == 2);
    CHECK(link.facets().size() == 4); // boundary of the tetra on {1,2,3,4}
    CHECK(link.euler_characteristic() == 2);

    auto k3 = boundary_d3();
    auto [s3, l3] = k3.star_and_link(0);
    CHECK(l3.dim() == 1);
    CHECK(l3.euler_characteristic() == 0);

    auto solid = SimplicialComplex::build("D3", {{0, 1, 2, 3}});
    auto [ss, ls] = solid.star_and_link(0);
    CHECK(ls.facets().size() == 1);
    CHECK(ls.dim() == 2);

    CHECK_THROWS_AS(k.star_and_link(99), Error);
}

TEST_CASE("euler characteristics") {
    CHECK(boundary_d4().euler_characteristic() == 0);
    CHECK(boundary_d3().euler_characteristic() == 2);
    CHECK(SimplicialComplex::build("D3", {{0, 1, 2, 3}}).euler_characteristic() == 1);
}

TEST_CASE("closure property holds exhaustively") {
    auto k = boundary_d4();
    for (const auto& f : k.facets()) {
        const auto& fv = f.v;
        for (unsigned mask = 1; mask < (1u << fv.size()); ++mask) {
            Simplex s;
            for (size_t i = 0; i < fv.size(); ++i)
                if (mask & (1u << i)) s.v.push_back(fv[i]);
            CHECK(k.has_face(s));
        }
    }
}

TEST_CASE("validate boundary_d4 as closed oriented 3-manifold with S3 homology") {
    auto rep = validate_closed_oriented_3_manifold(boundary_d4());
    CHECK(rep.verdict == Verdict::ClosedOriented3Manifold);
    CHECK(rep.s3_homology_certified);
    CHECK(rep.homology.betti == std::vector<int>{1, 0, 0, 1});
    REQUIRE(rep.orientation.has_value());
    CHECK((*rep.orientation)[0] == 1);

    // coherent orientation: induced signs opposite on every shared triangle
    auto k = boundary_d4();
    const auto& fs = k.facets();
    const auto& ori = *rep.orientation;
    std::map<Simplex, int> seen;
    for (size_t i = 0; i < fs.size(); ++i) {
        for (VertexId v : fs[i].v) {
            Simplex r = fs[i].without(v);
            int pos = 0;
            for (size_t j = 0; j < fs[i].v.size(); ++j)
                if (fs[i].v[j] == v) pos = static_cast<int>(j);
            int ind = ori[i] * (pos % 2 == 0 ? 1 : -1);
            auto it = seen.find(r);
            if (it == seen.end())
                seen[r] = ind;
            else
                CHECK(it->second == -ind);
        }
    }
}

TEST_CASE("missing facet breaks pseudomanifold") {
    auto k = SimplicialComplex::build(
        "broken", {{0, 1, 2, 3}, {0, 1, 2, 4}, {0, 1, 3, 4}, {0, 2, 3, 4}});
    auto rep = validate_closed_oriented_3_manifold(k);
    CHECK(rep.verdict == Verdict::Invalid);
    CHECK_FALSE(rep.is_closed_pseudomanifold);
}

TEST_CASE("validate 2-spheres") {
    auto rep = validate_sphere_2(boundary_d3());
    CHECK(rep.verdict == Verdict::ClosedSurfaceSphere);
    CHECK(rep.euler_characteristic == 2);

    // two disjoint copies
    auto two = SimplicialComplex::build("two", {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3},
                                                {4, 5, 6}, {4, 5, 7}, {4, 6, 7}, {5, 6, 7}});
    CHECK(validate_sphere_2(two).verdict == Verdict::Invalid);

    auto t = torus7();
    auto trep = validate_sphere_2(t);
    CHECK(trep.verdict == Verdict::Invalid);
    CHECK(trep.euler_characteristic == 0);
}
