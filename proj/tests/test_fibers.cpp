#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hopfmu/fibers.hpp"
#include "hopfmu/generators.hpp"
#include "hopfmu/manifold.hpp"

using namespace hopfmu;

namespace {

struct Collapse5Fixture {
    GeneratedMap g = gen_collapse5();
    Simplex abc{{0, 1, 2}};
    std::vector<int> o1, o2;

    Collapse5Fixture() {
        o1 = *coherent_orientation(*g.source);
        o2 = *coherent_orientation(*g.target);
    }
};

} // namespace

TEST_CASE("fiber segments of collapse5 (hand-solved endpoints)") {
    Collapse5Fixture fx;
    FiberSegment s = fiber_segment(*fx.g.map, Simplex{{0, 1, 2, 3}}, fx.abc, fx.o1, fx.o2);
    // pivot {0,3} directed 0 -> 3; entry on {0,1,2}, exit on {1,2,3}
    CHECK(s.initial == 0);
    CHECK(s.terminal == 3);
    CHECK(s.a.carrier == Simplex{{0, 1, 2}});
    CHECK(s.b.carrier == Simplex{{1, 2, 3}});
    for (const auto& w : s.a.weights) CHECK(w == Rat(1, 3));
    for (const auto& w : s.b.weights) CHECK(w == Rat(1, 3));

    FiberSegment t = fiber_segment(*fx.g.map, Simplex{{1, 2, 3, 4}}, fx.abc, fx.o1, fx.o2);
    CHECK(t.a.carrier == Simplex{{1, 2, 3}});
    CHECK(t.b.carrier == Simplex{{1, 2, 4}});

    CHECK_THROWS_AS(fiber_segment(*fx.g.map, Simplex{{0, 1, 3, 4}}, fx.abc, fx.o1, fx.o2),
                    Error);
}

TEST_CASE("collapse5 fiber over ABC is one 3-segment circle") {
    Collapse5Fixture fx;
    FiberDiagram d = extract_fiber(*fx.g.map, fx.abc);
    REQUIRE(d.components.size() == 1);
    const FiberComponent& comp = d.components[0];
    CHECK(comp.tetras.size() == 3);
    CHECK(comp.vertex_set == std::vector<VertexId>{0, 1, 2, 3, 4});
    CHECK(d.total_segments() == fx.g.map->mu(fx.abc));

    // cycle order 0123 -> 1234 -> 0124
    CHECK(comp.tetras[0] == Simplex{{0, 1, 2, 3}});
    CHECK(comp.tetras[1] == Simplex{{1, 2, 3, 4}});
    CHECK(comp.tetras[2] == Simplex{{0, 1, 2, 4}});

    // exact endpoint closure
    for (size_t i = 0; i < comp.cycle.size(); ++i) {
        const auto& cur = comp.cycle[i];
        const auto& nxt = comp.cycle[(i + 1) % comp.cycle.size()];
        CHECK(cur.b == nxt.a);
    }

    // identity (*): tetra = (tetra ∩ next) ⊔ initial = (tetra ∩ prev) ⊔ terminal
    for (size_t i = 0; i < comp.cycle.size(); ++i) {
        const auto& seg = comp.cycle[i];
        CHECK(seg.tetra.without(seg.initial) == seg.b.carrier);
        CHECK(seg.tetra.without(seg.terminal) == seg.a.carrier);
    }

    // initial vertices are 0, 3, 4 in cycle order
    CHECK(comp.cycle[0].initial == 0);
    CHECK(comp.cycle[1].initial == 3);
    CHECK(comp.cycle[2].initial == 4);
}

TEST_CASE("empty diagram for the constant map") {
    Collapse5Fixture fx;
    std::map<VertexId, VertexId> cst{{0, 0}, {1, 0}, {2, 0}, {3, 0}, {4, 0}};
    auto c = std::make_shared<SimplicialMap>(fx.g.source, fx.g.target, cst);
    FiberDiagram d = extract_fiber(*c, fx.abc);
    CHECK(d.components.empty());
}

TEST_CASE("lemma 1 condition on the collapse5 component") {
    Collapse5Fixture fx;
    FiberDiagram d = extract_fiber(*fx.g.map, fx.abc);
    const auto& comp = d.components[0];
    auto v = lemma1_condition(comp);
    REQUIRE(v.has_value());
    CHECK(*v == 1); // smallest of {1, 2}
    // side conclusion: unique vertex with its image
    int same_image = 0;
    for (VertexId w : comp.vertex_set)
        if ((*fx.g.map)(w) == (*fx.g.map)(*v)) ++same_image;
    CHECK(same_image == 1);
}

TEST_CASE("lemma 2 condition picks B for collapse5") {
    Collapse5Fixture fx;
    FiberDiagram d = extract_fiber(*fx.g.map, fx.abc);
    auto alpha = lemma2_condition(*fx.g.map, d.components[0], fx.abc);
    REQUIRE(alpha.has_value());
    CHECK(*alpha == 1); // target vertex B: A has 3 preimages, B has 1
}

TEST_CASE("lemma 1 disk: cone with formal boundary the cycle") {
    Collapse5Fixture fx;
    FiberDiagram d = extract_fiber(*fx.g.map, fx.abc);
    const auto& comp = d.components[0];
    FormalChain2 disk = build_disk_lemma1(comp, 1);
    CHECK(disk.cells().size() == 3);
    CHECK(disk.boundary() == component_cycle(comp));
    CHECK_THROWS_AS(build_disk_lemma1(comp, 0), Error); // 0 is an initial vertex
}

TEST_CASE("disk cells map into the {p, alpha} median segment") {
    Collapse5Fixture fx;
    FiberDiagram d = extract_fiber(*fx.g.map, fx.abc);
    const auto& comp = d.components[0];
    FormalChain2 disk = build_disk_lemma1(comp, 1);
    for (const auto& [cell, coef] : disk.cells()) {
        for (const auto& gp : cell) {
            if (std::holds_alternative<VertexId>(gp)) {
                CHECK((*fx.g.map)(std::get<VertexId>(gp)) == 1); // maps to B = f(1)
            } else {
                // barycentric points push forward to the barycenter of ABC
                const auto& bp = std::get<BarycentricPoint>(gp);
                std::map<VertexId, Rat> img;
                for (size_t i = 0; i < bp.carrier.v.size(); ++i)
                    img[(*fx.g.map)(bp.carrier.v[i])] += bp.weights[i];
                CHECK(img.size() == 3);
                for (const auto& [tv, wt] : img) CHECK(wt == Rat(1, 3));
            }
        }
    }
}

TEST_CASE("lemma 2 disk reduces to a cone when alpha has one preimage") {
    Collapse5Fixture fx;
    FiberDiagram d = extract_fiber(*fx.g.map, fx.abc);
    const auto& comp = d.components[0];
    FormalChain2 disk = build_disk_lemma2(*fx.g.map, comp, fx.abc, 1);
    CHECK(disk.cells().size() == 3);
    CHECK(disk.boundary() == component_cycle(comp));

    // alpha = A has three preimages in V_i: condition not met
    CHECK_THROWS_AS(build_disk_lemma2(*fx.g.map, comp, fx.abc, 0), Error);
}

TEST_CASE("reversing the source orientation reverses every segment") {
    Collapse5Fixture fx;
    FiberDiagram d = extract_fiber(*fx.g.map, fx.abc, fx.o1, fx.o2);
    std::vector<int> o1neg = fx.o1;
    for (int& s : o1neg) s = -s;
    FiberDiagram dneg = extract_fiber(*fx.g.map, fx.abc, o1neg, fx.o2);
    REQUIRE(d.components.size() == dneg.components.size());
    std::map<Simplex, const FiberSegment*> rev;
    for (const auto& comp : dneg.components)
        for (const auto& seg : comp.cycle) rev[seg.tetra] = &seg;
    for (const auto& comp : d.components)
        for (const auto& seg : comp.cycle) {
            const FiberSegment* r = rev.at(seg.tetra);
            CHECK(r->initial == seg.terminal);
            CHECK(r->terminal == seg.initial);
            CHECK(r->a == seg.b);
            CHECK(r->b == seg.a);
        }
}

TEST_CASE("verify_lower_bound for collapse5 with H = 0") {
    Collapse5Fixture fx;
    BoundReport rep = verify_lower_bound(*fx.g.map, fx.abc, 0);
    CHECK(rep.mu_value == 3);
    CHECK(rep.all_certified);
    REQUIRE(rep.components.size() == 1);
    CHECK(rep.components[0].kind == CertificateKind::Lemma1);
    CHECK(rep.components[0].disk_boundary_ok);

    // claiming H != 0 for this map must abort loudly: mu = 3 < 9
    CHECK_THROWS_AS(verify_lower_bound(*fx.g.map, fx.abc, 1), Error);
}

TEST_CASE("formal chain normalization and boundary") {
    GeomPoint p = VertexId{0};
    GeomPoint q = VertexId{1};
    GeomPoint r = VertexId{2};
    FormalChain2 c;
    c.add(p, q, r, 1);
    c.add(q, p, r, 1); // odd permutation cancels
    CHECK(c.cells().empty());
    c.add(r, p, q, 2); // even permutation
    CHECK(c.cells().size() == 1);
    FormalChain1 b = c.boundary();
    FormalChain1 expect;
    expect.add(q, r, 2);
    expect.add(p, r, -2);
    expect.add(p, q, 2);
    CHECK(b == expect);
}
