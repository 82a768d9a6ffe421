#include "hopfmu/generators.hpp"

#include <sstream>

#include "hopfmu/chains.hpp"
#include "hopfmu/hopf.hpp"
#include "hopfmu/manifold.hpp"

namespace hopfmu {

ComplexPtr target_sphere4() {
    SimplicialComplex k = SimplicialComplex::build(
        "S2_4", {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
    k.set_label(0, "A");
    k.set_label(1, "B");
    k.set_label(2, "C");
    k.set_label(3, "D");
    return std::make_shared<SimplicialComplex>(std::move(k));
}

GeneratedMap gen_collapse5() {
    SimplicialComplex src = SimplicialComplex::build(
        "boundary_D4", {{0, 1, 2, 3}, {0, 1, 2, 4}, {0, 1, 3, 4}, {0, 2, 3, 4}, {1, 2, 3, 4}});
    for (VertexId v : {0, 1, 2, 3, 4}) src.set_label(v, "p" + std::to_string(v));
    GeneratedMap g;
    g.family = Family::Collapse5;
    g.source = std::make_shared<SimplicialComplex>(std::move(src));
    g.target = target_sphere4();
    std::map<VertexId, VertexId> f{{0, 0}, {1, 1}, {2, 2}, {3, 0}, {4, 0}};
    g.map = std::make_shared<SimplicialMap>(g.source, g.target, f);
    g.construction_log.push_back("boundary of the 4-simplex collapsed onto triangle ABC");
    return g;
}

// The remaining generators are filled in generators_weave.cpp-style below.

GeneratedMap gen_hopf() {
    fail(Err::ConstructionInvariantFailed, "not yet implemented");
}

GeneratedMap gen_seifert_xi(int) {
    fail(Err::ConstructionInvariantFailed, "not yet implemented");
}

GeneratedMap gen_zeta(int) {
    fail(Err::ConstructionInvariantFailed, "not yet implemented");
}

} // namespace hopfmu
