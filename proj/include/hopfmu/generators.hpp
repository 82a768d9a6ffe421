// Programmatic constructions of the fixture maps.
#pragma once

#include <memory>
#include <string>
#include <vector>

#include "hopfmu/maps.hpp"

namespace hopfmu {

enum class Family { Collapse5, HopfPrism, SeifertXi, Zeta };

struct GeneratedMap {
    ComplexPtr source;
    ComplexPtr target;
    std::shared_ptr<SimplicialMap> map;
    Family family = Family::Collapse5;
    int parameter = 0; // n for SeifertXi / Zeta
    std::vector<std::string> construction_log;
};

// The 4-vertex 2-sphere A,B,C,D (ids 0..3) used as target everywhere.
ComplexPtr target_sphere4();

// Boundary of the 4-simplex collapsed onto one triangle: 0,3,4 -> A, 1 -> B, 2 -> C.
GeneratedMap gen_collapse5();

// 12-vertex, 36-tetrahedron triangulated Hopf map; mu = 9 on every triangle, H = +1.
GeneratedMap gen_hopf();

// Triangulated Seifert projection with one exceptional fiber over D (n >= 2):
// the preimage of ABC is a cyclic stack of 2n-1 prisms, |H| = n.
GeneratedMap gen_seifert_xi(int n);

// gen_seifert_xi(n) with the ABC-side re-triangulated through 2n-4 nested
// prism stacks so that mu(ABC) = 9 while |H| = n.
GeneratedMap gen_zeta(int n);

} // namespace hopfmu
