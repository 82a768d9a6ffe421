// Combinatorial manifold validation and coherent orientations.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hopfmu/complex.hpp"

namespace hopfmu {

struct HomologySummary {
    // per degree 0..dim
    std::vector<int> betti;
    std::vector<std::vector<Int>> torsion; // nontrivial invariant factors per degree
    bool operator==(const HomologySummary&) const = default;
};

enum class Verdict {
    ClosedOriented3Manifold,
    ClosedSurfaceSphere,
    Invalid,
};

const char* verdict_name(Verdict v);

struct ManifoldReport {
    bool is_pure = false;
    bool is_closed_pseudomanifold = false;
    bool is_connected = false;
    bool all_links_spheres = false;
    bool orientable = false;
    Int euler_characteristic = 0;
    HomologySummary homology;
    Verdict verdict = Verdict::Invalid;
    std::string reason; // set when Invalid
    // +1/-1 per facet (input order) when orientable.
    std::optional<std::vector<int>> orientation;

    bool ok() const { return verdict != Verdict::Invalid; }
    // True when homology matches S^3: Z, 0, 0, Z.
    bool s3_homology_certified = false;
};

// Coherent orientation by dual-graph BFS in input order; first facet gets +1.
// Returns nullopt when the complex is not an orientable closed pseudomanifold.
std::optional<std::vector<int>> coherent_orientation(const SimplicialComplex& k);

// Full validation for dim-3 candidates (vertex links 2-spheres, orientation,
// integral homology). S^3 candidacy is certified by homology only.
ManifoldReport validate_closed_oriented_3_manifold(const SimplicialComplex& k);

// Validation for dim-2 candidates: closed connected orientable surface with chi = 2.
ManifoldReport validate_sphere_2(const SimplicialComplex& k);

} // namespace hopfmu
