// Simplicial maps: validation, simplex images, mu counts, pullback, pivot edges.
#pragma once

#include <map>
#include <optional>
#include <vector>

#include "hopfmu/chains.hpp"
#include "hopfmu/complex.hpp"

namespace hopfmu {

struct SimplicialViolation {
    Simplex facet;
    Simplex image_vertices; // image vertex set, not a simplex of the target
};

struct PivotEdge {
    Simplex tetra;
    VertexId a = -1, b = -1;              // the edge, a < b
    VertexId collapsed_target_vertex = -1;
};

class SimplicialMap {
public:
    SimplicialMap(ComplexPtr source, ComplexPtr target,
                  std::map<VertexId, VertexId> vertex_assignment);

    const SimplicialComplex& source() const { return *src_; }
    const SimplicialComplex& target() const { return *tgt_; }
    ComplexPtr source_ptr() const { return src_; }
    ComplexPtr target_ptr() const { return tgt_; }

    VertexId operator()(VertexId v) const; // throws UnknownVertex
    const std::map<VertexId, VertexId>& assignment() const { return f_; }

    // Empty list means the map is simplicial.
    std::vector<SimplicialViolation> validate_simplicial() const;
    bool is_simplicial() const { return validate_simplicial().empty(); }

    // Sorted set of image vertices. Throws SimplexNotInComplex.
    Simplex image_simplex(const Simplex& s) const;

    // mu(f, s) = number of source facets with image exactly s. Throws NotMaximal.
    Int mu(const Simplex& s) const;
    std::map<Simplex, Int> mu_all() const;

    // (f* c)(v0..vk) = c(f v0 .. f vk); zero when images repeat.
    Cochain pullback(const Cochain& c) const;

    // The unique vertex pair of a non-degenerate tetra with equal images.
    // Throws DegenerateTetra when the image has fewer than 3 vertices.
    PivotEdge pivot_edge(const Simplex& tetra) const;

private:
    ComplexPtr src_, tgt_;
    std::map<VertexId, VertexId> f_;
};

} // namespace hopfmu
