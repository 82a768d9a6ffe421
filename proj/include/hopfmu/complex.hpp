// Abstract finite simplicial complexes given by their maximal simplices.
#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hopfmu/types.hpp"

namespace hopfmu {

// A simplex is a strictly increasing tuple of vertex ids.
struct Simplex {
    std::vector<VertexId> v;

    Simplex() = default;
    explicit Simplex(std::vector<VertexId> verts);

    int dim() const { return static_cast<int>(v.size()) - 1; }
    bool contains(VertexId x) const;
    bool contains(const Simplex& other) const; // face test
    Simplex without(VertexId x) const;

    auto operator<=>(const Simplex& o) const = default;
};

std::string to_string(const Simplex& s);

// Sign of the permutation sorting `verts`, or 0 if a vertex repeats.
int sort_sign(std::vector<VertexId> verts);

// Immutable after construction; queries are pure.
class SimplicialComplex {
public:
    // Throws DuplicateVertexInFacet / NonMaximalFacet.
    static SimplicialComplex build(std::string name,
                                   const std::vector<std::vector<VertexId>>& facet_list);

    // Same, but silently drops entries contained in another (used for links).
    static SimplicialComplex build_dropping_nonmaximal(
        std::string name, const std::vector<std::vector<VertexId>>& facet_list);

    const std::string& name() const { return name_; }
    int dim() const { return dim_; }

    // Facets in input order (deduplicated).
    const std::vector<Simplex>& facets() const { return facets_; }

    // All k-faces, sorted lexicographically.
    const std::vector<Simplex>& faces(int k) const;
    int face_count(int k) const;

    // Index of s in faces(s.dim()), or -1.
    int face_index(const Simplex& s) const;
    bool has_face(const Simplex& s) const;

    const std::vector<VertexId>& vertices() const { return vertex_ids_; }
    bool has_vertex(VertexId x) const;

    // Optional display labels (for file I/O); identity is always the integer id.
    void set_label(VertexId v, std::string label);
    std::optional<std::string> label(VertexId v) const;

    Int euler_characteristic() const;

    // star = facets containing v (as a complex); link = their faces avoiding v.
    // Throws UnknownVertex.
    std::pair<SimplicialComplex, SimplicialComplex> star_and_link(VertexId v) const;

private:
    SimplicialComplex() = default;
    static SimplicialComplex build_impl(std::string name,
                                        const std::vector<std::vector<VertexId>>& facet_list,
                                        bool drop_nonmaximal);
    void index_faces();

    std::string name_;
    int dim_ = -1;
    std::vector<Simplex> facets_;
    std::vector<std::vector<Simplex>> faces_by_dim_;
    std::vector<std::map<Simplex, int>> face_index_;
    std::vector<VertexId> vertex_ids_;
    std::map<VertexId, std::string> labels_;
};

using ComplexPtr = std::shared_ptr<const SimplicialComplex>;

} // namespace hopfmu
