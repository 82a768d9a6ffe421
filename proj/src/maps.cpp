#include "hopfmu/maps.hpp"

#include <algorithm>
#include <set>

namespace hopfmu {

SimplicialMap::SimplicialMap(ComplexPtr source, ComplexPtr target,
                             std::map<VertexId, VertexId> vertex_assignment)
    : src_(std::move(source)), tgt_(std::move(target)), f_(std::move(vertex_assignment)) {
    for (VertexId v : src_->vertices()) {
        auto it = f_.find(v);
        if (it == f_.end())
            fail(Err::UnmappedVertex, "source vertex " + std::to_string(v));
        if (!tgt_->has_vertex(it->second))
            fail(Err::UnknownVertex,
                 "image vertex " + std::to_string(it->second) + " not in target");
    }
}

VertexId SimplicialMap::operator()(VertexId v) const {
    auto it = f_.find(v);
    if (it == f_.end()) fail(Err::UnknownVertex, std::to_string(v));
    return it->second;
}

std::vector<SimplicialViolation> SimplicialMap::validate_simplicial() const {
    std::vector<SimplicialViolation> out;
    for (const auto& facet : src_->facets()) {
        Simplex img = image_simplex(facet);
        if (!tgt_->has_face(img)) out.push_back({facet, img});
    }
    return out;
}

Simplex SimplicialMap::image_simplex(const Simplex& s) const {
    if (!src_->has_face(s)) fail(Err::SimplexNotInComplex, to_string(s));
    std::set<VertexId> img;
    for (VertexId v : s.v) img.insert((*this)(v));
    Simplex r;
    r.v.assign(img.begin(), img.end());
    return r;
}

Int SimplicialMap::mu(const Simplex& s) const {
    const auto& tf = tgt_->facets();
    if (std::find(tf.begin(), tf.end(), s) == tf.end())
        fail(Err::NotMaximal, to_string(s) + " is not a facet of the target");
    Int count = 0;
    for (const auto& facet : src_->facets())
        if (image_simplex(facet) == s) ++count;
    return count;
}

std::map<Simplex, Int> SimplicialMap::mu_all() const {
    std::map<Simplex, Int> r;
    for (const auto& s : tgt_->facets()) r[s] = 0;
    for (const auto& facet : src_->facets()) {
        Simplex img = image_simplex(facet);
        auto it = r.find(img);
        if (it != r.end()) ++it->second;
    }
    return r;
}

Cochain SimplicialMap::pullback(const Cochain& c) const {
    Cochain r(c.degree());
    if (c.degree() > src_->dim()) return r;
    for (const auto& s : src_->faces(c.degree())) {
        std::vector<VertexId> img;
        img.reserve(s.v.size());
        for (VertexId v : s.v) img.push_back((*this)(v));
        Int val = c.eval(img); // zero when images repeat
        r.set(s, val);
    }
    return r;
}

PivotEdge SimplicialMap::pivot_edge(const Simplex& tetra) const {
    if (tetra.dim() != 3 || !src_->has_face(tetra))
        fail(Err::SimplexNotInComplex, to_string(tetra));
    Simplex img = image_simplex(tetra);
    if (img.dim() != 2)
        fail(Err::DegenerateTetra,
             to_string(tetra) + " has image " + to_string(img));
    // exactly one vertex pair shares an image
    PivotEdge p;
    p.tetra = tetra;
    for (size_t i = 0; i < 4; ++i)
        for (size_t j = i + 1; j < 4; ++j)
            if ((*this)(tetra.v[i]) == (*this)(tetra.v[j])) {
                p.a = tetra.v[i];
                p.b = tetra.v[j];
                p.collapsed_target_vertex = (*this)(tetra.v[i]);
                return p;
            }
    fail(Err::DegenerateTetra, "no pivot edge in " + to_string(tetra));
}

} // namespace hopfmu
