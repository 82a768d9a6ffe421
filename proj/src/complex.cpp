#include "hopfmu/complex.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace hopfmu {

const char* err_name(Err e) {
    switch (e) {
        case Err::DuplicateVertexInFacet: return "DuplicateVertexInFacet";
        case Err::NonMaximalFacet: return "NonMaximalFacet";
        case Err::UnknownVertex: return "UnknownVertex";
        case Err::UnknownComplex: return "UnknownComplex";
        case Err::SimplexNotInComplex: return "SimplexNotInComplex";
        case Err::TriangleNotInComplex: return "TriangleNotInComplex";
        case Err::NotMaximal: return "NotMaximal";
        case Err::NotOriented: return "NotOriented";
        case Err::NotACoboundary: return "NotACoboundary";
        case Err::NotHomologySphere: return "NotHomologySphere";
        case Err::DegenerateTetra: return "DegenerateTetra";
        case Err::TriangleMismatch: return "TriangleMismatch";
        case Err::OpenChain: return "OpenChain";
        case Err::ConditionNotMet: return "ConditionNotMet";
        case Err::PartitionInconsistent: return "PartitionInconsistent";
        case Err::TheoremViolation: return "TheoremViolation";
        case Err::ConstructionInvariantFailed: return "ConstructionInvariantFailed";
        case Err::SyntaxError: return "SyntaxError";
        case Err::UnmappedVertex: return "UnmappedVertex";
        case Err::PreconditionFailed: return "PreconditionFailed";
    }
    return "UnknownError";
}

Simplex::Simplex(std::vector<VertexId> verts) : v(std::move(verts)) {
    std::sort(v.begin(), v.end());
    for (size_t i = 1; i < v.size(); ++i)
        if (v[i] == v[i - 1]) fail(Err::DuplicateVertexInFacet, to_string(*this));
}

bool Simplex::contains(VertexId x) const {
    return std::binary_search(v.begin(), v.end(), x);
}

bool Simplex::contains(const Simplex& other) const {
    return std::includes(v.begin(), v.end(), other.v.begin(), other.v.end());
}

Simplex Simplex::without(VertexId x) const {
    Simplex r;
    r.v.reserve(v.size() - 1);
    for (VertexId w : v)
        if (w != x) r.v.push_back(w);
    return r;
}

std::string to_string(const Simplex& s) {
    std::ostringstream os;
    os << '{';
    for (size_t i = 0; i < s.v.size(); ++i) os << (i ? "," : "") << s.v[i];
    os << '}';
    return os.str();
}

int sort_sign(std::vector<VertexId> verts) {
    int sign = 1;
    for (size_t i = 0; i < verts.size(); ++i)
        for (size_t j = i + 1; j < verts.size(); ++j) {
            if (verts[i] == verts[j]) return 0;
            if (verts[i] > verts[j]) sign = -sign;
        }
    return sign;
}

SimplicialComplex SimplicialComplex::build(std::string name,
                                           const std::vector<std::vector<VertexId>>& facet_list) {
    return build_impl(std::move(name), facet_list, false);
}

SimplicialComplex SimplicialComplex::build_dropping_nonmaximal(
    std::string name, const std::vector<std::vector<VertexId>>& facet_list) {
    return build_impl(std::move(name), facet_list, true);
}

SimplicialComplex SimplicialComplex::build_impl(
    std::string name, const std::vector<std::vector<VertexId>>& facet_list,
    bool drop_nonmaximal) {
    std::vector<Simplex> candidates;
    candidates.reserve(facet_list.size());
    for (const auto& f : facet_list) candidates.emplace_back(f);

    std::vector<Simplex> facets;
    for (size_t i = 0; i < candidates.size(); ++i) {
        bool maximal = true;
        for (size_t j = 0; j < candidates.size(); ++j) {
            if (i == j) continue;
            if (candidates[i] == candidates[j]) {
                if (j < i) { maximal = false; break; } // keep first occurrence
                continue;
            }
            if (candidates[j].contains(candidates[i])) {
                if (!drop_nonmaximal)
                    fail(Err::NonMaximalFacet,
                         to_string(candidates[i]) + " is a face of " + to_string(candidates[j]));
                maximal = false;
                break;
            }
        }
        if (maximal) facets.push_back(candidates[i]);
    }

    SimplicialComplex k;
    k.name_ = std::move(name);
    k.facets_ = std::move(facets);
    k.dim_ = -1;
    for (const auto& f : k.facets_) k.dim_ = std::max(k.dim_, f.dim());
    k.index_faces();
    return k;
}

void SimplicialComplex::index_faces() {
    faces_by_dim_.assign(dim_ + 1, {});
    face_index_.assign(dim_ + 1, {});
    std::vector<std::set<Simplex>> acc(dim_ + 1);
    for (const auto& f : facets_) {
        // enumerate all subsets of f (nonempty)
        const auto& fv = f.v;
        const size_t n = fv.size();
        for (unsigned mask = 1; mask < (1u << n); ++mask) {
            Simplex s;
            for (size_t i = 0; i < n; ++i)
                if (mask & (1u << i)) s.v.push_back(fv[i]);
            acc[s.dim()].insert(std::move(s));
        }
    }
    for (int k = 0; k <= dim_; ++k) {
        faces_by_dim_[k].assign(acc[k].begin(), acc[k].end());
        for (size_t i = 0; i < faces_by_dim_[k].size(); ++i)
            face_index_[k][faces_by_dim_[k][i]] = static_cast<int>(i);
    }
    vertex_ids_.clear();
    for (const auto& s : faces_by_dim_.empty() ? std::vector<Simplex>{} : faces_by_dim_[0])
        vertex_ids_.push_back(s.v[0]);
}

const std::vector<Simplex>& SimplicialComplex::faces(int k) const {
    static const std::vector<Simplex> empty;
    if (k < 0 || k > dim_) return empty;
    return faces_by_dim_[k];
}

int SimplicialComplex::face_count(int k) const { return static_cast<int>(faces(k).size()); }

int SimplicialComplex::face_index(const Simplex& s) const {
    int k = s.dim();
    if (k < 0 || k > dim_) return -1;
    auto it = face_index_[k].find(s);
    return it == face_index_[k].end() ? -1 : it->second;
}

bool SimplicialComplex::has_face(const Simplex& s) const { return face_index(s) >= 0; }

bool SimplicialComplex::has_vertex(VertexId x) const {
    return std::binary_search(vertex_ids_.begin(), vertex_ids_.end(), x);
}

void SimplicialComplex::set_label(VertexId v, std::string label) {
    labels_[v] = std::move(label);
}

std::optional<std::string> SimplicialComplex::label(VertexId v) const {
    auto it = labels_.find(v);
    if (it == labels_.end()) return std::nullopt;
    return it->second;
}

Int SimplicialComplex::euler_characteristic() const {
    Int chi = 0;
    for (int k = 0; k <= dim_; ++k) chi += (k % 2 == 0 ? 1 : -1) * Int(face_count(k));
    return chi;
}

std::pair<SimplicialComplex, SimplicialComplex> SimplicialComplex::star_and_link(
    VertexId v) const {
    if (!has_vertex(v)) fail(Err::UnknownVertex, std::to_string(v));
    std::vector<std::vector<VertexId>> star_facets, link_facets;
    for (const auto& f : facets_) {
        if (!f.contains(v)) continue;
        star_facets.push_back(f.v);
        link_facets.push_back(f.without(v).v);
    }
    auto star = SimplicialComplex::build_dropping_nonmaximal(name_ + ".star", star_facets);
    auto link = SimplicialComplex::build_dropping_nonmaximal(name_ + ".link", link_facets);
    return {std::move(star), std::move(link)};
}

} // namespace hopfmu
