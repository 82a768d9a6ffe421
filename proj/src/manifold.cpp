#include "hopfmu/manifold.hpp"

#include <deque>
#include <map>

#include "hopfmu/chains.hpp"

namespace hopfmu {

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::ClosedOriented3Manifold: return "ClosedOriented3Manifold";
        case Verdict::ClosedSurfaceSphere: return "ClosedSurfaceSphere";
        case Verdict::Invalid: return "Invalid";
    }
    return "Invalid";
}

namespace {

bool is_pure(const SimplicialComplex& k) {
    for (const auto& f : k.facets())
        if (f.dim() != k.dim()) return false;
    return !k.facets().empty();
}

// ridge -> indices of facets containing it
std::map<Simplex, std::vector<int>> ridge_incidence(const SimplicialComplex& k) {
    std::map<Simplex, std::vector<int>> inc;
    const auto& fs = k.facets();
    for (size_t i = 0; i < fs.size(); ++i)
        for (VertexId v : fs[i].v)
            inc[fs[i].without(v)].push_back(static_cast<int>(i));
    return inc;
}

bool ridges_all_double(const std::map<Simplex, std::vector<int>>& inc) {
    for (const auto& [r, ts] : inc)
        if (ts.size() != 2) return false;
    return true;
}

bool dual_graph_connected(const SimplicialComplex& k,
                          const std::map<Simplex, std::vector<int>>& inc) {
    const size_t n = k.facets().size();
    if (n == 0) return false;
    std::vector<std::vector<int>> adj(n);
    for (const auto& [r, ts] : inc)
        if (ts.size() == 2) {
            adj[ts[0]].push_back(ts[1]);
            adj[ts[1]].push_back(ts[0]);
        }
    std::vector<char> seen(n, 0);
    std::deque<int> q{0};
    seen[0] = 1;
    size_t cnt = 1;
    while (!q.empty()) {
        int x = q.front();
        q.pop_front();
        for (int y : adj[x])
            if (!seen[y]) {
                seen[y] = 1;
                ++cnt;
                q.push_back(y);
            }
    }
    return cnt == n;
}

// sign of the orientation induced by (facet, facet_sign) on the sorted ridge
int induced_ridge_sign(const Simplex& facet, int facet_sign, const Simplex& ridge) {
    for (size_t i = 0; i < facet.v.size(); ++i)
        if (!ridge.contains(facet.v[i]))
            return facet_sign * ((i % 2 == 0) ? 1 : -1);
    return 0; // unreachable for a proper ridge
}

bool link_is_circle(const SimplicialComplex& link) {
    if (link.dim() != 1) return false;
    for (const auto& f : link.facets())
        if (f.dim() != 1) return false;
    // every vertex in exactly 2 edges, connected, chi = 0
    std::map<VertexId, int> deg;
    for (const auto& e : link.facets()) {
        deg[e.v[0]]++;
        deg[e.v[1]]++;
    }
    for (auto& [v, d] : deg)
        if (d != 2) return false;
    auto inc = ridge_incidence(link);
    return ridges_all_double(inc) && dual_graph_connected(link, inc) &&
           link.euler_characteristic() == 0;
}

bool link_is_2sphere(const SimplicialComplex& link) {
    if (link.dim() != 2 || !is_pure(link)) return false;
    auto inc = ridge_incidence(link);
    return ridges_all_double(inc) && dual_graph_connected(link, inc) &&
           link.euler_characteristic() == 2;
}

} // namespace

std::optional<std::vector<int>> coherent_orientation(const SimplicialComplex& k) {
    if (!is_pure(k)) return std::nullopt;
    auto inc = ridge_incidence(k);
    if (!ridges_all_double(inc) || !dual_graph_connected(k, inc)) return std::nullopt;

    const auto& fs = k.facets();
    std::vector<int> sign(fs.size(), 0);
    sign[0] = 1;
    std::deque<int> q{0};
    while (!q.empty()) {
        int i = q.front();
        q.pop_front();
        for (VertexId v : fs[i].v) {
            Simplex r = fs[i].without(v);
            const auto& ts = inc[r];
            int j = (ts[0] == i) ? ts[1] : ts[0];
            int si = induced_ridge_sign(fs[i], sign[i], r);
            if (sign[j] == 0) {
                int sj = induced_ridge_sign(fs[j], 1, r);
                sign[j] = (sj == -si) ? 1 : -1;
                q.push_back(j);
            } else if (induced_ridge_sign(fs[j], sign[j], r) != -si) {
                return std::nullopt; // not orientable
            }
        }
    }
    return sign;
}

ManifoldReport validate_closed_oriented_3_manifold(const SimplicialComplex& k) {
    ManifoldReport rep;
    rep.euler_characteristic = k.euler_characteristic();
    if (k.dim() != 3) {
        rep.reason = "dimension is not 3";
        return rep;
    }
    rep.is_pure = is_pure(k);
    if (!rep.is_pure) {
        rep.reason = "not pure";
        return rep;
    }
    auto inc = ridge_incidence(k);
    rep.is_closed_pseudomanifold = ridges_all_double(inc);
    if (!rep.is_closed_pseudomanifold) {
        rep.reason = "a triangle is not in exactly 2 tetrahedra";
        return rep;
    }
    rep.is_connected = dual_graph_connected(k, inc);
    if (!rep.is_connected) {
        rep.reason = "dual graph disconnected";
        return rep;
    }
    rep.all_links_spheres = true;
    for (VertexId v : k.vertices()) {
        auto [star, link] = k.star_and_link(v);
        if (!link_is_2sphere(link)) {
            rep.all_links_spheres = false;
            rep.reason = "vertex link is not a 2-sphere at vertex " + std::to_string(v);
            return rep;
        }
    }
    rep.orientation = coherent_orientation(k);
    rep.orientable = rep.orientation.has_value();
    if (!rep.orientable) {
        rep.reason = "not orientable";
        return rep;
    }
    rep.homology = homology(k);
    rep.s3_homology_certified =
        rep.homology.betti == std::vector<int>{1, 0, 0, 1} &&
        rep.homology.torsion[1].empty() && rep.homology.torsion[2].empty();
    rep.verdict = Verdict::ClosedOriented3Manifold;
    return rep;
}

ManifoldReport validate_sphere_2(const SimplicialComplex& k) {
    ManifoldReport rep;
    rep.euler_characteristic = k.euler_characteristic();
    if (k.dim() != 2) {
        rep.reason = "dimension is not 2";
        return rep;
    }
    rep.is_pure = is_pure(k);
    if (!rep.is_pure) {
        rep.reason = "not pure";
        return rep;
    }
    auto inc = ridge_incidence(k);
    rep.is_closed_pseudomanifold = ridges_all_double(inc);
    if (!rep.is_closed_pseudomanifold) {
        rep.reason = "an edge is not in exactly 2 triangles";
        return rep;
    }
    rep.is_connected = dual_graph_connected(k, inc);
    if (!rep.is_connected) {
        rep.reason = "disconnected";
        return rep;
    }
    rep.all_links_spheres = true;
    for (VertexId v : k.vertices()) {
        auto [star, link] = k.star_and_link(v);
        if (!link_is_circle(link)) {
            rep.all_links_spheres = false;
            rep.reason = "vertex link is not a circle at vertex " + std::to_string(v);
            return rep;
        }
    }
    if (rep.euler_characteristic != 2) {
        rep.reason = "Euler characteristic is not 2";
        return rep;
    }
    rep.orientation = coherent_orientation(k);
    rep.orientable = rep.orientation.has_value();
    if (!rep.orientable) {
        rep.reason = "not orientable";
        return rep;
    }
    rep.homology = homology(k);
    rep.verdict = Verdict::ClosedSurfaceSphere;
    return rep;
}

} // namespace hopfmu
