#include "hopfmu/chains.hpp"

#include <algorithm>

namespace hopfmu {

void Chain::add(const std::vector<VertexId>& verts, const Int& t) {
    if (t == 0) return;
    int sign = sort_sign(verts);
    if (sign == 0) return; // degenerate tuple contributes nothing
    Simplex s{verts};
    add_sorted(s, sign * t);
}

void Chain::add_sorted(const Simplex& s, const Int& t) {
    if (t == 0) return;
    auto it = c_.find(s);
    if (it == c_.end()) {
        c_.emplace(s, t);
    } else {
        it->second += t;
        if (it->second == 0) c_.erase(it);
    }
}

Int Chain::coeff(const Simplex& s) const {
    auto it = c_.find(s);
    return it == c_.end() ? Int(0) : it->second;
}

Chain Chain::operator-() const {
    Chain r(degree_);
    for (const auto& [s, t] : c_) r.c_.emplace(s, -t);
    return r;
}

void Cochain::set(const Simplex& s, const Int& t) {
    if (t == 0)
        v_.erase(s);
    else
        v_[s] = t;
}

void Cochain::add(const Simplex& s, const Int& t) {
    if (t == 0) return;
    auto it = v_.find(s);
    if (it == v_.end()) {
        v_.emplace(s, t);
    } else {
        it->second += t;
        if (it->second == 0) v_.erase(it);
    }
}

Int Cochain::operator()(const Simplex& s) const {
    auto it = v_.find(s);
    return it == v_.end() ? Int(0) : it->second;
}

Int Cochain::eval(const std::vector<VertexId>& ordered) const {
    int sign = sort_sign(ordered);
    if (sign == 0) return 0;
    Simplex s{ordered};
    return sign * (*this)(s);
}

Cochain Cochain::operator+(const Cochain& o) const {
    Cochain r(degree_);
    r.v_ = v_;
    for (const auto& [s, t] : o.v_) r.add(s, t);
    return r;
}

Cochain Cochain::operator-(const Cochain& o) const {
    Cochain r(degree_);
    r.v_ = v_;
    for (const auto& [s, t] : o.v_) r.add(s, -t);
    return r;
}

Chain boundary(const SimplicialComplex& k, const Chain& c) {
    Chain r(c.degree() - 1);
    for (const auto& [s, t] : c.coeffs()) {
        if (!k.has_face(s)) fail(Err::SimplexNotInComplex, to_string(s));
        for (size_t i = 0; i < s.v.size(); ++i) {
            Simplex f = s;
            f.v.erase(f.v.begin() + i);
            r.add_sorted(f, (i % 2 == 0 ? t : -t));
        }
    }
    return r;
}

Cochain coboundary(const SimplicialComplex& k, const Cochain& c) {
    const int d = c.degree() + 1;
    Cochain r(d);
    if (c.is_zero() || d > k.dim()) return r;
    for (const auto& s : k.faces(d)) {
        Int val = 0;
        for (size_t i = 0; i < s.v.size(); ++i) {
            Simplex f = s;
            f.v.erase(f.v.begin() + i);
            Int cv = c(f);
            if (cv != 0) val += (i % 2 == 0 ? cv : -cv);
        }
        r.set(s, val);
    }
    return r;
}

Cochain cup(const SimplicialComplex& k, const Cochain& a, const Cochain& b) {
    const int p = a.degree(), q = b.degree();
    Cochain r(p + q);
    if (p + q > k.dim()) fail(Err::PreconditionFailed, "cup degree exceeds dimension");
    for (const auto& s : k.faces(p + q)) {
        // front face v0..vp, back face vp..v_{p+q}
        Simplex front, back;
        front.v.assign(s.v.begin(), s.v.begin() + p + 1);
        back.v.assign(s.v.begin() + p, s.v.end());
        Int val = a(front) * b(back);
        r.set(s, val);
    }
    return r;
}

Int pair(const Cochain& c, const Chain& z) {
    Int acc = 0;
    for (const auto& [s, t] : z.coeffs()) acc += c(s) * t;
    return acc;
}

Chain fundamental_class(const SimplicialComplex& k, const std::vector<int>& orientation) {
    if (orientation.size() != k.facets().size())
        fail(Err::NotOriented, "orientation does not cover the facets");
    Chain r(k.dim());
    for (size_t i = 0; i < k.facets().size(); ++i)
        r.add_sorted(k.facets()[i], orientation[i]);
    return r;
}

Cochain fundamental_cocycle(const SimplicialComplex& surface,
                            const std::vector<int>& orientation, const Simplex& s) {
    if (s.dim() != 2 || !surface.has_face(s)) fail(Err::TriangleNotInComplex, to_string(s));
    Cochain w(2);
    for (size_t i = 0; i < surface.facets().size(); ++i)
        if (surface.facets()[i] == s) {
            w.set(s, orientation[i]);
            return w;
        }
    fail(Err::TriangleNotInComplex, to_string(s) + " is not maximal");
}

IntMat boundary_matrix(const SimplicialComplex& k, int deg) {
    if (deg <= 0 || deg > k.dim()) return IntMat(std::max(0, k.face_count(deg - 1)), 0);
    IntMat m(k.face_count(deg - 1), k.face_count(deg));
    const auto& cols = k.faces(deg);
    for (size_t j = 0; j < cols.size(); ++j) {
        const Simplex& s = cols[j];
        for (size_t i = 0; i < s.v.size(); ++i) {
            Simplex f = s;
            f.v.erase(f.v.begin() + i);
            m.at(k.face_index(f), static_cast<int>(j)) = (i % 2 == 0 ? 1 : -1);
        }
    }
    return m;
}

Cochain solve_coboundary(const SimplicialComplex& k, const Cochain& target) {
    if (target.degree() != 2)
        fail(Err::PreconditionFailed, "solve_coboundary expects a degree-2 target");
    // rows: triangles, cols: edges; the coboundary matrix is the transpose of
    // the boundary matrix read against the same bases.
    const int ntri = k.face_count(2), nedge = k.face_count(1);
    IntMat m(ntri, nedge);
    const auto& tris = k.faces(2);
    for (int r = 0; r < ntri; ++r) {
        const Simplex& s = tris[r];
        for (size_t i = 0; i < s.v.size(); ++i) {
            Simplex e = s;
            e.v.erase(e.v.begin() + i);
            m.at(r, k.face_index(e)) = (i % 2 == 0 ? 1 : -1);
        }
    }
    std::vector<Int> b(ntri, 0);
    for (int r = 0; r < ntri; ++r) b[r] = target(tris[r]);
    auto x = solve_integer_system(m, b);
    if (!x) fail(Err::NotACoboundary, "target represents a nonzero cohomology class");
    Cochain psi(1);
    const auto& edges = k.faces(1);
    for (int j = 0; j < nedge; ++j) psi.set(edges[j], (*x)[j]);
    return psi;
}

HomologySummary homology(const SimplicialComplex& k) {
    HomologySummary h;
    const int d = k.dim();
    h.betti.assign(d + 1, 0);
    h.torsion.assign(d + 1, {});
    std::vector<int> rank(d + 2, 0);
    std::vector<std::vector<Int>> factors(d + 2);
    for (int deg = 1; deg <= d; ++deg) {
        auto snf = smith_normal_form(boundary_matrix(k, deg));
        rank[deg] = snf.rank;
        factors[deg] = snf.invariant_factors;
    }
    for (int deg = 0; deg <= d; ++deg) {
        h.betti[deg] = k.face_count(deg) - rank[deg] - rank[deg + 1];
        for (const Int& f : factors[deg + 1])
            if (f > 1) h.torsion[deg].push_back(f);
    }
    return h;
}

} // namespace hopfmu
