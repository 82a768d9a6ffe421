#include "hopfmu/fibers.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "hopfmu/manifold.hpp"

namespace hopfmu {

BarycentricPoint barycenter(const Simplex& s) {
    BarycentricPoint p;
    p.carrier = s;
    p.weights.assign(s.v.size(), Rat(1, static_cast<int>(s.v.size())));
    return p;
}

std::string to_string(const GeomPoint& g) {
    if (std::holds_alternative<VertexId>(g)) return "v" + std::to_string(std::get<VertexId>(g));
    const auto& b = std::get<BarycentricPoint>(g);
    std::ostringstream os;
    os << "bary" << to_string(b.carrier);
    return os.str();
}

Int FiberDiagram::total_segments() const {
    Int n = 0;
    for (const auto& c : components) n += Int(c.cycle.size());
    return n;
}

namespace {

template <size_t N>
std::pair<std::array<GeomPoint, N>, int> normalize_cell(std::array<GeomPoint, N> pts) {
    int sign = 1;
    for (size_t i = 0; i < N; ++i)
        for (size_t j = i + 1; j < N; ++j) {
            if (pts[j] == pts[i]) return {pts, 0};
            if (pts[j] < pts[i]) {
                std::swap(pts[i], pts[j]);
                sign = -sign;
            }
        }
    return {pts, sign};
}

} // namespace

void FormalChain1::add(const GeomPoint& p, const GeomPoint& q, const Int& t) {
    if (t == 0) return;
    auto [cell, sign] = normalize_cell<2>({p, q});
    if (sign == 0) throw std::logic_error("degenerate 1-cell");
    auto it = c_.find(cell);
    if (it == c_.end()) {
        c_.emplace(cell, sign * t);
    } else {
        it->second += sign * t;
        if (it->second == 0) c_.erase(it);
    }
}

FormalChain1 FormalChain1::operator-() const {
    FormalChain1 r;
    for (const auto& [cell, t] : c_) r.c_.emplace(cell, -t);
    return r;
}

void FormalChain2::add(const GeomPoint& p, const GeomPoint& q, const GeomPoint& r,
                       const Int& t) {
    if (t == 0) return;
    auto [cell, sign] = normalize_cell<3>({p, q, r});
    if (sign == 0) throw std::logic_error("degenerate 2-cell");
    auto it = c_.find(cell);
    if (it == c_.end()) {
        c_.emplace(cell, sign * t);
    } else {
        it->second += sign * t;
        if (it->second == 0) c_.erase(it);
    }
}

FormalChain1 FormalChain2::boundary() const {
    FormalChain1 b;
    for (const auto& [cell, t] : c_) {
        b.add(cell[1], cell[2], t);
        b.add(cell[0], cell[2], -t);
        b.add(cell[0], cell[1], t);
    }
    return b;
}

const char* certificate_kind_name(CertificateKind k) {
    switch (k) {
        case CertificateKind::Lemma1: return "Lemma1";
        case CertificateKind::Lemma2: return "Lemma2";
        case CertificateKind::Neither: return "Neither";
    }
    return "Neither";
}

namespace {

int orientation_sign_of(const SimplicialComplex& k, const std::vector<int>& orient,
                        const Simplex& facet) {
    const auto& fs = k.facets();
    for (size_t i = 0; i < fs.size(); ++i)
        if (fs[i] == facet) return orient[i];
    fail(Err::SimplexNotInComplex, to_string(facet));
}

} // namespace

FiberSegment fiber_segment(const SimplicialMap& f, const Simplex& tetra, const Simplex& s,
                           const std::vector<int>& src_orient,
                           const std::vector<int>& tgt_orient) {
    Simplex img = f.image_simplex(tetra);
    if (img.dim() < 2) fail(Err::DegenerateTetra, to_string(tetra));
    if (!(img == s)) fail(Err::TriangleMismatch, to_string(tetra) + " maps onto " + to_string(img));

    PivotEdge pivot = f.pivot_edge(tetra);
    VertexId x = pivot.a, y = pivot.b;
    std::vector<VertexId> others;
    for (VertexId v : tetra.v)
        if (v != x && v != y) others.push_back(v);
    VertexId u = others[0], w = others[1];

    // arrange (u, w) so that (alpha, f(u), f(w)) is a positive ordering of s
    int eps2 = orientation_sign_of(f.target(), tgt_orient, s);
    if (sort_sign({pivot.collapsed_target_vertex, f(u), f(w)}) != eps2) std::swap(u, w);

    // direct the pivot x -> y iff (x, y, u, w) is a positive ordering of tetra
    int eps1 = orientation_sign_of(f.source(), src_orient, tetra);
    FiberSegment seg;
    seg.tetra = tetra;
    seg.pivot = pivot;
    if (sort_sign({x, y, u, w}) == eps1) {
        seg.initial = x;
        seg.terminal = y;
    } else {
        seg.initial = y;
        seg.terminal = x;
    }
    seg.a = barycenter(tetra.without(seg.terminal)); // entry, on tetra ∩ previous
    seg.b = barycenter(tetra.without(seg.initial));  // exit, on tetra ∩ next
    return seg;
}

FiberDiagram extract_fiber(const SimplicialMap& f, const Simplex& s) {
    auto o1 = coherent_orientation(f.source());
    auto o2 = coherent_orientation(f.target());
    if (!o1) fail(Err::PreconditionFailed, "source is not an oriented closed pseudomanifold");
    if (!o2) fail(Err::PreconditionFailed, "target is not an oriented closed pseudomanifold");
    return extract_fiber(f, s, *o1, *o2);
}

FiberDiagram extract_fiber(const SimplicialMap& f, const Simplex& s,
                           const std::vector<int>& src_orient,
                           const std::vector<int>& tgt_orient) {
    const auto& tf = f.target().facets();
    if (std::find(tf.begin(), tf.end(), s) == tf.end())
        fail(Err::NotMaximal, to_string(s) + " is not a facet of the target");

    FiberDiagram diag;
    diag.base_triangle = s;
    diag.regular_point = barycenter(s);

    // segments of all tetras mapping onto s
    std::map<Simplex, FiberSegment> segs;
    for (const auto& tetra : f.source().facets())
        if (tetra.dim() == 3 && f.image_simplex(tetra) == s)
            segs.emplace(tetra, fiber_segment(f, tetra, s, src_orient, tgt_orient));

    // exit carrier -> tetra, entry carrier -> tetra
    std::map<Simplex, Simplex> by_exit, by_entry;
    for (const auto& [tetra, seg] : segs) {
        if (!by_exit.emplace(seg.b.carrier, tetra).second)
            fail(Err::OpenChain, "two segments exit through " + to_string(seg.b.carrier));
        if (!by_entry.emplace(seg.a.carrier, tetra).second)
            fail(Err::OpenChain, "two segments enter through " + to_string(seg.a.carrier));
    }

    std::set<Simplex> used;
    for (const auto& [start, seg0] : segs) {
        if (used.count(start)) continue;
        FiberComponent comp;
        Simplex cur = start;
        while (true) {
            const FiberSegment& seg = segs.at(cur);
            used.insert(cur);
            comp.cycle.push_back(seg);
            comp.tetras.push_back(cur);
            auto it = by_entry.find(seg.b.carrier);
            if (it == by_entry.end())
                fail(Err::OpenChain, "no segment enters through " + to_string(seg.b.carrier));
            const Simplex& nxt = it->second;
            if (!(segs.at(nxt).a == seg.b))
                fail(Err::OpenChain, "endpoint mismatch at " + to_string(seg.b.carrier));
            if (nxt == cur)
                fail(Err::OpenChain, "segment re-enters its own tetrahedron");
            if (nxt == start) break;
            if (used.count(nxt))
                fail(Err::OpenChain, "cycle collapsed into an earlier component");
            cur = nxt;
        }
        // identity (*): the shared faces omit exactly initial/terminal
        for (size_t i = 0; i < comp.cycle.size(); ++i) {
            const FiberSegment& seg = comp.cycle[i];
            const FiberSegment& nxt = comp.cycle[(i + 1) % comp.cycle.size()];
            if (!(seg.tetra.without(seg.initial) == seg.b.carrier) ||
                !(nxt.tetra.without(nxt.terminal) == seg.b.carrier))
                fail(Err::OpenChain, "decomposition identity fails at " + to_string(seg.tetra));
        }
        std::set<VertexId> vs;
        for (const auto& t : comp.tetras)
            for (VertexId v : t.v) vs.insert(v);
        comp.vertex_set.assign(vs.begin(), vs.end());
        for (const auto& seg : comp.cycle) {
            comp.initial_of[seg.tetra] = seg.initial;
            comp.terminal_of[seg.tetra] = seg.terminal;
        }
        diag.components.push_back(std::move(comp));
    }

    // canonical order: rotate each cycle to start at its smallest tetra,
    // then sort components by that tetra
    for (auto& comp : diag.components) {
        size_t best = 0;
        for (size_t i = 1; i < comp.tetras.size(); ++i)
            if (comp.tetras[i] < comp.tetras[best]) best = i;
        std::rotate(comp.cycle.begin(), comp.cycle.begin() + best, comp.cycle.end());
        std::rotate(comp.tetras.begin(), comp.tetras.begin() + best, comp.tetras.end());
    }
    std::sort(diag.components.begin(), diag.components.end(),
              [](const FiberComponent& a, const FiberComponent& b) {
                  return a.tetras[0] < b.tetras[0];
              });
    return diag;
}

std::optional<VertexId> lemma1_condition(const FiberComponent& comp) {
    std::set<VertexId> image;
    for (const auto& [t, v] : comp.initial_of) image.insert(v);
    for (VertexId v : comp.vertex_set) {
        if (image.count(v)) continue;
        // side conclusion: v is a common vertex of all tetras of the component
        for (const auto& t : comp.tetras)
            if (!t.contains(v))
                throw std::logic_error("lemma 1 side conclusion failed for vertex " +
                                       std::to_string(v));
        return v; // smallest id: vertex_set is sorted
    }
    return std::nullopt;
}

std::optional<VertexId> lemma2_condition(const SimplicialMap& f, const FiberComponent& comp,
                                         const Simplex& s) {
    for (VertexId alpha : s.v) {
        int count = 0;
        for (VertexId v : comp.vertex_set)
            if (f(v) == alpha) ++count;
        if (count <= 2) return alpha;
    }
    return std::nullopt;
}

FormalChain1 component_cycle(const FiberComponent& comp) {
    FormalChain1 c;
    for (const auto& seg : comp.cycle) c.add(GeomPoint(seg.a), GeomPoint(seg.b), 1);
    return c;
}

FormalChain2 build_disk_lemma1(const FiberComponent& comp, VertexId v) {
    std::set<VertexId> image;
    for (const auto& [t, w] : comp.initial_of) image.insert(w);
    if (image.count(v) ||
        !std::binary_search(comp.vertex_set.begin(), comp.vertex_set.end(), v))
        fail(Err::ConditionNotMet,
             "vertex " + std::to_string(v) + " is hit by initial or missing");
    FormalChain2 disk;
    GeomPoint gv = v;
    for (const auto& seg : comp.cycle)
        disk.add(gv, GeomPoint(seg.a), GeomPoint(seg.b), 1);
    return disk;
}

FormalChain2 build_disk_lemma2(const SimplicialMap& f, const FiberComponent& comp,
                               const Simplex& s, VertexId alpha) {
    if (!s.contains(alpha))
        fail(Err::ConditionNotMet, "alpha is not a vertex of the base triangle");
    std::vector<VertexId> pre;
    for (VertexId v : comp.vertex_set)
        if (f(v) == alpha) pre.push_back(v);
    if (pre.empty() || pre.size() > 2)
        fail(Err::ConditionNotMet,
             std::to_string(pre.size()) + " preimage vertices over the target vertex");

    FormalChain2 disk;
    if (pre.size() == 1) {
        // single preimage vertex: never on a pivot edge, pure cone
        GeomPoint gw = pre[0];
        for (const auto& seg : comp.cycle)
            disk.add(gw, GeomPoint(seg.a), GeomPoint(seg.b), 1);
        return disk;
    }

    // two preimages: u = terminal, v = initial of the first pivot over alpha
    VertexId u = -1, v = -1;
    for (const auto& seg : comp.cycle)
        if (seg.pivot.collapsed_target_vertex == alpha) {
            v = seg.initial;
            u = seg.terminal;
            break;
        }
    if (u < 0)
        fail(Err::PartitionInconsistent, "two preimages but no pivot over the target vertex");

    enum Cls { U_, V_, RU, RV };
    std::vector<Cls> cls(comp.cycle.size());
    Int ru = 0, rv = 0;
    for (size_t i = 0; i < comp.cycle.size(); ++i) {
        const FiberSegment& seg = comp.cycle[i];
        bool hu = seg.tetra.contains(u), hv = seg.tetra.contains(v);
        GeomPoint ga = seg.a, gb = seg.b;
        if (hu && hv) {
            if (!((seg.initial == u && seg.terminal == v) ||
                  (seg.initial == v && seg.terminal == u)))
                fail(Err::PartitionInconsistent,
                     "pivot of " + to_string(seg.tetra) + " is not the alpha edge");
            if (seg.initial == u) {
                cls[i] = RU;
                ++ru;
                disk.add(GeomPoint(u), ga, gb, 1); // diagonal from u to the exit point
                disk.add(GeomPoint(u), gb, GeomPoint(v), 1);
            } else {
                cls[i] = RV;
                ++rv;
                disk.add(GeomPoint(v), ga, gb, 1);
                disk.add(GeomPoint(v), gb, GeomPoint(u), 1);
            }
        } else if (hu) {
            cls[i] = U_;
            disk.add(GeomPoint(u), ga, gb, 1);
        } else if (hv) {
            cls[i] = V_;
            disk.add(GeomPoint(v), ga, gb, 1);
        } else {
            fail(Err::PartitionInconsistent,
                 to_string(seg.tetra) + " avoids both preimage vertices");
        }
    }
    if (ru != rv) fail(Err::PartitionInconsistent, "|R_u| != |R_v|");
    // transition rules along the cycle
    for (size_t i = 0; i < cls.size(); ++i) {
        Cls a = cls[i], b = cls[(i + 1) % cls.size()];
        bool ok = (a == U_ && (b == U_ || b == RU)) || (a == V_ && (b == V_ || b == RV)) ||
                  (a == RU && b == V_) || (a == RV && b == U_);
        if (!ok) fail(Err::PartitionInconsistent, "transition rule violated along the cycle");
    }
    return disk;
}

BoundReport verify_lower_bound(const SimplicialMap& f, const Simplex& s, const Int& h_value) {
    FiberDiagram diag = extract_fiber(f, s);
    BoundReport rep;
    rep.base_triangle = s;
    rep.h_value = h_value;
    rep.mu_value = f.mu(s);
    bool all_certified = true;

    for (const auto& comp : diag.components) {
        ComponentReport cr;
        cr.size_s = Int(comp.tetras.size());
        cr.size_v = Int(comp.vertex_set.size());
        std::set<VertexId> image;
        for (const auto& [t, v] : comp.initial_of) image.insert(v);
        cr.initial_surjective = image.size() == comp.vertex_set.size();
        Int minpre = -1;
        for (VertexId alpha : s.v) {
            Int cnt = 0;
            for (VertexId v : comp.vertex_set)
                if (f(v) == alpha) ++cnt;
            if (minpre < 0 || cnt < minpre) minpre = cnt;
        }
        cr.min_vertex_preimages = minpre;

        if (auto v = lemma1_condition(comp)) {
            cr.kind = CertificateKind::Lemma1;
            cr.witness = *v;
            FormalChain2 disk = build_disk_lemma1(comp, *v);
            cr.disk_boundary_ok = disk.boundary() == component_cycle(comp);
        } else if (auto alpha = lemma2_condition(f, comp, s)) {
            cr.kind = CertificateKind::Lemma2;
            cr.witness = *alpha;
            FormalChain2 disk = build_disk_lemma2(f, comp, s, *alpha);
            cr.disk_boundary_ok = disk.boundary() == component_cycle(comp);
        } else {
            cr.kind = CertificateKind::Neither;
            all_certified = false;
        }
        if (cr.kind != CertificateKind::Neither && !cr.disk_boundary_ok)
            fail(Err::TheoremViolation,
                 "certificate disk boundary does not match the component cycle");
        rep.components.push_back(cr);
    }
    rep.all_certified = all_certified && !diag.components.empty();

    if (h_value != 0) {
        if (diag.components.empty())
            fail(Err::TheoremViolation, "H != 0 with an empty fiber over " + to_string(s));
        if (all_certified)
            fail(Err::TheoremViolation,
                 "H != 0 but every component over " + to_string(s) + " is certified null");
        bool found_big = false;
        for (const auto& cr : rep.components) {
            if (cr.kind != CertificateKind::Neither) continue;
            // inequality chain |S_i| >= |Image(init_i)| = |V_i| >= 3*3 = 9
            if (!cr.initial_surjective)
                fail(Err::TheoremViolation, "uncertified component with non-surjective initial");
            if (cr.min_vertex_preimages < 3)
                fail(Err::TheoremViolation,
                     "uncertified component with fewer than 3 preimages of a vertex");
            if (cr.size_v < 9 || cr.size_s < cr.size_v)
                fail(Err::TheoremViolation, "inequality chain broken");
            found_big = true;
        }
        if (!found_big || rep.mu_value < 9)
            fail(Err::TheoremViolation,
                 "mu(" + to_string(s) + ") = " + rep.mu_value.str() + " with H != 0");
    }
    rep.bound_holds = true;
    return rep;
}

} // namespace hopfmu
