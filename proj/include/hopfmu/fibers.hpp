// Fiber preimages over barycenters as oriented PL circles, and the
// disk certificates that witness null components.
#pragma once

#include <array>
#include <map>
#include <optional>
#include <variant>
#include <vector>

#include "hopfmu/maps.hpp"

namespace hopfmu {

// Point of the geometric realization: exact rational weights on the vertices
// of its minimal carrier simplex (all weights > 0, summing to 1).
struct BarycentricPoint {
    Simplex carrier;
    std::vector<Rat> weights; // aligned with carrier.v

    auto operator<=>(const BarycentricPoint&) const = default;
};

BarycentricPoint barycenter(const Simplex& s);

// Either a complex vertex or an interior rational point.
using GeomPoint = std::variant<VertexId, BarycentricPoint>;

std::string to_string(const GeomPoint& g);

struct FiberSegment {
    Simplex tetra;
    BarycentricPoint a; // entry point, on tetra ∩ previous
    BarycentricPoint b; // exit point, on tetra ∩ next
    PivotEdge pivot;
    VertexId initial = -1, terminal = -1; // pivot endpoints, oriented
};

struct FiberComponent {
    std::vector<FiberSegment> cycle;   // cyclic order
    std::vector<Simplex> tetras;       // S_i, cycle order
    std::vector<VertexId> vertex_set;  // V_i, sorted
    std::map<Simplex, VertexId> initial_of;
    std::map<Simplex, VertexId> terminal_of;
};

struct FiberDiagram {
    Simplex base_triangle;
    BarycentricPoint regular_point; // barycenter of the base triangle
    std::vector<FiberComponent> components;

    Int total_segments() const;
};

// Formal integer chains over geometric points; cells are normalized to sorted
// point tuples with the permutation sign folded in, repeated points forbidden.
class FormalChain1 {
public:
    void add(const GeomPoint& p, const GeomPoint& q, const Int& t);
    const std::map<std::array<GeomPoint, 2>, Int>& cells() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    bool operator==(const FormalChain1&) const = default;
    FormalChain1 operator-() const;

private:
    std::map<std::array<GeomPoint, 2>, Int> c_;
};

class FormalChain2 {
public:
    void add(const GeomPoint& p, const GeomPoint& q, const GeomPoint& r, const Int& t);
    const std::map<std::array<GeomPoint, 3>, Int>& cells() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    FormalChain1 boundary() const;

private:
    std::map<std::array<GeomPoint, 3>, Int> c_;
};

enum class CertificateKind { Lemma1, Lemma2, Neither };

const char* certificate_kind_name(CertificateKind k);

struct LemmaCertificate {
    int component = -1;
    CertificateKind kind = CertificateKind::Neither;
    VertexId witness = -1;        // Lemma1: source vertex v; Lemma2: target vertex alpha
    std::optional<FormalChain2> disk;
};

// The preimage segment of the barycenter of s inside one tetra mapping onto s.
// Throws DegenerateTetra / TriangleMismatch.
FiberSegment fiber_segment(const SimplicialMap& f, const Simplex& tetra, const Simplex& s,
                           const std::vector<int>& src_orient,
                           const std::vector<int>& tgt_orient);

// All components of f^{-1}(barycenter of s). Requires validated oriented
// source (closed 3-manifold) and target (2-sphere). Throws OpenChain when the
// segments fail to close up.
FiberDiagram extract_fiber(const SimplicialMap& f, const Simplex& s);
FiberDiagram extract_fiber(const SimplicialMap& f, const Simplex& s,
                           const std::vector<int>& src_orient,
                           const std::vector<int>& tgt_orient);

// Smallest v in V_i not hit by initial_i, if any; checks the side conclusion
// that v then lies in every tetra of the component.
std::optional<VertexId> lemma1_condition(const FiberComponent& comp);

// First target vertex alpha of s with at most two preimage vertices in V_i.
std::optional<VertexId> lemma2_condition(const SimplicialMap& f, const FiberComponent& comp,
                                         const Simplex& s);

// Cone disk over v; formal boundary equals the component cycle exactly.
FormalChain2 build_disk_lemma1(const FiberComponent& comp, VertexId v);

// Cone/trapezoid disk over the (at most two) preimages of alpha.
FormalChain2 build_disk_lemma2(const SimplicialMap& f, const FiberComponent& comp,
                               const Simplex& s, VertexId alpha);

// The component cycle sum of [a,b] segments, for certificate checking.
FormalChain1 component_cycle(const FiberComponent& comp);

struct ComponentReport {
    Int size_s = 0;           // |S_i|
    Int size_v = 0;           // |V_i|
    CertificateKind kind = CertificateKind::Neither;
    VertexId witness = -1;
    bool disk_boundary_ok = false;   // only meaningful when kind != Neither
    bool initial_surjective = false; // Image(init_i) = V_i
    Int min_vertex_preimages = 0;    // min over alpha in s of |f^-1(alpha) ∩ V_i|
};

struct BoundReport {
    Simplex base_triangle;
    Int h_value = 0;
    Int mu_value = 0;
    std::vector<ComponentReport> components;
    bool bound_holds = true;       // mu >= 9 whenever H != 0
    bool all_certified = false;    // every component has a lemma certificate
};

// Verifies the main bound: if H != 0 there must be a component failing both
// lemmas, whose inequality chain gives |S_i| >= 9 and hence mu >= 9.
// Throws TheoremViolation on a counterexample.
BoundReport verify_lower_bound(const SimplicialMap& f, const Simplex& s, const Int& h_value);

} // namespace hopfmu
