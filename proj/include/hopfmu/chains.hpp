// Exact integer chain/cochain algebra on a fixed complex.
#pragma once

#include <map>
#include <vector>

#include "hopfmu/complex.hpp"
#include "hopfmu/integer_linalg.hpp"
#include "hopfmu/manifold.hpp"

namespace hopfmu {

// Finitely supported integer function on oriented k-simplices, normalized to
// sorted-vertex representatives with the permutation sign folded in.
class Chain {
public:
    explicit Chain(int degree) : degree_(degree) {}

    int degree() const { return degree_; }
    const std::map<Simplex, Int>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }

    // Adds t * [verts] where verts is an ordered tuple; repeated vertices add 0.
    void add(const std::vector<VertexId>& verts, const Int& t);
    void add_sorted(const Simplex& s, const Int& t);
    Int coeff(const Simplex& s) const;

    Chain operator-() const;
    bool operator==(const Chain&) const = default;

private:
    int degree_;
    std::map<Simplex, Int> c_;
};

// Integer cochain: values on sorted k-simplices of a complex; evaluation on an
// ordered tuple applies the permutation sign (0 on repeats).
class Cochain {
public:
    explicit Cochain(int degree) : degree_(degree) {}

    int degree() const { return degree_; }
    const std::map<Simplex, Int>& values() const { return v_; }
    bool is_zero() const { return v_.empty(); }

    void set(const Simplex& s, const Int& t);
    void add(const Simplex& s, const Int& t);
    Int operator()(const Simplex& s) const;                 // sorted simplex
    Int eval(const std::vector<VertexId>& ordered) const;   // ordered tuple

    Cochain operator+(const Cochain& o) const;
    Cochain operator-(const Cochain& o) const;
    bool operator==(const Cochain&) const = default;

private:
    int degree_;
    std::map<Simplex, Int> v_;
};

// Alternating-sum boundary. Throws SimplexNotInComplex if support leaves k.
Chain boundary(const SimplicialComplex& k, const Chain& c);

// <delta c, s> = <c, boundary s>. Degree must be < dim.
Cochain coboundary(const SimplicialComplex& k, const Cochain& c);

// Alexander-Whitney cup product under the total vertex order by id:
// (a cup b)(v0..v_{p+q}) = a(v0..v_p) * b(v_p..v_{p+q}).
Cochain cup(const SimplicialComplex& k, const Cochain& a, const Cochain& b);

// <c, z>: evaluate cochain against chain of the same degree.
Int pair(const Cochain& c, const Chain& z);

// Sum of coherently oriented facets. Throws NotOriented if orientation empty.
Chain fundamental_class(const SimplicialComplex& k, const std::vector<int>& orientation);

// Degree-2 cocycle supported on one triangle of an oriented surface, evaluating
// to +1 against the fundamental class. Throws TriangleNotInComplex.
Cochain fundamental_cocycle(const SimplicialComplex& surface,
                            const std::vector<int>& orientation, const Simplex& s);

// Exact integer psi with delta psi = target (degree 2), via Hermite-normal-form
// solving. Throws NotACoboundary when target is not exact.
Cochain solve_coboundary(const SimplicialComplex& k, const Cochain& target);

// Integral simplicial homology via Smith normal form of boundary matrices.
HomologySummary homology(const SimplicialComplex& k);

// Boundary matrix d_k : C_k -> C_{k-1} over the sorted face bases.
IntMat boundary_matrix(const SimplicialComplex& k, int deg);

} // namespace hopfmu
