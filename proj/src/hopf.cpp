#include "hopfmu/hopf.hpp"

#include "hopfmu/chains.hpp"
#include "hopfmu/manifold.hpp"

namespace hopfmu {

namespace {

Int hopf_with_cocycle(const SimplicialMap& f, const Simplex& s0,
                      const std::vector<int>& src_orient,
                      const std::vector<int>& tgt_orient) {
    const SimplicialComplex& k1 = f.source();
    const SimplicialComplex& k2 = f.target();
    Cochain omega = fundamental_cocycle(k2, tgt_orient, s0);
    Cochain fw = f.pullback(omega);
    Cochain psi = solve_coboundary(k1, fw);
    Chain fund = fundamental_class(k1, src_orient);
    return pair(cup(k1, psi, fw), fund);
}

} // namespace

HopfResult hopf_invariant(const SimplicialMap& f) {
    ManifoldReport src = validate_closed_oriented_3_manifold(f.source());
    if (!src.ok() || !src.s3_homology_certified)
        fail(Err::NotHomologySphere,
             "source: " + (src.ok() ? std::string("homology is not that of S^3") : src.reason));
    ManifoldReport tgt = validate_sphere_2(f.target());
    if (!tgt.ok()) fail(Err::PreconditionFailed, "target: " + tgt.reason);
    if (!f.is_simplicial()) fail(Err::PreconditionFailed, "map is not simplicial");

    HopfResult res;
    const auto& tris = f.target().facets();
    res.base_triangle_used = tris.front();
    res.value = hopf_with_cocycle(f, tris.front(), *src.orientation, *tgt.orientation);
    for (size_t i = 1; i < tris.size(); ++i) {
        Int v = hopf_with_cocycle(f, tris[i], *src.orientation, *tgt.orientation);
        res.well_definedness_checks.emplace_back(tris[i], v);
        if (v != res.value)
            fail(Err::TheoremViolation,
                 "Hopf invariant differs across base-triangle choices: " + res.value.str() +
                     " vs " + v.str());
    }
    return res;
}

std::optional<std::vector<LemmaCertificate>> null_certificate(const SimplicialMap& f,
                                                              const Simplex& s) {
    FiberDiagram diag = extract_fiber(f, s);
    std::vector<LemmaCertificate> certs;
    for (size_t i = 0; i < diag.components.size(); ++i) {
        const FiberComponent& comp = diag.components[i];
        LemmaCertificate cert;
        cert.component = static_cast<int>(i);
        if (auto v = lemma1_condition(comp)) {
            cert.kind = CertificateKind::Lemma1;
            cert.witness = *v;
            cert.disk = build_disk_lemma1(comp, *v);
        } else if (auto alpha = lemma2_condition(f, comp, s)) {
            cert.kind = CertificateKind::Lemma2;
            cert.witness = *alpha;
            cert.disk = build_disk_lemma2(f, comp, s, *alpha);
        } else {
            return std::nullopt; // some component fails both lemmas
        }
        if (!(cert.disk->boundary() == component_cycle(comp)))
            throw std::logic_error("certificate disk boundary mismatch");
        certs.push_back(std::move(cert));
    }
    return certs;
}

} // namespace hopfmu
