// Combinatorial Hopf invariant and the lemma-based null certificate.
#pragma once

#include <optional>
#include <vector>

#include "hopfmu/fibers.hpp"
#include "hopfmu/maps.hpp"

namespace hopfmu {

struct HopfResult {
    Int value = 0;
    Simplex base_triangle_used;
    // alternative fundamental-cocycle choices and the recomputed values
    std::vector<std::pair<Simplex, Int>> well_definedness_checks;
};

// H(f) = <psi cup f*omega, [K1]> with delta psi = f*omega, omega the
// fundamental cocycle of the target dual to a triangle. Requires the source to
// be a closed oriented complex with S^3 integral homology and the target a
// 2-sphere. Recomputes with every target triangle and checks agreement.
HopfResult hopf_invariant(const SimplicialMap& f);

// If every fiber component over s admits a Lemma 1 or Lemma 2 disk, returns
// the certificate list (witnessing H = 0); otherwise nullopt.
std::optional<std::vector<LemmaCertificate>> null_certificate(const SimplicialMap& f,
                                                              const Simplex& s);

} // namespace hopfmu
