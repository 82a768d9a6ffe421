#include "hopfmu/report.hpp"

namespace hopfmu {

namespace {

std::string simplex_label(const SimplicialComplex& k, const Simplex& s) {
    std::string out;
    for (size_t i = 0; i < s.v.size(); ++i) {
        if (i) out += ' ';
        if (auto l = k.label(s.v[i]))
            out += *l;
        else
            out += std::to_string(s.v[i]);
    }
    return out;
}

Json homology_json(const HomologySummary& h) {
    Json j;
    j["betti"] = h.betti;
    Json tor = Json::array();
    for (const auto& degree : h.torsion) {
        Json d = Json::array();
        for (const Int& t : degree) d.push_back(t.str());
        tor.push_back(d);
    }
    j["torsion"] = tor;
    return j;
}

} // namespace

Json manifold_report_json(const ManifoldReport& r) {
    Json j;
    j["verdict"] = verdict_name(r.verdict);
    j["is_pure"] = r.is_pure;
    j["is_closed_pseudomanifold"] = r.is_closed_pseudomanifold;
    j["is_connected"] = r.is_connected;
    j["all_links_spheres"] = r.all_links_spheres;
    j["orientable"] = r.orientable;
    j["euler_characteristic"] = r.euler_characteristic.str();
    if (r.verdict != Verdict::Invalid) {
        j["homology"] = homology_json(r.homology);
        j["s3_homology_certified"] = r.s3_homology_certified;
    }
    if (!r.reason.empty()) j["reason"] = r.reason;
    return j;
}

Json mu_table_json(const SimplicialMap& f) {
    Json j = Json::object();
    Int total = 0;
    for (const auto& [s, count] : f.mu_all()) {
        j[simplex_label(f.target(), s)] = count.str();
        total += count;
    }
    Json out;
    out["mu"] = j;
    out["total_nondegenerate_facets"] = total.str();
    return out;
}

Json fiber_diagram_json(const SimplicialMap& f, const Simplex& s, const FiberDiagram& d) {
    Json j;
    j["base_triangle"] = simplex_label(f.target(), s);
    j["component_count"] = d.components.size();
    j["total_segments"] = d.total_segments().str();
    Json comps = Json::array();
    for (const auto& comp : d.components) {
        Json c;
        c["size_s"] = comp.tetras.size();
        c["size_v"] = comp.vertex_set.size();
        Json cyc = Json::array();
        for (const auto& seg : comp.cycle) {
            Json e;
            e["tetra"] = simplex_label(f.source(), seg.tetra);
            e["initial"] = simplex_label(f.source(), Simplex{{seg.initial}});
            e["terminal"] = simplex_label(f.source(), Simplex{{seg.terminal}});
            cyc.push_back(e);
        }
        c["cycle"] = cyc;
        comps.push_back(c);
    }
    j["components"] = comps;
    return j;
}

Json hopf_result_json(const HopfResult& h) {
    Json j;
    j["value"] = h.value.str();
    j["base_triangle_used"] = to_string(h.base_triangle_used);
    Json checks = Json::array();
    for (const auto& [s, v] : h.well_definedness_checks) {
        Json c;
        c["triangle"] = to_string(s);
        c["value"] = v.str();
        checks.push_back(c);
    }
    j["well_definedness_checks"] = checks;
    return j;
}

Json bound_report_json(const BoundReport& r) {
    Json j;
    j["base_triangle"] = to_string(r.base_triangle);
    j["h_value"] = r.h_value.str();
    j["mu"] = r.mu_value.str();
    j["bound_holds"] = r.bound_holds;
    j["all_components_certified"] = r.all_certified;
    Json comps = Json::array();
    for (const auto& c : r.components) {
        Json cj;
        cj["size_s"] = c.size_s.str();
        cj["size_v"] = c.size_v.str();
        cj["certificate"] = certificate_kind_name(c.kind);
        if (c.kind != CertificateKind::Neither) {
            cj["witness_vertex"] = c.witness;
            cj["disk_boundary_ok"] = c.disk_boundary_ok;
        } else {
            cj["initial_surjective"] = c.initial_surjective;
            cj["min_vertex_preimages"] = c.min_vertex_preimages.str();
        }
        comps.push_back(cj);
    }
    j["components"] = comps;
    return j;
}

Json theorem_report_json(const std::string& map_name, const SimplicialMap& f) {
    Json j;
    j["schema_version"] = kReportSchemaVersion;
    j["map"] = map_name;
    j["source_validation"] = manifold_report_json(
        validate_closed_oriented_3_manifold(f.source()));
    j["target_validation"] = manifold_report_json(validate_sphere_2(f.target()));
    j["simplicial"] = f.is_simplicial();
    j["mu_table"] = mu_table_json(f);
    HopfResult h = hopf_invariant(f);
    j["hopf"] = hopf_result_json(h);
    Json bounds = Json::array();
    for (const auto& s : f.target().facets())
        bounds.push_back(bound_report_json(verify_lower_bound(f, s, h.value)));
    j["bound_reports"] = bounds;
    return j;
}

} // namespace hopfmu
