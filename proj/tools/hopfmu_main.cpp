// CLI for validating, measuring, and certifying simplicial maps S^3 -> S^2.
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "hopfmu/bundle_io.hpp"
#include "hopfmu/chains.hpp"
#include "hopfmu/generators.hpp"
#include "hopfmu/hopf.hpp"
#include "hopfmu/manifold.hpp"
#include "hopfmu/report.hpp"

namespace {

using namespace hopfmu;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitParse = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitTheorem = 4;

int exit_code_for(const Error& e) {
    switch (e.code()) {
        case Err::SyntaxError:
        case Err::UnknownComplex:
        case Err::UnknownVertex:
        case Err::UnmappedVertex:
            return kExitParse;
        case Err::TheoremViolation:
            return kExitTheorem;
        default:
            return kExitPrecondition;
    }
}

Simplex parse_triangle(const SimplicialComplex& k, const std::string& spec) {
    std::vector<VertexId> ids;
    std::string tok;
    std::istringstream is(spec);
    while (std::getline(is, tok, ',')) {
        bool found = false;
        for (VertexId v : k.vertices())
            if (k.label(v) == tok) {
                ids.push_back(v);
                found = true;
                break;
            }
        if (!found) fail(Err::UnknownVertex, tok + " is not a vertex label of " + k.name());
    }
    return Simplex{ids};
}

int cmd_validate(const std::string& file) {
    Bundle b = parse_bundle_file(file);
    bool all_ok = true;
    for (const auto& name : b.complex_order) {
        const auto& k = *b.complexes.at(name);
        ManifoldReport rep =
            k.dim() == 3 ? validate_closed_oriented_3_manifold(k) : validate_sphere_2(k);
        std::cout << name << ": " << verdict_name(rep.verdict);
        if (!rep.ok()) {
            std::cout << " (" << rep.reason << ")";
            all_ok = false;
        } else if (k.dim() == 3) {
            std::cout << (rep.s3_homology_certified ? " [S3 homology certified]"
                                                    : " [homology differs from S3]");
        }
        std::cout << "\n";
    }
    for (const auto& name : b.map_order) {
        auto violations = b.maps.at(name)->validate_simplicial();
        std::cout << "map " << name << ": "
                  << (violations.empty() ? "simplicial" : "NOT simplicial") << "\n";
        if (!violations.empty()) all_ok = false;
    }
    return all_ok ? kExitOk : kExitValidation;
}

int cmd_mu(const std::string& file, const std::string& map_name, const std::string& triangle) {
    Bundle b = parse_bundle_file(file);
    auto f = b.map_named(map_name);
    if (!triangle.empty()) {
        Simplex s = parse_triangle(f->target(), triangle);
        std::cout << "mu = " << f->mu(s) << "\n";
        return kExitOk;
    }
    std::cout << mu_table_json(*f).dump(2) << "\n";
    return kExitOk;
}

int cmd_fibers(const std::string& file, const std::string& map_name,
               const std::string& triangle, bool json) {
    Bundle b = parse_bundle_file(file);
    auto f = b.map_named(map_name);
    Simplex s = parse_triangle(f->target(), triangle);
    FiberDiagram d = extract_fiber(*f, s);
    Json j = fiber_diagram_json(*f, s, d);
    auto certs = null_certificate(*f, s);
    if (certs) {
        Json cj = Json::array();
        for (const auto& c : *certs) {
            Json e;
            e["component"] = c.component;
            e["kind"] = certificate_kind_name(c.kind);
            e["witness"] = c.witness;
            cj.push_back(e);
        }
        j["null_certificates"] = cj;
    } else {
        j["null_certificates"] = nullptr;
    }
    if (json) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "fiber over " << to_string(s) << ": " << d.components.size()
                  << " component(s), total segments " << d.total_segments() << "\n";
        for (size_t i = 0; i < d.components.size(); ++i)
            std::cout << "  component " << i << ": |S_i| = " << d.components[i].tetras.size()
                      << ", |V_i| = " << d.components[i].vertex_set.size() << "\n";
        std::cout << "null certificate: " << (certs ? "present" : "absent") << "\n";
    }
    return kExitOk;
}

int cmd_hopf(const std::string& file, const std::string& map_name) {
    Bundle b = parse_bundle_file(file);
    auto f = b.map_named(map_name);
    HopfResult h = hopf_invariant(*f);
    std::cout << hopf_result_json(h).dump(2) << "\n";
    return kExitOk;
}

int cmd_check_theorem(const std::string& file, const std::string& map_name) {
    Bundle b = parse_bundle_file(file);
    auto f = b.map_named(map_name);
    Json j = theorem_report_json(map_name, *f);
    std::cout << j.dump(2) << "\n";
    bool ok = true;
    if (!j["source_validation"]["s3_homology_certified"].is_boolean() ||
        !j["source_validation"]["s3_homology_certified"].get<bool>())
        ok = false;
    return ok ? kExitOk : kExitValidation;
}

int cmd_generate(const std::string& family, int n, const std::string& out) {
    GeneratedMap g;
    std::string map_name;
    if (family == "collapse5") {
        g = gen_collapse5();
        map_name = "collapse5";
    } else if (family == "hopf") {
        g = gen_hopf();
        map_name = "hopf";
    } else if (family == "xi") {
        g = gen_seifert_xi(n);
        map_name = "xi" + std::to_string(n);
    } else if (family == "zeta") {
        g = gen_zeta(n);
        map_name = "zeta" + std::to_string(n);
    } else {
        fail(Err::PreconditionFailed, "unknown family " + family);
    }
    Bundle b;
    b.complex_order = {g.source->name(), g.target->name()};
    b.complexes[g.source->name()] = g.source;
    b.complexes[g.target->name()] = g.target;
    b.map_order = {map_name};
    b.maps[map_name] = g.map;
    std::string text = serialize_bundle(b);
    if (out.empty() || out == "-") {
        std::cout << text;
    } else {
        std::ofstream of(out);
        if (!of) fail(Err::PreconditionFailed, "cannot write " + out);
        of << text;
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact analysis of simplicial maps from closed 3-manifolds to the 2-sphere"};
    app.require_subcommand(1);

    std::string file, map_name, triangle, family, out;
    int n = 2;
    bool json = false;

    auto* validate = app.add_subcommand("validate", "validate all complexes and maps in a bundle");
    validate->add_option("file", file)->required();

    auto* mu = app.add_subcommand("mu", "facet preimage counts");
    mu->add_option("file", file)->required();
    mu->add_option("--map", map_name)->required();
    mu->add_option("--triangle", triangle);

    auto* fibers = app.add_subcommand("fibers", "fiber diagram over a triangle's barycenter");
    fibers->add_option("file", file)->required();
    fibers->add_option("--map", map_name)->required();
    fibers->add_option("--triangle", triangle)->required();
    fibers->add_flag("--json", json);

    auto* hopf = app.add_subcommand("hopf", "Hopf invariant with well-definedness checks");
    hopf->add_option("file", file)->required();
    hopf->add_option("--map", map_name)->required();

    auto* check = app.add_subcommand("check-theorem", "full report with the mu >= 9 bound");
    check->add_option("file", file)->required();
    check->add_option("--map", map_name)->required();

    auto* gen = app.add_subcommand("generate", "write a generated map bundle");
    gen->add_option("--family", family)->required()
        ->check(CLI::IsMember({"collapse5", "hopf", "xi", "zeta"}));
    gen->add_option("--n", n);
    gen->add_option("--out", out);

    CLI11_PARSE(app, argc, argv);

    try {
        if (validate->parsed()) return cmd_validate(file);
        if (mu->parsed()) return cmd_mu(file, map_name, triangle);
        if (fibers->parsed()) return cmd_fibers(file, map_name, triangle, json);
        if (hopf->parsed()) return cmd_hopf(file, map_name);
        if (check->parsed()) return cmd_check_theorem(file, map_name);
        if (gen->parsed()) return cmd_generate(family, n, out);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitPrecondition;
    }
    return kExitOk;
}
