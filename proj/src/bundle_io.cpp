#include "hopfmu/bundle_io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace hopfmu {

ComplexPtr Bundle::complex_named(const std::string& name) const {
    auto it = complexes.find(name);
    if (it == complexes.end()) fail(Err::UnknownComplex, name);
    return it->second;
}

std::shared_ptr<SimplicialMap> Bundle::map_named(const std::string& name) const {
    auto it = maps.find(name);
    if (it == maps.end()) fail(Err::UnknownComplex, "map " + name);
    return it->second;
}

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> toks;
    std::istringstream is(line);
    std::string t;
    while (is >> t) {
        if (t[0] == '#') break; // comment to end of line
        toks.push_back(t);
    }
    return toks;
}

bool valid_label(const std::string& s) {
    if (s.empty()) return false;
    return std::all_of(s.begin(), s.end(),
                       [](unsigned char c) { return std::isalnum(c) || c == '_'; });
}

[[noreturn]] void syntax(int line, const std::string& what) {
    fail(Err::SyntaxError, "line " + std::to_string(line) + ": " + what);
}

struct PendingComplex {
    std::string name;
    int declared_dim = -1;
    std::vector<std::string> label_order; // label -> id is position here
    std::map<std::string, VertexId> ids;
    std::vector<std::vector<VertexId>> facets;
    int first_line = 0;

    VertexId intern(const std::string& label) {
        auto it = ids.find(label);
        if (it != ids.end()) return it->second;
        VertexId id = static_cast<VertexId>(label_order.size());
        label_order.push_back(label);
        ids.emplace(label, id);
        return id;
    }
};

ComplexPtr finish(PendingComplex& pc, int line) {
    if (pc.facets.empty()) syntax(line, "complex " + pc.name + " has no facets");
    SimplicialComplex k = SimplicialComplex::build(pc.name, pc.facets);
    if (pc.declared_dim >= 0 && k.dim() != pc.declared_dim)
        syntax(line, "complex " + pc.name + " declares dim " +
                         std::to_string(pc.declared_dim) + " but has dim " +
                         std::to_string(k.dim()));
    for (size_t i = 0; i < pc.label_order.size(); ++i)
        k.set_label(static_cast<VertexId>(i), pc.label_order[i]);
    return std::make_shared<SimplicialComplex>(std::move(k));
}

} // namespace

Bundle parse_bundle(const std::string& text) {
    Bundle b;
    std::istringstream is(text);
    std::string raw;
    int lineno = 0;

    std::optional<PendingComplex> cur_complex;
    std::map<std::string, std::map<std::string, VertexId>> label_tables;

    struct PendingMap {
        std::string name, src, tgt;
        std::map<VertexId, VertexId> assignment;
        int first_line = 0;
    };
    std::optional<PendingMap> cur_map;

    auto flush_complex = [&]() {
        if (!cur_complex) return;
        ComplexPtr k = finish(*cur_complex, lineno);
        if (b.complexes.count(cur_complex->name))
            syntax(cur_complex->first_line, "duplicate complex " + cur_complex->name);
        label_tables[cur_complex->name] = cur_complex->ids;
        b.complex_order.push_back(cur_complex->name);
        b.complexes.emplace(cur_complex->name, std::move(k));
        cur_complex.reset();
    };
    auto flush_map = [&]() {
        if (!cur_map) return;
        ComplexPtr src = b.complex_named(cur_map->src);
        ComplexPtr tgt = b.complex_named(cur_map->tgt);
        for (VertexId v : src->vertices())
            if (!cur_map->assignment.count(v))
                fail(Err::UnmappedVertex,
                     "line " + std::to_string(cur_map->first_line) + ": map " + cur_map->name +
                         " leaves vertex " + *src->label(v) + " unmapped");
        auto m = std::make_shared<SimplicialMap>(src, tgt, cur_map->assignment);
        if (b.maps.count(cur_map->name))
            syntax(cur_map->first_line, "duplicate map " + cur_map->name);
        b.map_order.push_back(cur_map->name);
        b.maps.emplace(cur_map->name, std::move(m));
        cur_map.reset();
    };

    bool saw_any = false;
    while (std::getline(is, raw)) {
        ++lineno;
        auto toks = tokenize(raw);
        if (toks.empty()) continue;
        saw_any = true;
        const std::string& kw = toks[0];
        if (kw == "complex") {
            flush_map();
            flush_complex();
            if (toks.size() != 2 || !valid_label(toks[1]))
                syntax(lineno, "expected: complex <name>");
            cur_complex = PendingComplex{};
            cur_complex->name = toks[1];
            cur_complex->first_line = lineno;
        } else if (kw == "dim") {
            if (!cur_complex) syntax(lineno, "dim outside a complex section");
            if (toks.size() != 2) syntax(lineno, "expected: dim <d>");
            cur_complex->declared_dim = std::stoi(toks[1]);
        } else if (kw == "facet") {
            if (!cur_complex) syntax(lineno, "facet outside a complex section");
            if (toks.size() < 2) syntax(lineno, "facet needs vertices");
            std::vector<VertexId> f;
            for (size_t i = 1; i < toks.size(); ++i) {
                if (!valid_label(toks[i])) syntax(lineno, "bad vertex label " + toks[i]);
                f.push_back(cur_complex->intern(toks[i]));
            }
            cur_complex->facets.push_back(std::move(f));
        } else if (kw == "map") {
            flush_map();
            flush_complex();
            if (toks.size() != 4) syntax(lineno, "expected: map <name> <source> <target>");
            cur_map = PendingMap{};
            cur_map->name = toks[1];
            cur_map->src = toks[2];
            cur_map->tgt = toks[3];
            cur_map->first_line = lineno;
            if (!b.complexes.count(cur_map->src)) fail(Err::UnknownComplex, cur_map->src);
            if (!b.complexes.count(cur_map->tgt)) fail(Err::UnknownComplex, cur_map->tgt);
        } else if (cur_map && toks.size() == 3 && toks[1] == "->") {
            const auto& st = label_tables.at(cur_map->src);
            const auto& tt = label_tables.at(cur_map->tgt);
            auto si = st.find(toks[0]);
            if (si == st.end())
                fail(Err::UnknownVertex,
                     "line " + std::to_string(lineno) + ": " + toks[0] + " not in " + cur_map->src);
            auto ti = tt.find(toks[2]);
            if (ti == tt.end())
                fail(Err::UnknownVertex,
                     "line " + std::to_string(lineno) + ": " + toks[2] + " not in " + cur_map->tgt);
            cur_map->assignment[si->second] = ti->second;
        } else {
            syntax(lineno, "unrecognized line: " + raw);
        }
    }
    flush_map();
    flush_complex();
    if (!saw_any) syntax(1, "empty bundle");
    return b;
}

Bundle parse_bundle_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(Err::SyntaxError, "cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return parse_bundle(os.str());
}

namespace {

std::string label_of(const SimplicialComplex& k, VertexId v) {
    if (auto l = k.label(v)) return *l;
    return "v" + std::to_string(v);
}

} // namespace

std::string serialize_bundle(const Bundle& b) {
    std::ostringstream os;
    for (const auto& name : b.complex_order) {
        const auto& k = *b.complexes.at(name);
        os << "complex " << name << "\n";
        os << "dim " << k.dim() << "\n";
        for (const auto& f : k.facets()) {
            os << "facet";
            for (VertexId v : f.v) os << ' ' << label_of(k, v);
            os << "\n";
        }
        os << "\n";
    }
    for (const auto& name : b.map_order) {
        const auto& m = *b.maps.at(name);
        std::string src_name, tgt_name;
        for (const auto& [cn, cp] : b.complexes) {
            if (cp.get() == &m.source()) src_name = cn;
            if (cp.get() == &m.target()) tgt_name = cn;
        }
        os << "map " << name << ' ' << src_name << ' ' << tgt_name << "\n";
        for (const auto& [v, w] : m.assignment())
            os << label_of(m.source(), v) << " -> " << label_of(m.target(), w) << "\n";
        os << "\n";
    }
    return os.str();
}

} // namespace hopfmu
