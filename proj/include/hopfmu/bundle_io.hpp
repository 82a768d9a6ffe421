// The line-based bundle file format: named complexes and maps in one file.
#pragma once

#include <iosfwd>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "hopfmu/maps.hpp"

namespace hopfmu {

struct Bundle {
    // insertion order preserved for deterministic serialization
    std::vector<std::string> complex_order;
    std::map<std::string, ComplexPtr> complexes;
    std::vector<std::string> map_order;
    std::map<std::string, std::shared_ptr<SimplicialMap>> maps;

    ComplexPtr complex_named(const std::string& name) const; // throws UnknownComplex
    std::shared_ptr<SimplicialMap> map_named(const std::string& name) const;
};

// Throws Error with code SyntaxError / UnknownComplex / UnknownVertex /
// UnmappedVertex; messages carry 1-based line numbers.
Bundle parse_bundle(const std::string& text);
Bundle parse_bundle_file(const std::string& path);

std::string serialize_bundle(const Bundle& b);

} // namespace hopfmu
