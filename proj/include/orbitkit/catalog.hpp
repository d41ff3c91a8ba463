#pragma once

#include <optional>
#include <string>
#include <vector>

#include "orbitkit/realform.hpp"

namespace orbitkit {

struct CatalogEntry {
    RealFormSpec spec;
    std::vector<std::string> aliases;
};

struct Catalog {
    std::string schema;
    std::string version;
    std::string source;  // "embedded" or a path
    std::vector<CatalogEntry> entries;

    // Matches ids and aliases after canonical_form_name.
    const CatalogEntry* find(const std::string& name) const;
    std::vector<const CatalogEntry*> of_type(const CartanType& t) const;
};

// Parses the JSON catalog. Nodes are 1-based in the file, 0-based in memory.
Catalog parse_catalog(const std::string& json_text, const std::string& source);
Catalog load_catalog(const std::string& path);
// ORBITKIT_CATALOG if set, otherwise the copy compiled into the library.
Catalog default_catalog();

// Lower-case, blanks removed, "so(2,5)" -> "so(5,2)" etc.
std::string canonical_form_name(const std::string& name);

// fnmatch-style glob with * and ?; also used for --filter.
bool glob_match(const std::string& pattern, const std::string& text);

}  // namespace orbitkit
