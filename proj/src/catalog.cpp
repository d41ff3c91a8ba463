#include "orbitkit/catalog.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <regex>
#include <sstream>

#include "json.hpp"
#include "orbitkit/embedded_data.hpp"
#include "orbitkit/errors.hpp"

namespace orbitkit {

std::string canonical_form_name(const std::string& name) {
    std::string s;
    for (std::size_t i = 0; i < name.size(); ++i) {
        unsigned char ch = name[i];
        // U+2212 minus sign
        if (ch == 0xE2 && i + 2 < name.size() && (unsigned char)name[i + 1] == 0x88 && (unsigned char)name[i + 2] == 0x92) {
            s += '-';
            i += 2;
            continue;
        }
        if (std::isspace(ch) || ch == '_') continue;
        s += static_cast<char>(std::tolower(ch));
    }
    static const std::regex two(R"(^(so|su|sp|u)\((\d+),(\d+)\)$)");
    std::smatch m;
    if (std::regex_match(s, m, two)) {
        int p = std::stoi(m[2]), q = std::stoi(m[3]);
        if (p < q) std::swap(p, q);
        s = m[1].str() + "(" + std::to_string(p) + "," + std::to_string(q) + ")";
    }
    return s;
}

bool glob_match(const std::string& pattern, const std::string& text) {
    std::size_t p = 0, t = 0, star = std::string::npos, mark = 0;
    while (t < text.size()) {
        if (p < pattern.size() && (pattern[p] == '?' || pattern[p] == text[t])) {
            ++p;
            ++t;
        } else if (p < pattern.size() && pattern[p] == '*') {
            star = p++;
            mark = t;
        } else if (star != std::string::npos) {
            p = star + 1;
            t = ++mark;
        } else {
            return false;
        }
    }
    while (p < pattern.size() && pattern[p] == '*') ++p;
    return p == pattern.size();
}

const CatalogEntry* Catalog::find(const std::string& name) const {
    const std::string key = canonical_form_name(name);
    for (const auto& e : entries) {
        if (canonical_form_name(e.spec.id) == key) return &e;
        for (const auto& a : e.aliases)
            if (canonical_form_name(a) == key) return &e;
    }
    return nullptr;
}

std::vector<const CatalogEntry*> Catalog::of_type(const CartanType& t) const {
    std::vector<const CatalogEntry*> out;
    for (const auto& e : entries)
        if (e.spec.type == t) out.push_back(&e);
    return out;
}

Catalog parse_catalog(const std::string& json_text, const std::string& source) {
    using nlohmann::json;
    Catalog cat;
    cat.source = source;
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::exception& e) {
        throw CatalogError(source + ": " + e.what());
    }
    try {
        cat.schema = doc.at("schema").get<std::string>();
        if (cat.schema != "orbitkit-catalog/1") throw CatalogError(source + ": unsupported schema " + cat.schema);
        cat.version = doc.at("version").get<std::string>();
        for (const auto& f : doc.at("forms")) {
            CatalogEntry e;
            auto& s = e.spec;
            s.id = f.at("id").get<std::string>();
            const std::string where = source + ": " + s.id;
            try {
                s.type = CartanType::parse(f.at("cartan_type").get<std::string>());
            } catch (const ParseError& err) {
                throw CatalogError(where + ": " + err.what());
            }
            const int r = s.type.rank;
            if (f.contains("involution")) {
                for (int v : f.at("involution")) {
                    if (v < 1 || v > r) throw CatalogError(where + ": involution entry out of range");
                    s.involution.push_back(v - 1);
                }
                if (static_cast<int>(s.involution.size()) != r) throw CatalogError(where + ": involution has wrong length");
            }
            s.signs.assign(r, 1);
            if (f.contains("signs"))
                for (const auto& [k, v] : f.at("signs").items()) {
                    int node = std::stoi(k);
                    int sign = v.get<int>();
                    if (node < 1 || node > r) throw CatalogError(where + ": sign for a node out of range");
                    if (sign != 1 && sign != -1) throw CatalogError(where + ": signs must be +1 or -1");
                    s.signs[node - 1] = sign;
                }
            s.real_rank = f.at("real_rank").get<int>();
            const auto& ng = f.at("n_g");
            if (ng.is_number_integer()) {
                s.n_g = ng.get<int>();
            } else if (!(ng.is_string() && ng.get<std::string>() == "n_gc")) {
                throw CatalogError(where + ": n_g must be an integer or \"n_gc\"");
            }
            if (f.contains("dim_k")) s.dim_k = f.at("dim_k").get<int>();
            s.slow = f.value("slow", false);
            if (f.contains("aliases")) e.aliases = f.at("aliases").get<std::vector<std::string>>();
            for (const auto& other : cat.entries)
                if (canonical_form_name(other.spec.id) == canonical_form_name(s.id))
                    throw CatalogError(where + ": duplicate id");
            cat.entries.push_back(std::move(e));
        }
    } catch (const json::exception& e) {
        throw CatalogError(source + ": " + e.what());
    } catch (const std::invalid_argument&) {
        throw CatalogError(source + ": sign keys must be node numbers");
    }
    return cat;
}

Catalog load_catalog(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CatalogError("cannot open catalog " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_catalog(ss.str(), path);
}

Catalog default_catalog() {
    if (const char* env = std::getenv("ORBITKIT_CATALOG"); env && *env) return load_catalog(env);
    return parse_catalog(std::string(data::catalog_json), "embedded");
}

}  // namespace orbitkit
