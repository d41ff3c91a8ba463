#include "orbitkit/criteria.hpp"

#include "json.hpp"

#include <algorithm>
#include <regex>

#include "orbitkit/embedded_data.hpp"
#include "orbitkit/errors.hpp"
#include "orbitkit/orbits.hpp"

namespace orbitkit {

namespace {

using nlohmann::json;

Family family_from_letter(const std::string& s) {
    static const std::string letters = "ABCDEFG";
    if (s.size() != 1 || letters.find(s[0]) == std::string::npos) throw ParseError("bad family letter: " + s);
    return static_cast<Family>(letters.find(s[0]));
}

template <class T>
T field(const json& j, const char* key) {
    if (!j.contains(key)) throw ParseError(std::string("classification: missing key ") + key);
    try {
        return j.at(key).get<T>();
    } catch (const json::exception& e) {
        throw ParseError(std::string("classification: bad value for ") + key + ": " + e.what());
    }
}

const json& section(const json& root, const char* key, std::map<std::string, std::string>& cites) {
    if (!root.contains(key) || !root.at(key).is_object()) throw ParseError(std::string("classification: missing ") + key);
    const json& s = root.at(key);
    cites[key] = field<std::string>(s, "cite");
    return s;
}

std::optional<int> as_int(const std::string& s) {
    if (s.empty() || s.size() > 6) return std::nullopt;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
    return std::stoi(s);
}

ReductiveType simple_of(const CartanType& t) { return make_reductive({t}, 0); }

// (g_C, k_C) candidates per list entry, built from names so folding applies.
std::vector<std::pair<std::string, std::pair<ReductiveType, ReductiveType>>> vi_candidates(const CartanType& g) {
    std::vector<std::pair<std::string, std::pair<ReductiveType, ReductiveType>>> out;
    const int r = g.rank;
    auto add = [&](const char* id, const std::string& gn, const std::string& kn) {
        out.push_back({id, {complexified_type(gn), complexified_type(kn)}});
    };
    // every size that could give a simple type of rank r
    for (int n = 2; 2 * n - 1 <= r; ++n) add("sl_sp", "sl_" + std::to_string(2 * n), "sp_" + std::to_string(n));
    for (int n = 5; n <= 2 * r + 1; ++n) add("so_so", "so_" + std::to_string(n), "so_" + std::to_string(n - 1));
    for (int N = 2; N <= r; ++N)
        for (int m = 1; m <= N / 2; ++m)
            add("sp_spsp", "sp_" + std::to_string(N), "sp_" + std::to_string(m) + "+sp_" + std::to_string(N - m));
    add("f4_so9", "f4", "so_9");
    add("e6_f4", "e6", "f4");
    return out;
}

std::string yes_no(bool b) { return b ? "T" : "F"; }

}  // namespace

ClassificationTable parse_classification(const std::string& json_text) {
    json root;
    try {
        root = json::parse(json_text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("classification: ") + e.what());
    }
    if (field<std::string>(root, "schema") != "orbitkit-classification/1")
        throw ParseError("classification: unsupported schema");
    ClassificationTable t;
    t.version = field<std::string>(root, "version");

    for (const auto& r : field<json>(section(root, "ngc_table", t.cites), "rows")) {
        NgcRow row;
        row.family = family_from_letter(field<std::string>(r, "family"));
        row.formula = field<std::string>(r, "formula");
        row.a = field<int>(r, "a");
        row.b = field<int>(r, "b");
        auto ranks = field<std::vector<int>>(r, "ranks");
        if (ranks.size() != 2 || ranks[0] > ranks[1]) throw ParseError("classification: bad rank range");
        row.rank_lo = ranks[0];
        row.rank_hi = ranks[1];
        row.slow = r.value("slow", false);
        t.ngc_rows.push_back(row);
    }
    for (const auto& r : field<json>(section(root, "ng_table", t.cites), "rows"))
        t.ng_rows.push_back({field<std::string>(r, "id"), field<std::string>(r, "algebra"), field<std::string>(r, "formula")});
    for (const auto& r : field<json>(section(root, "bb_pairs", t.cites), "pairs"))
        t.bb_pairs.push_back({field<std::string>(r, "g"), field<std::string>(r, "h")});
    for (const auto& r : field<json>(section(root, "oko_v_forms", t.cites), "forms"))
        t.oko_v_forms.push_back({field<std::string>(r, "id"), field<std::string>(r, "text")});
    for (const auto& r : field<json>(section(root, "oko_vi_pairs", t.cites), "pairs"))
        t.oko_vi_pairs.push_back({field<std::string>(r, "id"), field<std::string>(r, "text")});
    for (const auto& r : field<json>(section(root, "irr_pairs", t.cites), "pairs"))
        t.irr_pairs.push_back({field<std::string>(r, "id"), field<std::string>(r, "g"), field<std::string>(r, "h"),
                               field<std::vector<std::string>>(r, "conditions")});
    for (const auto& r : field<json>(section(root, "fmult_examples", t.cites), "examples"))
        t.fmult_examples.push_back({field<std::string>(r, "id"), field<std::string>(r, "pair"),
                                    field<std::vector<std::string>>(r, "params"), field<std::string>(r, "condition")});
    t.theorems = field<std::map<std::string, std::string>>(root, "theorems");
    return t;
}

const ClassificationTable& default_classification() {
    static const ClassificationTable t = parse_classification(std::string(data::classification_json));
    return t;
}

std::optional<std::pair<std::string, int>> ng_table_value(const std::string& form_name) {
    const std::string s = canonical_form_name(form_name);
    static const std::regex su_star(R"(^su\*\((\d+)\)$)"), sl_h(R"(^sl\((\d+),h\)$)");
    static const std::regex so_n1(R"(^so\((\d+),1\)$)"), sp_mn(R"(^sp\((\d+),(\d+)\)$)");
    std::smatch m;
    if (std::regex_match(s, m, su_star) && std::stoi(m[1]) % 2 == 0 && std::stoi(m[1]) >= 4)
        return std::pair<std::string, int>{"su_star", 4 * (std::stoi(m[1]) / 2) - 4};
    if (std::regex_match(s, m, sl_h) && std::stoi(m[1]) >= 2)
        return std::pair<std::string, int>{"su_star", 4 * std::stoi(m[1]) - 4};
    if (std::regex_match(s, m, so_n1) && std::stoi(m[1]) >= 4)
        return std::pair<std::string, int>{"so_n1", std::stoi(m[1]) + 1 - 2};
    if (std::regex_match(s, m, sp_mn) && std::stoi(m[2]) >= 1)
        return std::pair<std::string, int>{"sp_mn", 2 * (std::stoi(m[1]) + std::stoi(m[2])) - 1};
    if (s == "f4(-20)") return std::pair<std::string, int>{"f4_m20", 11};
    if (s == "e6(-26)") return std::pair<std::string, int>{"e6_m26", 16};
    return std::nullopt;
}

std::optional<std::string> oko_v_match(const CatalogEntry& e) {
    std::vector<std::string> names{e.spec.id};
    names.insert(names.end(), e.aliases.begin(), e.aliases.end());
    static const std::regex compact(R"(^(su|so|sp)\((\d+)\)$|^(g2|f4|e6|e7|e8)\((-?\d+)\)$)");
    for (const auto& n : names) {
        if (auto v = ng_table_value(n)) return v->first;
        // compact exceptional forms carry index -dim
        const std::string s = canonical_form_name(n);
        std::smatch m;
        if (std::regex_match(s, m, compact)) {
            if (m[1].matched) return std::string("compact");
            const int idx = std::stoi(m[4]);
            if ((m[3] == "g2" && idx == -14) || (m[3] == "f4" && idx == -52) || (m[3] == "e6" && idx == -78) ||
                (m[3] == "e7" && idx == -133) || (m[3] == "e8" && idx == -248))
                return std::string("compact");
        }
    }
    return std::nullopt;
}

std::optional<std::string> oko_vi_match(const CartanType& g, const ReductiveType& k) {
    const ReductiveType gt = simple_of(g);
    if (k == gt) return std::string("trivial");
    for (const auto& [id, pr] : vi_candidates(g))
        if (pr.first == gt && pr.second == k) return id;
    return std::nullopt;
}

std::optional<std::string> irr_match(const std::string& g_name, const std::string& h_name) {
    const std::string g = canonical_form_name(g_name);
    std::string h = canonical_form_name(h_name);
    std::smatch m;
    static const std::regex sp_r(R"(^sp\((\d+),r\)$)");
    if (std::regex_match(g, m, sp_r)) {
        const int n = std::stoi(m[1]);
        for (int p = 1; p < n; ++p) {
            const std::string a = "sp(" + std::to_string(p) + ",r)", b = "sp(" + std::to_string(n - p) + ",r)";
            if (h == a + "+" + b || h == b + "+" + a) return std::string("sp_sp");
        }
        return std::nullopt;
    }
    static const std::regex so_pq(R"(^so\((\d+),(\d+)\)$)");
    if (std::regex_match(g, m, so_pq)) {
        const int p = std::stoi(m[1]), q = std::stoi(m[2]);  // p >= q after canonicalization
        const bool cond = (q >= 4 && (p - q) % 2 == 0) || (p >= 5 && q == 2) || (p >= 4 && q == 3);
        if (!cond) return std::nullopt;
        if (h == canonical_form_name("so(" + std::to_string(p - 1) + "," + std::to_string(q) + ")") ||
            h == canonical_form_name("so(" + std::to_string(p) + "," + std::to_string(q - 1) + ")"))
            return std::string("so_so");
        return std::nullopt;
    }
    if (g == "f4(4)" && h == "so(5,4)") return std::string("f4_so");
    if (g == "e6(6)" && h == "f4(4)") return std::string("e6_f4_split");
    if (g == "e6(-14)" && h == "f4(-20)") return std::string("e6_f4");
    return std::nullopt;
}

std::shared_ptr<const RealForm> FormCache::get(const CatalogEntry& e) {
    std::shared_ptr<Slot> slot;
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto& s = slots_[e.spec.id];
        if (!s) s = std::make_shared<Slot>();
        slot = s;
    }
    std::call_once(slot->once, [&] { slot->form = realize(e.spec); });
    return slot->form;
}

AuditReport audit_prop_oko(const CatalogEntry& e, const RealForm& rf) {
    AuditReport a;
    a.id = rf.id();
    a.minimality_case = minimality_case(rf);
    a.hermitian = hermitian_type(rf);
    a.n_g = n_real(rf);
    a.n_gc = n_complex(rf.complex().roots());
    const ReductiveType k = k_complex_type(rf);
    a.k_type = k.name();
    a.iii = !theta_beta_test(rf);
    a.ii = a.iii;
    a.iv = a.n_g > a.n_gc;
    if (auto v = oko_v_match(e)) {
        a.v = true;
        a.v_match = *v;
    }
    if (auto vi = oko_vi_match(rf.spec().type, k)) {
        a.vi = true;
        a.vi_match = *vi;
    }
    if (!(a.iii == a.iv && a.iv == a.v && a.v == a.vi))
        throw EquivalenceViolation(a.id + ": conditions disagree (iii=" + yes_no(a.iii) + " iv=" + yes_no(a.iv) +
                                   " v=" + yes_no(a.v) + " vi=" + yes_no(a.vi) + ", k_C=" + a.k_type + ")");
    return a;
}

std::string to_string(RepClass r) {
    switch (r) {
    case RepClass::MinimalRep: return "MinimalRep";
    case RepClass::SmallestGK_nC: return "SmallestGK_nC";
    case RepClass::SmallestGK_nR: return "SmallestGK_nR";
    case RepClass::TensorOfMinimals: return "TensorOfMinimals";
    }
    return "?";
}

std::string to_string(Conclusion c) {
    switch (c) {
    case Conclusion::BoundedMultiplicity: return "BoundedMultiplicity";
    case Conclusion::AlmostIrreducible: return "AlmostIrreducible";
    case Conclusion::NotCovered: return "NotCovered";
    }
    return "?";
}

RepClass rep_class_from_string(const std::string& s) {
    if (s == "MinimalRep" || s == "minimal") return RepClass::MinimalRep;
    if (s == "SmallestGK_nC" || s == "smallest-nc") return RepClass::SmallestGK_nC;
    if (s == "SmallestGK_nR" || s == "smallest-nr") return RepClass::SmallestGK_nR;
    if (s == "TensorOfMinimals" || s == "tensor") return RepClass::TensorOfMinimals;
    throw ParseError("unknown representation class: " + s);
}

Conclusion conclusion_from_string(const std::string& s) {
    if (s == "BoundedMultiplicity") return Conclusion::BoundedMultiplicity;
    if (s == "AlmostIrreducible") return Conclusion::AlmostIrreducible;
    if (s == "NotCovered") return Conclusion::NotCovered;
    throw ParseError("unknown conclusion: " + s);
}

namespace {

struct ResolvedPair {
    const CatalogEntry* g = nullptr;
    const CatalogEntry* dual = nullptr;  // form whose k_C is h_C; null for diag
    std::string h_name;                  // as given, for the example lists
    bool diag = false;
};

ResolvedPair resolve(FormCache& forms, const std::string& pair) {
    const auto colon = pair.find(':');
    if (colon == std::string::npos) throw UnknownPair("pair must look like g:h, got '" + pair + "'");
    const std::string gname = pair.substr(0, colon), hspec = pair.substr(colon + 1);
    const Catalog& cat = forms.catalog();
    ResolvedPair r;
    r.g = cat.find(gname);
    if (!r.g) throw UnknownPair("'" + gname + "' is not in the catalog");
    r.h_name = hspec;
    if (hspec == "diag") {
        r.diag = true;
        return r;
    }
    if (hspec == "k") {
        r.dual = r.g;
        return r;
    }
    if (hspec.rfind("symmetric:", 0) == 0) {
        const std::string id = hspec.substr(10);
        r.dual = cat.find(id);
        if (!r.dual || !(r.dual->spec.type == r.g->spec.type))
            throw UnknownPair("'" + id + "' is not a catalogued involution of " + r.g->spec.type.name());
        return r;
    }
    ReductiveType h;
    try {
        h = complexified_type(hspec);
    } catch (const ParseError& e) {
        throw UnknownPair(std::string("cannot read subalgebra: ") + e.what());
    }
    for (const CatalogEntry* e : cat.of_type(r.g->spec.type)) {
        if (e->spec.slow && e != r.g) continue;
        if (k_complex_type(*forms.get(*e)) == h) {
            r.dual = e;
            return r;
        }
    }
    throw UnknownPair("'" + hspec + "' (complexification " + h.name() + ") is not the fixed algebra of an involution of " +
                      r.g->spec.type.name());
}

void add_theorem(Verdict& v, const std::string& key) {
    if (!default_classification().theorems.count(key)) throw InternalError("missing citation key " + key);
    v.theorems_used.push_back(key);
}

}  // namespace

Verdict verdict(FormCache& forms, const std::string& pair, RepClass rep) {
    const ResolvedPair rp = resolve(forms, pair);
    const auto rf = forms.get(*rp.g);
    Verdict v;
    v.pair_id = pair;
    v.representation_class = rep;
    v.g_complex = simple_of(rf->spec().type).name();
    const std::size_t ng = n_real(*rf), ngc = n_complex(rf->complex().roots());
    const bool gap = ng > ngc;
    const std::string gap_reason = rf->id() + " has n(g) = " + std::to_string(ng) + " > n(g_C) = " + std::to_string(ngc) +
                                   ", so no irreducible representation has GK dimension n(g_C)";

    if (rp.diag) {
        v.h_complex = v.g_complex;
        if (rep != RepClass::TensorOfMinimals) {
            v.reason = "the diagonal pair is handled only for tensor products";
            return v;
        }
        if (gap) {
            v.reason = gap_reason;
            return v;
        }
        v.certificate = certify_diag_tensor(rf->complex().roots());
        v.conclusion = Conclusion::BoundedMultiplicity;
        add_theorem(v, "minimal-rep-tensor-bounded");
        add_theorem(v, "smallest-gk-tensor-bounded");
        add_theorem(v, "coisotropic-implies-bounded");
        return v;
    }

    const auto dual = forms.get(*rp.dual);
    const ReductiveType h = k_complex_type(*dual);
    v.h_complex = h.name();
    v.matched_form = dual->id();
    if (rep == RepClass::TensorOfMinimals) {
        v.reason = "tensor products are handled for the diagonal pair only";
        return v;
    }

    auto complex_route = [&](const char* key) {
        v.certificate = certify_complex_symmetric(*dual);
        v.conclusion = Conclusion::BoundedMultiplicity;
        add_theorem(v, key);
        add_theorem(v, "coisotropic-implies-bounded");
    };

    if (rep == RepClass::SmallestGK_nR && gap) {
        if (h == k_complex_type(*rf)) {
            v.certificate = certify_real_symmetric(*rf);
            v.conclusion = Conclusion::BoundedMultiplicity;
            add_theorem(v, "real-minimal-bounded");
            add_theorem(v, "coisotropic-implies-bounded");
            v.reason = "g'_C matched with k_C by isomorphism class of the complexified pair";
        } else {
            v.reason = "n(g) > n(g_C) and g'_C (" + h.name() + ") is not of the type of k_C (" +
                       k_complex_type(*rf).name() + ")";
        }
        return v;
    }
    if (gap) {
        v.reason = gap_reason;
        return v;
    }
    if (rep == RepClass::MinimalRep) {
        complex_route("minimal-rep-bounded");
        const auto irr = irr_match(rf->id(), rp.h_name);
        const auto vi = oko_vi_match(rf->spec().type, h);
        if (irr || vi) {
            v.conclusion = Conclusion::AlmostIrreducible;
            add_theorem(v, "almost-irreducible");
            v.reason = irr ? "listed example family " + *irr : "complexified pair in the list, family " + *vi;
        }
        return v;
    }
    // SmallestGK_nC, or SmallestGK_nR with n(g) = n(g_C)
    complex_route("smallest-gk-bounded");
    v.reason = "multiplicities are bounded but need not be 1";
    return v;
}

bool query_fmult(const std::string& example_id, const std::map<std::string, std::string>& params) {
    auto num = [&](const std::string& k) {
        auto it = params.find(k);
        if (it == params.end()) throw ParseError(example_id + ": missing parameter " + k);
        auto v = as_int(it->second);
        if (!v) throw ParseError(example_id + ": parameter " + k + " must be a non-negative integer");
        return *v;
    };
    if (example_id == "sl_so") {
        const int p = num("p"), q = num("q");
        return p == 0 || q == 0 || (p == 1 && q == 1);
    }
    if (example_id == "o_oo") {
        const int p1 = num("p1"), q1 = num("q1"), p2 = num("p2"), q2 = num("q2");
        return p1 + q1 == 1 || p2 + q2 == 1 || p1 + p2 == 1 || q1 + q2 == 1;
    }
    if (example_id == "group_manifold") {
        auto it = params.find("G");
        if (it == params.end()) throw ParseError("group_manifold: missing parameter G");
        const std::string g = canonical_form_name(it->second);
        std::smatch m;
        static const std::regex compact(R"(^(su|so|sp)\((\d+)\)$|^(g2|f4|e6|e7|e8)(\((-14|-52|-78|-133|-248)\))?$)");
        static const std::regex lorentz(R"(^so\((\d+),1\)$)");
        if (std::regex_match(g, m, compact)) {
            // a bare exceptional letter means the compact form only with its index
            return m[1].matched || m[4].matched;
        }
        if (std::regex_match(g, lorentz)) return true;
        static const std::vector<std::string> coincide{"sl(2,r)", "su(1,1)", "sp(1,r)", "sl(2,c)", "sp(1,1)", "su*(4)", "sl(2,h)"};
        return std::find(coincide.begin(), coincide.end(), g) != coincide.end();
    }
    throw UnknownPair("unknown example id: " + example_id);
}

}  // namespace orbitkit
