#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "orbitkit/catalog.hpp"
#include "orbitkit/coiso.hpp"
#include "orbitkit/subalgebra_types.hpp"

namespace orbitkit {

struct NgcRow {
    Family family;
    std::string formula;
    int a = 0, b = 0;  // value = a * rank + b
    int rank_lo = 0, rank_hi = 0;
    bool slow = false;
};

struct NgRow {
    std::string id;       // su_star, so_n1, sp_mn, f4_m20, e6_m26
    std::string algebra;
    std::string formula;
};

struct TextEntry {
    std::string id;
    std::string text;
};

struct IrrPair {
    std::string id;
    std::string g, h;
    std::vector<std::string> conditions;
};

struct FmultExample {
    std::string id;
    std::string pair;
    std::vector<std::string> params;
    std::string condition;
};

struct ClassificationTable {
    std::string version;
    std::map<std::string, std::string> cites;  // table name -> citation key
    std::vector<NgcRow> ngc_rows;
    std::vector<NgRow> ng_rows;
    std::vector<std::pair<std::string, std::string>> bb_pairs;
    std::vector<TextEntry> oko_v_forms;
    std::vector<TextEntry> oko_vi_pairs;
    std::vector<IrrPair> irr_pairs;
    std::vector<FmultExample> fmult_examples;
    std::map<std::string, std::string> theorems;  // citation key -> statement
};

ClassificationTable parse_classification(const std::string& json_text);
const ClassificationTable& default_classification();

// Stored value of n(g) for a form in the five-row table, with the row id.
std::optional<std::pair<std::string, int>> ng_table_value(const std::string& form_name);
// Membership in the real-form list of the equivalent conditions.
std::optional<std::string> oko_v_match(const CatalogEntry& e);
// Membership of (g_C, k_C) in the complex-pair list.
std::optional<std::string> oko_vi_match(const CartanType& g, const ReductiveType& k);
// Theorem-1.8 style example families; returns the family id.
std::optional<std::string> irr_match(const std::string& g, const std::string& h);

// Realizations shared by audit, verdict and certification. Thread-safe.
class FormCache {
public:
    explicit FormCache(const Catalog& cat) : cat_(cat) {}
    std::shared_ptr<const RealForm> get(const CatalogEntry& e);
    const Catalog& catalog() const { return cat_; }

private:
    struct Slot {
        std::once_flag once;
        std::shared_ptr<const RealForm> form;
    };
    const Catalog& cat_;
    std::mutex mu_;
    std::map<std::string, std::shared_ptr<Slot>> slots_;
};

struct AuditReport {
    std::string id;
    int minimality_case = 0;
    bool hermitian = false;
    std::size_t n_g = 0, n_gc = 0;
    std::string k_type;
    bool ii = false;    // identified with (iii)
    bool iii = false;   // theta beta != -beta
    bool iv = false;    // n(g) > n(g_C)
    bool v = false;     // listed real form
    bool vi = false;    // listed complex pair
    std::string v_match, vi_match;
};

// Evaluates the conditions independently; EquivalenceViolation if they differ.
AuditReport audit_prop_oko(const CatalogEntry& e, const RealForm& rf);

enum class RepClass { MinimalRep, SmallestGK_nC, SmallestGK_nR, TensorOfMinimals };
enum class Conclusion { BoundedMultiplicity, AlmostIrreducible, NotCovered };
std::string to_string(RepClass r);
std::string to_string(Conclusion c);
RepClass rep_class_from_string(const std::string& s);  // also minimal, smallest-nc, smallest-nr, tensor
Conclusion conclusion_from_string(const std::string& s);

struct Verdict {
    std::string pair_id;
    RepClass representation_class = RepClass::MinimalRep;
    Conclusion conclusion = Conclusion::NotCovered;
    std::vector<std::string> theorems_used;  // citation keys
    std::optional<CoisotropicCertificate> certificate;
    std::string reason;
    std::string g_complex, h_complex;  // reductive types
    std::string matched_form;           // catalog form whose k_C matches h_C
    friend bool operator==(const Verdict&, const Verdict&) = default;
};

// pair: "g:h" with h a real algebra name, "symmetric:<name>", "k" or "diag".
// Throws UnknownPair when g is not in the catalog or h is not a symmetric
// subalgebra of any catalogued involution.
Verdict verdict(FormCache& forms, const std::string& pair, RepClass rep);

// Stored iff-conditions; params by name. Throws UnknownPair for other ids.
bool query_fmult(const std::string& example_id, const std::map<std::string, std::string>& params);

}  // namespace orbitkit
