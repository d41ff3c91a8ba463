#include "orbitkit/report.hpp"

#include "orbitkit/errors.hpp"

namespace orbitkit {

namespace {

template <class T>
T get(const ojson& j, const char* key) {
    if (!j.contains(key)) throw ParseError(std::string("report: missing key ") + key);
    try {
        return j.at(key).get<T>();
    } catch (const ojson::exception& e) {
        throw ParseError(std::string("report: bad value for ") + key + ": " + e.what());
    }
}

}  // namespace

ojson to_json(const CoisotropicCertificate& c) {
    ojson j;
    j["theorem_tag"] = to_string(c.theorem_tag);
    j["algebra_id"] = c.algebra_id;
    j["slice_point"] = c.slice_point_desc;
    j["branch"] = c.branch;
    j["lhs_dim"] = c.lhs_dim;
    j["rhs_dim"] = c.rhs_dim;
    j["containment_verified"] = c.containment_verified;
    ojson aux = ojson::array();
    for (const auto& a : c.auxiliary_checks) aux.push_back(ojson{{"name", a.name}, {"passed", a.passed}});
    j["auxiliary_checks"] = aux;
    j["note"] = c.note;
    return j;
}

CoisotropicCertificate certificate_from_json(const ojson& j) {
    CoisotropicCertificate c;
    c.theorem_tag = theorem_tag_from_string(get<std::string>(j, "theorem_tag"));
    c.algebra_id = get<std::string>(j, "algebra_id");
    c.slice_point_desc = get<std::string>(j, "slice_point");
    c.branch = get<std::string>(j, "branch");
    c.lhs_dim = get<std::size_t>(j, "lhs_dim");
    c.rhs_dim = get<std::size_t>(j, "rhs_dim");
    c.containment_verified = get<bool>(j, "containment_verified");
    for (const auto& a : get<ojson>(j, "auxiliary_checks"))
        c.auxiliary_checks.push_back({get<std::string>(a, "name"), get<bool>(a, "passed")});
    c.note = get<std::string>(j, "note");
    return c;
}

ojson to_json(const Verdict& v) {
    ojson j;
    j["pair_id"] = v.pair_id;
    j["representation_class"] = to_string(v.representation_class);
    j["conclusion"] = to_string(v.conclusion);
    j["theorems_used"] = v.theorems_used;
    j["certificate"] = v.certificate ? to_json(*v.certificate) : ojson(nullptr);
    j["reason"] = v.reason;
    j["g_complex"] = v.g_complex;
    j["h_complex"] = v.h_complex;
    j["matched_form"] = v.matched_form;
    return j;
}

Verdict verdict_from_json(const ojson& j) {
    Verdict v;
    v.pair_id = get<std::string>(j, "pair_id");
    v.representation_class = rep_class_from_string(get<std::string>(j, "representation_class"));
    v.conclusion = conclusion_from_string(get<std::string>(j, "conclusion"));
    v.theorems_used = get<std::vector<std::string>>(j, "theorems_used");
    if (!get<ojson>(j, "certificate").is_null()) v.certificate = certificate_from_json(j.at("certificate"));
    v.reason = get<std::string>(j, "reason");
    v.g_complex = get<std::string>(j, "g_complex");
    v.h_complex = get<std::string>(j, "h_complex");
    v.matched_form = get<std::string>(j, "matched_form");
    return v;
}

ojson to_json(const AuditReport& a) {
    ojson j;
    j["id"] = a.id;
    j["case"] = a.minimality_case;
    j["hermitian"] = a.hermitian;
    j["n_g"] = a.n_g;
    j["n_gc"] = a.n_gc;
    j["k_complex"] = a.k_type;
    j["i"] = "implied";
    j["ii"] = a.ii;
    j["iii"] = a.iii;
    j["iv"] = a.iv;
    j["v"] = a.v;
    j["vi"] = a.vi;
    j["v_match"] = a.v_match;
    j["vi_match"] = a.vi_match;
    return j;
}

AuditReport audit_from_json(const ojson& j) {
    AuditReport a;
    a.id = get<std::string>(j, "id");
    a.minimality_case = get<int>(j, "case");
    a.hermitian = get<bool>(j, "hermitian");
    a.n_g = get<std::size_t>(j, "n_g");
    a.n_gc = get<std::size_t>(j, "n_gc");
    a.k_type = get<std::string>(j, "k_complex");
    a.ii = get<bool>(j, "ii");
    a.iii = get<bool>(j, "iii");
    a.iv = get<bool>(j, "iv");
    a.v = get<bool>(j, "v");
    a.vi = get<bool>(j, "vi");
    a.v_match = get<std::string>(j, "v_match");
    a.vi_match = get<std::string>(j, "vi_match");
    return a;
}

ojson to_json(const RunReport& r, bool with_timings) {
    ojson j;
    j["schema"] = "orbitkit-report/1";
    j["command"] = r.command;
    ojson in = ojson::object();
    for (const auto& [k, v] : r.inputs) in[k] = v;
    j["inputs"] = in;
    ojson outs = ojson::array();
    for (const auto& o : r.outcomes) {
        ojson e;
        e["id"] = o.id;
        e["status"] = o.status;
        if (with_timings) e["timing_ms"] = o.timing_ms;
        e["data"] = o.data;
        outs.push_back(e);
    }
    j["outcomes"] = outs;
    ojson fails = ojson::array();
    for (const auto& f : r.failures) fails.push_back(ojson{{"id", f.id}, {"diagnostic", f.diagnostic}});
    j["failures"] = fails;
    j["toolkit_version"] = r.toolkit_version;
    j["catalog_version"] = r.catalog_version;
    return j;
}

RunReport run_report_from_json(const ojson& j) {
    if (get<std::string>(j, "schema") != "orbitkit-report/1") throw ParseError("report: unsupported schema");
    RunReport r;
    r.command = get<std::string>(j, "command");
    r.inputs = get<std::map<std::string, std::string>>(j, "inputs");
    for (const auto& e : get<ojson>(j, "outcomes")) {
        Outcome o;
        o.id = get<std::string>(e, "id");
        o.status = get<std::string>(e, "status");
        o.timing_ms = e.value("timing_ms", 0.0);
        o.data = get<ojson>(e, "data");
        r.outcomes.push_back(o);
    }
    for (const auto& f : get<ojson>(j, "failures"))
        r.failures.push_back({get<std::string>(f, "id"), get<std::string>(f, "diagnostic")});
    r.toolkit_version = get<std::string>(j, "toolkit_version");
    r.catalog_version = get<std::string>(j, "catalog_version");
    return r;
}

}  // namespace orbitkit
