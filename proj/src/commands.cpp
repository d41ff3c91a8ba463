#include "orbitkit/commands.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <thread>

#include "orbitkit/errors.hpp"
#include "orbitkit/orbits.hpp"

namespace orbitkit {

namespace {

struct TaskResult {
    Outcome outcome;
    std::string failure;  // empty on success
};

using Task = std::function<TaskResult()>;

std::string lower(std::string s) {
    for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return s;
}

bool selected(const RunOptions& opt, const std::string& id) { return glob_match(lower(opt.filter), lower(id)); }

// Runs fn, timing it and turning library errors into a failed outcome.
TaskResult timed(const std::string& id, const std::function<ojson()>& fn) {
    TaskResult r;
    r.outcome.id = id;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        r.outcome.data = fn();
        r.outcome.status = "pass";
    } catch (const std::exception& e) {
        r.outcome.status = "fail";
        r.outcome.data = ojson{{"summary", e.what()}};
        r.failure = e.what();
    }
    r.outcome.timing_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

void run_tasks(RunReport& rep, const std::vector<Task>& tasks, unsigned jobs) {
    std::vector<TaskResult> results(tasks.size());
    if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
    jobs = std::min<unsigned>(jobs, std::max<std::size_t>(1, tasks.size()));
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next++) < tasks.size();) results[i] = tasks[i]();
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    for (auto& r : results) {
        if (!r.failure.empty()) rep.failures.push_back({r.outcome.id, r.failure});
        rep.outcomes.push_back(std::move(r.outcome));
    }
}

RunReport start(const std::string& command, const Catalog* cat) {
    RunReport r;
    r.command = command;
    if (cat) r.catalog_version = cat->version;
    return r;
}

bool e_series_allowed(const CatalogEntry& e, const RunOptions& opt) {
    return opt.slow || (e.spec.type.family != Family::E && !e.spec.slow);
}

std::string checks_summary(const CoisotropicCertificate& c) {
    std::string s = fmt::format("lhs {} rhs {}", c.lhs_dim, c.rhs_dim);
    if (!c.branch.empty()) s += " branch " + c.branch;
    for (const auto& a : c.auxiliary_checks) s += " " + a.name + (a.passed ? "+" : "-");
    return s;
}

ojson cert_data(const CoisotropicCertificate& c) {
    ojson j = to_json(c);
    j["summary"] = checks_summary(c);
    return j;
}

}  // namespace

std::vector<CartanType> diag_types(bool slow) {
    std::vector<CartanType> out;
    for (int r = 1; r <= 4; ++r) out.push_back({Family::A, r});
    for (int r = 2; r <= 3; ++r) out.push_back({Family::B, r});
    for (int r = 2; r <= 3; ++r) out.push_back({Family::C, r});
    out.push_back({Family::D, 4});
    out.push_back({Family::G, 2});
    out.push_back({Family::F, 4});
    if (slow) {
        out.push_back({Family::E, 6});
        out.push_back({Family::E, 7});
    }
    return out;
}

RunReport cmd_table(const std::string& which, const Catalog& cat, const RunOptions& opt) {
    RunReport rep = start("table " + which, &cat);
    rep.inputs["which"] = which;
    const auto& cls = default_classification();
    std::vector<Task> tasks;
    if (which == "ngc") {
        for (const auto& row : cls.ngc_rows) {
            const std::string id = std::string(1, family_letter(row.family)) + ": " + row.formula;
            tasks.push_back([&cls, row, id] {
                return timed(id, [&] {
                    ojson ranks = ojson::array();
                    std::vector<std::string> bad;
                    std::string vals;
                    for (int r = row.rank_lo; r <= row.rank_hi; ++r) {
                        if (!valid_cartan_type(row.family, r)) continue;
                        RootSystem rs(CartanType{row.family, r});
                        const auto ch = n_complex_channels(rs);
                        const auto orbit = complex_minimal_orbit(*chevalley_for(rs.type()));
                        const int table = row.a * r + row.b;
                        const bool ok = static_cast<int>(ch.via_dual_coxeter) == table &&
                                        ch.via_centralizer == ch.via_dual_coxeter && orbit.dim == 2 * ch.via_centralizer;
                        if (!ok) bad.push_back(rs.type().name());
                        vals += fmt::format("{}{}={}", vals.empty() ? "" : " ", rs.type().name(), ch.via_centralizer);
                        ranks.push_back(ojson{{"type", rs.type().name()},
                                              {"table", table},
                                              {"dual_coxeter", ch.via_dual_coxeter},
                                              {"centralizer", ch.via_centralizer},
                                              {"orbit_dim", orbit.dim}});
                    }
                    if (!bad.empty()) throw ExpectationMismatch("n(g_C) differs from the table at " + fmt::format("{}", fmt::join(bad, ", ")));
                    return ojson{{"family", std::string(1, family_letter(row.family))},
                                 {"formula", row.formula},
                                 {"cite", cls.cites.at("ngc_table")},
                                 {"ranks", ranks},
                                 {"summary", vals}};
                });
            });
        }
    } else if (which == "ng") {
        for (const auto& row : cls.ng_rows) {
            std::vector<const CatalogEntry*> forms;
            for (const auto& e : cat.entries) {
                auto v = ng_table_value(e.spec.id);
                if (v && v->first == row.id) forms.push_back(&e);
            }
            tasks.push_back([&cls, row, forms] {
                return timed(row.algebra + ": " + row.formula, [&] {
                    if (forms.empty()) throw CatalogError("no catalogued form for the row " + row.algebra);
                    ojson list = ojson::array();
                    std::string vals;
                    for (const CatalogEntry* e : forms) {
                        const auto rf = realize(e->spec);
                        const int table = ng_table_value(e->spec.id)->second;
                        const std::size_t ng = n_real(*rf), ngc = n_complex(rf->complex().roots());
                        if (static_cast<int>(ng) != table)
                            throw ExpectationMismatch(fmt::format("{}: n(g) = {}, table gives {}", e->spec.id, ng, table));
                        if (ng <= ngc || minimality_case(*rf) != 1)
                            throw ExpectationMismatch(e->spec.id + ": expected case 1 with n(g) > n(g_C)");
                        vals += fmt::format("{}{}={}", vals.empty() ? "" : " ", e->spec.id, ng);
                        list.push_back(ojson{{"id", e->spec.id}, {"table", table}, {"computed", ng}, {"n_gc", ngc}});
                    }
                    return ojson{{"row", row.id}, {"algebra", row.algebra}, {"formula", row.formula},
                                 {"cite", cls.cites.at("ng_table")}, {"forms", list}, {"summary", vals}};
                });
            });
        }
    } else {
        throw ParseError("table must be ngc or ng, got " + which);
    }
    run_tasks(rep, tasks, opt.jobs);
    return rep;
}

RunReport cmd_certify(const std::string& scope, const Catalog& cat, const RunOptions& opt) {
    if (scope != "real" && scope != "diag" && scope != "symmetric" && scope != "all")
        throw ParseError("certify scope must be real, diag, symmetric or all");
    RunReport rep = start("certify " + scope, &cat);
    rep.inputs["scope"] = scope;
    rep.inputs["filter"] = opt.filter;
    rep.inputs["slow"] = opt.slow ? "true" : "false";
    auto forms = std::make_shared<FormCache>(cat);
    std::vector<Task> tasks;
    const bool real = scope == "real" || scope == "all", sym = scope == "symmetric" || scope == "all";
    for (const auto& e : cat.entries) {
        if (!e_series_allowed(e, opt) || !selected(opt, e.spec.id)) continue;
        if (real)
            tasks.push_back([&e, forms] {
                return timed("real:" + e.spec.id, [&] { return cert_data(certify_real_symmetric(*forms->get(e))); });
            });
        if (sym)
            tasks.push_back([&e, forms] {
                return timed("symmetric:" + e.spec.id, [&] {
                    const auto rf = forms->get(e);
                    auto c = certify_complex_symmetric(*rf);
                    // branch B exactly for the listed forms
                    const bool listed = oko_v_match(e).has_value();
                    if ((c.branch == "B") != listed)
                        throw CertificationFailed(e.spec.id + ": branch " + c.branch + " but list membership is " +
                                                  (listed ? "true" : "false"));
                    return cert_data(c);
                });
            });
    }
    if (scope == "diag" || scope == "all")
        for (const auto& t : diag_types(opt.slow)) {
            if (!selected(opt, t.name())) continue;
            tasks.push_back([t] {
                return timed("diag:" + t.name(), [&] {
                    auto c = certify_diag_tensor(RootSystem(t));
                    if (c.lhs_dim != 1) throw CertificationFailed(t.name() + ": lhs dimension is not 1");
                    return cert_data(c);
                });
            });
        }
    if (tasks.empty()) rep.failures.push_back({"certify", "no entries match filter " + opt.filter});
    run_tasks(rep, tasks, opt.jobs);
    return rep;
}

RunReport cmd_audit(const Catalog& cat, const RunOptions& opt) {
    RunReport rep = start("audit", &cat);
    rep.inputs["filter"] = opt.filter;
    rep.inputs["slow"] = opt.slow ? "true" : "false";
    auto forms = std::make_shared<FormCache>(cat);
    std::vector<Task> tasks;
    for (const auto& e : cat.entries) {
        if ((e.spec.slow && !opt.slow) || !selected(opt, e.spec.id)) continue;
        tasks.push_back([&e, forms] {
            return timed(e.spec.id, [&] {
                const auto a = audit_prop_oko(e, *forms->get(e));
                ojson j = to_json(a);
                j["summary"] = fmt::format("case {} k_C {} all {}{}", a.minimality_case, a.k_type, a.iii ? "true" : "false",
                                           a.v ? " (" + a.v_match + ", " + a.vi_match + ")" : "");
                return j;
            });
        });
    }
    if (tasks.empty()) rep.failures.push_back({"audit", "no entries match filter " + opt.filter});
    run_tasks(rep, tasks, opt.jobs);
    return rep;
}

RunReport cmd_verdict(const std::string& pair, const std::string& rep_name, const Catalog& cat) {
    RunReport rep = start("verdict", &cat);
    rep.inputs["pair"] = pair;
    rep.inputs["rep"] = rep_name;
    FormCache forms(cat);
    auto r = timed(pair, [&] {
        const Verdict v = verdict(forms, pair, rep_class_from_string(rep_name));
        ojson j = to_json(v);
        j["summary"] = to_string(v.conclusion) + (v.theorems_used.empty() ? "" : " [" + fmt::format("{}", fmt::join(v.theorems_used, ", ")) + "]") +
                       (v.reason.empty() ? "" : " " + v.reason);
        return j;
    });
    if (!r.failure.empty()) rep.failures.push_back({r.outcome.id, r.failure});
    rep.outcomes.push_back(std::move(r.outcome));
    return rep;
}

RunReport cmd_fmult(const std::string& example_id, const std::map<std::string, std::string>& params) {
    RunReport rep = start("fmult", nullptr);
    rep.catalog_version = default_classification().version;
    rep.inputs["example"] = example_id;
    for (const auto& [k, v] : params) rep.inputs["param." + k] = v;
    auto r = timed(example_id, [&] {
        const bool b = query_fmult(example_id, params);
        std::string cond;
        for (const auto& ex : default_classification().fmult_examples)
            if (ex.id == example_id) cond = ex.condition;
        return ojson{{"result", b}, {"condition", cond}, {"summary", std::string(b ? "finite" : "not finite") + " (iff " + cond + ")"}};
    });
    if (!r.failure.empty()) rep.failures.push_back({r.outcome.id, r.failure});
    rep.outcomes.push_back(std::move(r.outcome));
    return rep;
}

std::string render_text(const RunReport& r) {
    std::size_t w = 4;
    for (const auto& o : r.outcomes) w = std::max(w, o.id.size());
    std::string out = fmt::format("orbitkit {}  (toolkit {}, data {})\n", r.command, r.toolkit_version, r.catalog_version);
    for (const auto& o : r.outcomes) {
        const std::string summary = o.data.contains("summary") ? o.data.at("summary").get<std::string>() : "";
        out += fmt::format("  {:<{}}  {:<4}  {}\n", o.id, w, o.status, summary);
    }
    for (const auto& f : r.failures) out += fmt::format("FAILED {}: {}\n", f.id, f.diagnostic);
    std::size_t passed = 0;
    for (const auto& o : r.outcomes) passed += o.status == "pass";
    out += fmt::format("{} passed, {} failed\n", passed, r.failures.size());
    return out;
}

}  // namespace orbitkit
