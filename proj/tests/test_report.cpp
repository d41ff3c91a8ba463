#include "doctest.h"
#include "orbitkit/commands.hpp"
#include "orbitkit/errors.hpp"
#include "orbitkit/report.hpp"

using namespace orbitkit;

namespace {

const Catalog& cat() {
    static const Catalog c = default_catalog();
    return c;
}

}  // namespace

TEST_CASE("certificates and verdicts round-trip through JSON") {
    FormCache forms(cat());
    for (const char* p : {"sp(3,R):sp(1,R)+sp(2,R)", "sl(3,R):diag", "sp(2,1):k"}) {
        CAPTURE(p);
        for (auto r : {RepClass::MinimalRep, RepClass::SmallestGK_nR, RepClass::TensorOfMinimals}) {
            const Verdict v = verdict(forms, p, r);
            const ojson j = to_json(v);
            CHECK(verdict_from_json(j) == v);
            CHECK(verdict_from_json(ojson::parse(j.dump())) == v);
            if (v.certificate) CHECK(certificate_from_json(to_json(*v.certificate)) == *v.certificate);
        }
    }
    auto rf = forms.get(*cat().find("so(4,1)"));
    const auto c = certify_real_symmetric(*rf);
    CHECK(certificate_from_json(ojson::parse(to_json(c).dump(2))) == c);
    const ojson j = to_json(c);
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
    CHECK(keys == std::vector<std::string>{"theorem_tag", "algebra_id", "slice_point", "branch", "lhs_dim", "rhs_dim",
                                           "containment_verified", "auxiliary_checks", "note"});
}

TEST_CASE("audit reports round-trip") {
    FormCache forms(cat());
    for (const char* id : {"sp(1,1)", "su(2,1)"}) {
        const auto& e = *cat().find(id);
        const AuditReport a = audit_prop_oko(e, *forms.get(e));
        const AuditReport b = audit_from_json(ojson::parse(to_json(a).dump()));
        CHECK(b.id == a.id);
        CHECK(b.k_type == a.k_type);
        CHECK(b.iii == a.iii);
        CHECK(b.vi_match == a.vi_match);
        CHECK(to_json(b) == to_json(a));
    }
}

TEST_CASE("run reports are deterministic without timings") {
    RunOptions opt;
    opt.filter = "so(4,1)";
    opt.jobs = 2;
    const RunReport a = cmd_certify("all", cat(), opt), b = cmd_certify("all", cat(), opt);
    CHECK(a.ok());
    CHECK(a.outcomes.size() == 2);
    CHECK(to_json(a).dump() == to_json(b).dump());
    CHECK_FALSE(to_json(a)["outcomes"][0].contains("timing_ms"));
    CHECK(to_json(a, true)["outcomes"][0].contains("timing_ms"));
    const RunReport back = run_report_from_json(to_json(a));
    CHECK(to_json(back).dump() == to_json(a).dump());
    CHECK(back.exit_code() == 0);
    CHECK_THROWS_AS(run_report_from_json(ojson{{"schema", "x"}}), ParseError);
}

TEST_CASE("command failures set the exit code") {
    const RunReport v = cmd_verdict("nothing:k", "minimal", cat());
    CHECK_FALSE(v.ok());
    CHECK(v.exit_code() == 1);
    CHECK(v.failures.front().diagnostic.find("not in the catalog") != std::string::npos);
    RunOptions opt;
    opt.filter = "no-such-form";
    CHECK_FALSE(cmd_certify("real", cat(), opt).ok());
    CHECK_THROWS_AS(cmd_table("other", cat(), opt), ParseError);
    CHECK(cmd_fmult("sl_so", {{"p", "1"}, {"q", "1"}}).ok());
    CHECK_FALSE(cmd_fmult("missing", {}).ok());
    const std::string text = render_text(v);
    CHECK(text.find("FAILED") != std::string::npos);
}

TEST_CASE("filter and slow gating in certify") {
    RunOptions opt;
    opt.filter = "e6*";
    CHECK_FALSE(cmd_certify("real", cat(), opt).ok());  // E-series needs --slow
    opt.filter = "g2*";
    const RunReport r = cmd_certify("all", cat(), opt);
    CHECK(r.ok());
    CHECK(r.outcomes.size() == 3);
    opt.filter = "A1";
    CHECK(cmd_certify("diag", cat(), opt).outcomes.size() == 1);
    CHECK(diag_types(false).size() == 11);
    CHECK(diag_types(true).size() == 13);
}
