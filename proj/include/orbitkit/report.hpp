#pragma once

#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "orbitkit/coiso.hpp"
#include "orbitkit/criteria.hpp"

namespace orbitkit {

using ojson = nlohmann::ordered_json;

// Fixed key order so equal objects serialize to equal bytes.
ojson to_json(const CoisotropicCertificate& c);
CoisotropicCertificate certificate_from_json(const ojson& j);
ojson to_json(const Verdict& v);
Verdict verdict_from_json(const ojson& j);
ojson to_json(const AuditReport& a);
AuditReport audit_from_json(const ojson& j);

struct Outcome {
    std::string id;
    std::string status;  // "pass" / "fail"
    double timing_ms = 0;
    ojson data = ojson::object();
};

struct Failure {
    std::string id;
    std::string diagnostic;
};

struct RunReport {
    std::string command;
    std::map<std::string, std::string> inputs;
    std::vector<Outcome> outcomes;
    std::vector<Failure> failures;
    std::string toolkit_version = ORBITKIT_VERSION;
    std::string catalog_version;

    bool ok() const { return failures.empty(); }
    int exit_code() const { return ok() ? 0 : 1; }
};

// Timings are left out unless asked for, keeping the payload reproducible.
ojson to_json(const RunReport& r, bool with_timings = false);
RunReport run_report_from_json(const ojson& j);

}  // namespace orbitkit
