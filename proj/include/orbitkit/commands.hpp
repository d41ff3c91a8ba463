#pragma once

#include <map>
#include <string>

#include "orbitkit/report.hpp"

namespace orbitkit {

struct RunOptions {
    std::string filter = "*";  // glob on ids, case-insensitive
    bool slow = false;
    unsigned jobs = 0;         // 0: hardware concurrency
};

// Default diag scope; E6 and E7 join under slow.
std::vector<CartanType> diag_types(bool slow);

RunReport cmd_table(const std::string& which, const Catalog& cat, const RunOptions& opt);
RunReport cmd_certify(const std::string& scope, const Catalog& cat, const RunOptions& opt);
RunReport cmd_audit(const Catalog& cat, const RunOptions& opt);
RunReport cmd_verdict(const std::string& pair, const std::string& rep, const Catalog& cat);
RunReport cmd_fmult(const std::string& example_id, const std::map<std::string, std::string>& params);

// Aligned plain-text rendering of a report.
std::string render_text(const RunReport& r);

}  // namespace orbitkit
