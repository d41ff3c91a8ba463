#include <fmt/format.h>

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "orbitkit/commands.hpp"
#include "orbitkit/errors.hpp"

using namespace orbitkit;

int main(int argc, char** argv) {
    CLI::App app{"orbitkit: minimal nilpotent orbits, real forms and coisotropic certificates"};
    app.require_subcommand(1);
    RunOptions opt;
    bool json = false, timings = false;
    std::string catalog_path, out_path;
    app.add_flag("--json", json, "print the JSON report");
    app.add_flag("--timings", timings, "include per-entry timings in JSON");
    app.add_option("--filter", opt.filter, "glob on entry ids (case-insensitive)");
    app.add_flag("--slow", opt.slow, "include E-series and other slow entries");
    app.add_option("--catalog", catalog_path, "catalog JSON (default: $ORBITKIT_CATALOG, then built-in)");
    app.add_option("--out", out_path, "also write the JSON report here");
    app.add_option("--jobs", opt.jobs, "worker threads (default: all cores)");

    std::string which, scope = "all", pair, rep = "minimal", example;
    std::vector<std::string> params;
    auto* table = app.add_subcommand("table", "recompute n(g_C) (ngc) or n(g) (ng) and compare with the stored table");
    table->add_option("which", which)->required()->check(CLI::IsMember({"ngc", "ng"}));
    auto* certify = app.add_subcommand("certify", "run coisotropic certificates");
    certify->add_option("scope", scope)->check(CLI::IsMember({"real", "diag", "symmetric", "all"}));
    auto* audit = app.add_subcommand("audit", "check that the equivalent conditions agree on every catalogued form");
    auto* verdict = app.add_subcommand("verdict", "bounded-multiplicity verdict for a symmetric pair");
    verdict->add_option("--pair", pair, "g:h, g:k, g:symmetric:<form id> or g:diag")->required();
    verdict->add_option("--rep", rep, "minimal | smallest-nc | smallest-nr | tensor");
    auto* fmult = app.add_subcommand("fmult", "stored finite-multiplicity conditions");
    fmult->add_option("example", example)->required();
    fmult->add_option("params", params, "name=value ...");
    for (auto* sub : {table, certify, audit, verdict, fmult}) sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        Catalog cat = catalog_path.empty() ? default_catalog() : load_catalog(catalog_path);
        RunReport r;
        if (*table) r = cmd_table(which, cat, opt);
        else if (*certify) r = cmd_certify(scope, cat, opt);
        else if (*audit) r = cmd_audit(cat, opt);
        else if (*verdict) r = cmd_verdict(pair, rep, cat);
        else {
            std::map<std::string, std::string> kv;
            for (const auto& p : params) {
                auto eq = p.find('=');
                if (eq == std::string::npos) throw ParseError("parameter must be name=value: " + p);
                kv[p.substr(0, eq)] = p.substr(eq + 1);
            }
            r = cmd_fmult(example, kv);
        }
        const std::string payload = to_json(r, timings).dump(2) + "\n";
        if (json) std::cout << payload;
        else std::cout << render_text(r);
        if (!out_path.empty()) {
            std::ofstream f(out_path);
            if (!f) throw Error("cannot write " + out_path);
            f << payload;
        }
        return r.exit_code();
    } catch (const std::exception& e) {
        std::cerr << "orbitkit: " << e.what() << "\n";
        return 2;
    }
}
