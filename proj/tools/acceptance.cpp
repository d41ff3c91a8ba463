// One PASS/FAIL line per acceptance criterion; exit status 0 iff all pass.
#include <fmt/format.h>

#include <chrono>
#include <functional>
#include <random>

#include "orbitkit/commands.hpp"
#include "orbitkit/errors.hpp"
#include "orbitkit/orbits.hpp"

using namespace orbitkit;

namespace {

struct Result {
    bool ok = true;
    std::string detail;
    void fail(const std::string& why) {
        if (ok) detail = why;
        ok = false;
    }
};

const Catalog& cat() {
    static const Catalog c = default_catalog();
    return c;
}

FormCache& forms() {
    static FormCache f(cat());
    return f;
}

std::vector<CartanType> types_in(int lo, int hi) {
    std::vector<CartanType> out;
    for (Family f : {Family::A, Family::B, Family::C, Family::D, Family::E, Family::F, Family::G})
        for (int r = lo; r <= hi; ++r)
            if (valid_cartan_type(f, r) && !(f == Family::B && r == 1) && !(f == Family::C && r == 1)) out.push_back({f, r});
    return out;
}

std::optional<int> ngc_table(const CartanType& t) {
    for (const auto& row : default_classification().ngc_rows)
        // classical rows hold for every rank, e.g. D3
        if (row.family == t.family && (row.a != 0 || t.rank == row.rank_lo)) return row.a * t.rank + row.b;
    return std::nullopt;
}

Result c1_ngc() {
    Result r;
    std::size_t n = 0;
    for (const auto& row : default_classification().ngc_rows)
        for (int rank = row.rank_lo; rank <= row.rank_hi; ++rank) {
            RootSystem rs(CartanType{row.family, rank});
            auto ch = n_complex_channels(rs);
            const int want = row.a * rank + row.b;
            if (static_cast<int>(ch.via_dual_coxeter) != want || ch.via_centralizer != ch.via_dual_coxeter)
                r.fail(fmt::format("{}: {} / {} vs table {}", rs.type().name(), ch.via_dual_coxeter, ch.via_centralizer, want));
            ++n;
        }
    if (n != 32) r.fail(fmt::format("{} types, expected 32", n));
    r.detail = r.ok ? fmt::format("{} types in 9 rows, both channels equal the table", n) : r.detail;
    return r;
}

Result c2_ng() {
    Result r;
    const std::vector<std::string> ids = {"su*(4)",  "su*(6)",  "so(4,1)", "so(5,1)", "so(6,1)", "so(7,1)", "so(8,1)",
                                          "sp(1,1)", "sp(2,1)", "sp(3,1)", "sp(2,2)", "f4(-20)", "e6(-26)"};
    for (const auto& id : ids) {
        const CatalogEntry* e = cat().find(id);
        if (!e) {
            r.fail(id + " missing from the catalog");
            continue;
        }
        const int want = ng_table_value(id)->second;
        const std::size_t got = n_real(*forms().get(*e));
        if (static_cast<int>(got) != want) r.fail(fmt::format("{}: {} vs {}", id, got, want));
    }
    if (r.ok) r.detail = fmt::format("{} forms match 4n-4, n-2, 2(m+n)-1, 11, 16", ids.size());
    return r;
}

Result c3_real() {
    Result r;
    std::size_t n = 0;
    for (const auto& e : cat().entries) {
        try {
            auto c = certify_real_symmetric(*forms().get(e));
            if (c.auxiliary_checks.size() != 3) r.fail(e.spec.id + ": missing sub-checks");
            ++n;
        } catch (const Error& ex) {
            r.fail(ex.what());
        }
    }
    if (n < 25) r.fail(fmt::format("only {} forms", n));
    if (r.ok) r.detail = fmt::format("{} forms, containment and three sub-checks each", n);
    return r;
}

Result c4_diag(bool slow) {
    Result r;
    const auto types = diag_types(slow);
    for (const auto& t : types) {
        try {
            auto c = certify_diag_tensor(RootSystem(t));
            if (c.lhs_dim != 1) r.fail(fmt::format("{}: lhs dim {}", t.name(), c.lhs_dim));
        } catch (const Error& ex) {
            r.fail(ex.what());
        }
    }
    if (r.ok) r.detail = fmt::format("{} types, lhs dimension 1 in each", types.size());
    return r;
}

Result c5_complex() {
    Result r;
    std::size_t n = 0, b = 0;
    for (const auto& e : cat().entries) {
        try {
            const auto rf = forms().get(e);
            auto c = certify_complex_symmetric(*rf);
            const bool listed = oko_v_match(e).has_value();
            if ((c.branch == "B") != listed) r.fail(e.spec.id + ": branch " + c.branch);
            if ((c.branch == "B") != (minimality_case(*rf) == 1)) r.fail(e.spec.id + ": branch disagrees with the case");
            b += c.branch == "B";
            ++n;
        } catch (const Error& ex) {
            r.fail(ex.what());
        }
    }
    if (r.ok) r.detail = fmt::format("{} forms, branch B for the {} listed ones", n, b);
    return r;
}

Result c6_audit() {
    Result r;
    std::size_t n = 0, t = 0;
    for (const auto& e : cat().entries) {
        try {
            auto a = audit_prop_oko(e, *forms().get(e));
            t += a.iii;
            ++n;
        } catch (const Error& ex) {
            r.fail(ex.what());
        }
    }
    if (n < 25) r.fail("too few forms");
    if (r.ok) r.detail = fmt::format("{} forms, zero violations ({} with all conditions true)", n, t);
    return r;
}

Result c7_structure() {
    Result r;
    std::size_t exhaustive = 0, random = 0;
    for (const auto& t : types_in(1, 4)) {
        const auto& L = chevalley_for(t)->algebra();
        for (std::size_t i = 0; i < L.dim(); ++i)
            for (std::size_t j = i + 1; j < L.dim(); ++j)
                for (std::size_t k = j + 1; k < L.dim(); ++k, ++exhaustive)
                    if (!L.jacobi_holds(i, j, k)) r.fail(fmt::format("Jacobi fails in {} at {},{},{}", t.name(), i, j, k));
    }
    std::mt19937 rng(20240611);
    for (const auto& t : types_in(5, 8)) {
        const auto& L = chevalley_for(t)->algebra();
        std::uniform_int_distribution<std::size_t> d(0, L.dim() - 1);
        for (int s = 0; s < 10000; ++s, ++random)
            if (!L.jacobi_holds(d(rng), d(rng), d(rng))) r.fail("Jacobi fails in " + t.name());
    }
    std::uniform_int_distribution<int> coef(-2, 2);
    auto rv = [&](std::size_t n) {
        Vector v(n);
        for (auto& x : v) x = coef(rng);
        return v;
    };
    std::size_t forms_checked = 0;
    for (const auto& e : cat().entries) {
        const auto rf = forms().get(e);
        const auto& L = rf->algebra();
        for (int s = 0; s < 5; ++s) {
            const Vector x = rv(L.dim()), y = rv(L.dim()), z = rv(L.dim());
            if (L.killing(L.bracket(x, y), z) + L.killing(y, L.bracket(x, z)) != 0) r.fail(e.spec.id + ": Killing not invariant");
            if (rf->theta_real(L.bracket(x, y)) != L.bracket(rf->theta_real(x), rf->theta_real(y)))
                r.fail(e.spec.id + ": theta not an automorphism");
        }
        const auto base = check_coisotropic_at(L, rf->k(), rf->x());
        for (int c : {2, -3}) {
            const auto s = check_coisotropic_at(L, rf->k(), scaled(rf->x(), c));
            if (s.holds != base.holds || s.lhs != base.lhs || s.rhs != base.rhs) r.fail(e.spec.id + ": not scale invariant");
        }
        ++forms_checked;
    }
    if (random < 10000) r.fail("too few random triples");
    if (r.ok)
        r.detail = fmt::format("{} exhaustive + {} random Jacobi triples; Killing, theta and scaling on {} forms", exhaustive,
                               random, forms_checked);
    return r;
}

Result c8_oracles() {
    Result r;
    std::size_t n = 0;
    for (const auto& e : cat().entries) {
        const auto rf = forms().get(e);
        const auto& t = rf->spec().type;
        const auto o = complex_minimal_orbit(rf->complex());
        const auto want = ngc_table(t);
        if (!want || o.dim != 2 * static_cast<std::size_t>(*want)) r.fail(e.spec.id + ": complex orbit dimension");
        const auto ro = real_minimal_orbit(*rf);
        const auto ng = ng_table_value(e.spec.id);
        const std::size_t real_want = ng ? ng->second : *want;
        if (ro.dim != 2 * real_want) r.fail(fmt::format("{}: real orbit dimension {} vs {}", e.spec.id, ro.dim, 2 * real_want));
        ++n;
    }
    std::size_t types = 0;
    for (const auto& t : types_in(1, 8)) {
        RootSystem rs(t);
        const int h = rs.dual_coxeter_number();
        if (rs.dual_coxeter_via_rho() != h || rs.dual_coxeter_via_nonorthogonal() != h) r.fail(t.name() + ": dual Coxeter channels");
        ++types;
    }
    if (r.ok) r.detail = fmt::format("{} forms; dual Coxeter channels agree on {} types of all nine families", n, types);
    return r;
}

Result c9_verdicts() {
    Result r;
    for (const char* p : {"sp(3,R):sp(1,R)+sp(2,R)", "sp(4,R):sp(2,R)+sp(2,R)", "so(5,2):so(4,2)", "so(4,4):so(4,3)",
                          "so(4,3):so(3,3)", "f4(4):so(5,4)", "e6(6):f4(4)", "e6(-14):f4(-20)"}) {
        try {
            auto v = verdict(forms(), p, RepClass::MinimalRep);
            if (v.conclusion != Conclusion::AlmostIrreducible || !v.certificate) r.fail(std::string(p) + ": " + to_string(v.conclusion));
        } catch (const Error& ex) {
            r.fail(ex.what());
        }
    }
    if (r.ok) r.detail = "all five example families give AlmostIrreducible with a certificate";
    return r;
}

}  // namespace

int main(int argc, char** argv) {
    const bool slow = argc > 1 && std::string(argv[1]) == "--slow";
    const std::vector<std::pair<std::string, std::function<Result()>>> criteria = {
        {"1 n(g_C) table", c1_ngc},
        {"2 n(g) table", c2_ng},
        {"3 real symmetric certificates", c3_real},
        {"4 diagonal tensor certificates", [slow] { return c4_diag(slow); }},
        {"5 complex symmetric certificates", c5_complex},
        {"6 equivalent-conditions audit", c6_audit},
        {"7 structural properties", c7_structure},
        {"8 orbit dimension oracles", c8_oracles},
        {"9 almost-irreducible verdicts", c9_verdicts},
    };
    int failed = 0;
    for (const auto& [name, fn] : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Result r;
        try {
            r = fn();
        } catch (const std::exception& e) {
            r.fail(std::string("exception: ") + e.what());
        }
        const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        fmt::print("{} criterion {}: {} ({:.1f} s)\n", r.ok ? "PASS" : "FAIL", name, r.detail, s);
        std::fflush(stdout);
        failed += !r.ok;
    }
    return failed == 0 ? 0 : 1;
}
