#include <regex>

#include "doctest.h"
#include "orbitkit/catalog.hpp"
#include "orbitkit/errors.hpp"
#include "orbitkit/subalgebra_types.hpp"

using namespace orbitkit;

namespace {

ReductiveType T(const char* s) { return parse_reductive_type(s); }

// Maximal compact subalgebra by name, from the standard list of classical
// real forms; independent of the Vogan-diagram machinery.
std::optional<std::string> compact_part(const std::string& id) {
    std::smatch m;
    static const std::regex two(R"(^(so|su|sp)\((\d+),(\d+)\)$)"), one(R"(^(sl|sp)\((\d+),R\)$)"), star(R"(^(su|so)\*\((\d+)\)$)");
    if (std::regex_match(id, m, two)) {
        const std::string p = m[2], q = m[3];
        if (m[1] == "so") return "so(" + p + ")+so(" + q + ")";
        if (m[1] == "su") return "su(" + p + ")+su(" + q + ")+r";
        return "sp(" + p + ")+sp(" + q + ")";
    }
    if (std::regex_match(id, m, one)) return m[1] == "sl" ? "so(" + m[2].str() + ")" : "u(" + m[2].str() + ")";
    if (std::regex_match(id, m, star)) {
        const int n = std::stoi(m[2]);
        return m[1] == "su" ? "sp(" + std::to_string(n / 2) + ")" : "u(" + std::to_string(n / 2) + ")";
    }
    return std::nullopt;
}

}  // namespace

TEST_CASE("names round-trip and low ranks fold") {
    for (const char* s : {"D5+T1", "A1+A1", "C3+A1", "B4", "E7+T1", "A2+A2+T1"}) CHECK(T(s).name() == s);
    CHECK(T("0").name() == "0");
    CHECK(T("T2").name() == "T2");
    CHECK(T("C2") == T("B2"));
    CHECK(T("D3") == T("A3"));
    CHECK(T("D2") == T("A1+A1"));
    CHECK(T("B1") == T("A1"));
    CHECK(T("C1") == T("A1"));
    CHECK(T("A1+C2").name() == "B2+A1");
    CHECK(T("D5+T1").dimension() == 46);
    CHECK(T("F4").dimension() == 52);
    CHECK(T("F4").simple_type());
    CHECK_FALSE(T("A1+T1").semisimple());
    CHECK_THROWS_AS(T("Q3"), ParseError);
}

TEST_CASE("complexification of real algebra names") {
    CHECK(complexified_type("sp(1,R)+sp(2,R)") == T("C2+A1"));
    CHECK(complexified_type("so(5,4)") == T("B4"));
    CHECK(complexified_type("u(2)") == T("A1+T1"));
    CHECK(complexified_type("f4(-20)") == T("F4"));
    CHECK(complexified_type("e6(-14)") == T("E6"));
    CHECK(complexified_type("sl(3,H)") == T("A5"));
    CHECK(complexified_type("su*(6)") == T("A5"));
    CHECK(complexified_type("gl_3") == T("A2+T1"));
    CHECK(complexified_type("spin_7") == T("B3"));
    CHECK(complexified_type("so(3,1)") == T("A1+A1"));
    CHECK(complexified_type("so(2)") == T("T1"));
    CHECK(complexified_type("so*(8)") == T("D4"));
    CHECK(complexified_type("so(2,2)+so(1)") == T("A1+A1"));
    CHECK(complexified_type("SO(4, 3)") == T("B3"));
    CHECK(complexified_type("b4+t1") == T("B4+T1"));
    CHECK_THROWS_AS(complexified_type("xx(3)"), ParseError);
    CHECK_THROWS_AS(complexified_type("sl(2,C)"), ParseError);
    CHECK_THROWS_AS(complexified_type("e9"), ParseError);
}

TEST_CASE("types identified from root systems") {
    for (std::string t : {"A1", "A4", "B2", "B3", "C3", "C4", "D4", "D5", "G2", "F4", "E6"}) {
        CAPTURE(t);
        RootSystem rs(CartanType::parse(t));
        std::vector<Vector> roots, padded;
        for (const auto& r : rs.roots()) {
            Vector v(rs.rank());
            for (int i = 0; i < rs.rank(); ++i) v[i] = r.coords[i];
            roots.push_back(v);
            v.resize(rs.rank() + 2);
            padded.push_back(v);
        }
        CHECK(identify_from_roots(roots, rs.rank()) == make_reductive({rs.type()}, 0));
        // two extra Cartan directions with no roots become center
        const auto z = identify_from_roots(padded, rs.rank() + 2);
        CHECK(z.center_dim == 2);
        CHECK(z.simple == make_reductive({rs.type()}, 0).simple);
    }
}

TEST_CASE("k_C of catalog forms") {
    const Catalog cat = default_catalog();
    std::map<std::string, std::string> known = {{"sl(3,R)", "A1"},    {"su(2,1)", "A1+T1"},  {"sp(2,R)", "A1+T1"},
                                                {"g2(2)", "A1+A1"},    {"f4(4)", "C3+A1"},    {"f4(-20)", "B4"},
                                                {"e6(6)", "C4"},       {"e6(2)", "A5+A1"},    {"e6(-14)", "D5+T1"},
                                                {"e6(-26)", "F4"},     {"so*(8)", "A3+T1"},   {"su*(6)", "C3"}};
    std::size_t compared = 0;
    for (const auto& e : cat.entries) {
        if (e.spec.slow) continue;
        CAPTURE(e.spec.id);
        auto rf = realize(e.spec);
        const ReductiveType k = k_complex_type(*rf);
        CHECK(k.dimension() == rf->dim_k());
        if (known.count(e.spec.id)) CHECK(k.name() == known[e.spec.id]);
        if (auto c = compact_part(e.spec.id)) {
            CHECK(k == complexified_type(*c));
            ++compared;
        }
    }
    CHECK(compared >= 40);
}
