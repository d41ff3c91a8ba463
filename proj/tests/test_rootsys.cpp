#include <algorithm>
#include <set>

#include "doctest.h"
#include "orbitkit/rootsys.hpp"

using namespace orbitkit;

namespace {

std::vector<CartanType> all_types(int max_rank) {
    std::vector<CartanType> out;
    for (int n = 1; n <= max_rank; ++n) out.push_back({Family::A, n});
    for (int n = 2; n <= max_rank; ++n) out.push_back({Family::B, n});
    for (int n = 2; n <= max_rank; ++n) out.push_back({Family::C, n});
    for (int n = 3; n <= max_rank; ++n) out.push_back({Family::D, n});
    for (int n = 6; n <= std::min(8, max_rank); ++n) out.push_back({Family::E, n});
    if (max_rank >= 4) out.push_back({Family::F, 4});
    out.push_back({Family::G, 2});
    return out;
}

int expected_positive(CartanType t) {
    const int n = t.rank;
    switch (t.family) {
        case Family::A: return n * (n + 1) / 2;
        case Family::B:
        case Family::C: return n * n;
        case Family::D: return n * (n - 1);
        case Family::E: return n == 6 ? 36 : n == 7 ? 63 : 120;
        case Family::F: return 24;
        case Family::G: return 6;
    }
    return -1;
}

int expected_dual_coxeter(CartanType t) {
    const int n = t.rank;
    switch (t.family) {
        case Family::A: return n + 1;
        case Family::B: return 2 * n - 1;
        case Family::C: return n + 1;
        case Family::D: return 2 * n - 2;
        case Family::E: return n == 6 ? 12 : n == 7 ? 18 : 30;
        case Family::F: return 9;
        case Family::G: return 4;
    }
    return -1;
}

}  // namespace

TEST_CASE("parsing Cartan types") {
    CHECK(CartanType::parse("A3").name() == "A3");
    CHECK(CartanType::parse(" e8 ").name() == "E8");
    CHECK(CartanType::parse("g2") == CartanType{Family::G, 2});
    for (const char* bad : {"A0", "E9", "B1", "X3", "A", "F5", "G3", "D2", "C1", "A-1", "A3x"})
        CHECK_THROWS_AS(CartanType::parse(bad), ParseError);
}

TEST_CASE("positive root counts and highest roots") {
    for (auto t : all_types(8)) {
        CAPTURE(t.name());
        RootSystem rs(t);
        CHECK(static_cast<int>(rs.num_positive()) == expected_positive(t));
        CHECK(rs.roots().size() == 2 * rs.num_positive());
        CHECK(rs.positive_roots().back().is_long);
    }
    CHECK(RootSystem({Family::E, 8}).positive_roots().back().coords == RootCoords{2, 3, 4, 6, 5, 4, 3, 2});
    CHECK(RootSystem({Family::E, 7}).positive_roots().back().coords == RootCoords{2, 2, 3, 4, 3, 2, 1});
    CHECK(RootSystem({Family::E, 6}).positive_roots().back().coords == RootCoords{1, 2, 2, 3, 2, 1});
    CHECK(RootSystem({Family::F, 4}).positive_roots().back().coords == RootCoords{2, 3, 4, 2});
    CHECK(RootSystem({Family::G, 2}).positive_roots().back().coords == RootCoords{3, 2});
    CHECK(RootSystem({Family::B, 4}).positive_roots().back().coords == RootCoords{1, 2, 2, 2});
    CHECK(RootSystem({Family::C, 4}).positive_roots().back().coords == RootCoords{2, 2, 2, 1});
    CHECK(RootSystem({Family::D, 5}).positive_roots().back().coords == RootCoords{1, 2, 2, 1, 1});
}

TEST_CASE("string enumeration matches reflection closure") {
    for (auto t : all_types(8)) {
        CAPTURE(t.name());
        RootSystem rs(t);
        std::set<RootCoords> a;
        for (const auto& r : rs.positive_roots()) a.insert(r.coords);
        auto b = positive_roots_by_reflection(rs);
        CHECK(a == std::set<RootCoords>(b.begin(), b.end()));
    }
}

TEST_CASE("ordering: height first, alpha_1 before alpha_2") {
    RootSystem rs({Family::A, 3});
    CHECK(rs.positive_roots()[0].coords == RootCoords{1, 0, 0});
    CHECK(rs.positive_roots()[1].coords == RootCoords{0, 1, 0});
    for (std::size_t k = 1; k < rs.num_positive(); ++k)
        CHECK(rs.positive_roots()[k - 1].height <= rs.positive_roots()[k].height);
}

TEST_CASE("dual Coxeter numbers, two formulas") {
    for (auto t : all_types(8)) {
        CAPTURE(t.name());
        RootSystem rs(t);
        CHECK(rs.dual_coxeter_via_rho() == expected_dual_coxeter(t));
        CHECK(rs.dual_coxeter_via_nonorthogonal() == expected_dual_coxeter(t));
        CHECK(rs.dual_coxeter_number() == expected_dual_coxeter(t));
    }
}

TEST_CASE("root system axioms") {
    for (auto t : all_types(6)) {
        CAPTURE(t.name());
        RootSystem rs(t);
        for (const auto& a : rs.roots()) {
            RootCoords neg = a.coords;
            for (auto& x : neg) x = -x;
            CHECK(rs.is_root(neg));
            for (int i = 0; i < rs.rank(); ++i) {
                auto [p, q] = rs.string_bounds(a.coords, i);
                RootCoords ai(rs.rank(), 0);
                ai[i] = 1;
                RootCoords minus_ai(rs.rank(), 0);
                minus_ai[i] = -1;
                if (a.coords == ai || a.coords == minus_ai) continue;
                CHECK(p - q == rs.pairing(a.coords, ai));
                CHECK(p + q <= 3);
                CHECK(rs.is_root(rs.reflect(a.coords, i)));
            }
        }
    }
}

TEST_CASE("Gram matrices and coroots") {
    RootSystem b2({Family::B, 2});
    CHECK(b2.cartan(0, 1) == -2);  // <alpha_1, alpha_2^vee> with alpha_2 short
    CHECK(b2.cartan(1, 0) == -1);
    RootSystem g2({Family::G, 2});
    CHECK(g2.cartan(0, 1) == -1);
    CHECK(g2.cartan(1, 0) == -3);
    CHECK(g2.norm2({1, 0}) == Rational(2, 3));
    auto cv = g2.coroot({1, 0});
    CHECK(cv == Vector{3, 0});
    CHECK(g2.coroot_in_simple_coroots({3, 2}) == std::vector<int>{1, 2});
    RootSystem c3({Family::C, 3});
    CHECK(c3.norm2({0, 0, 1}) == 2);
    CHECK(c3.norm2({1, 0, 0}) == 1);
}
