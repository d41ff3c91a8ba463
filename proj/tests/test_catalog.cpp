#include <cstdlib>
#include <fstream>
#include <random>

#include "doctest.h"
#include "orbitkit/catalog.hpp"
#include "orbitkit/errors.hpp"

using namespace orbitkit;

namespace {

const char* kMini = R"J({"schema": "orbitkit-catalog/1", "version": "9.9", "forms": [
  {"id": "sl(2,R)", "cartan_type": "A1", "signs": {"1": -1}, "real_rank": 1, "n_g": "n_gc", "dim_k": 1},
  {"id": "su*(4)", "cartan_type": "A3", "involution": [3, 2, 1], "real_rank": 1, "n_g": 4, "aliases": ["sl(2,H)"]}
]})J";

std::string with_form(const std::string& form) {
    return std::string(R"({"schema": "orbitkit-catalog/1", "version": "1", "forms": [)") + form + "]}";
}

Vector random_vector(std::mt19937& rng, std::size_t n) {
    std::uniform_int_distribution<int> d(-3, 3);
    Vector v(n);
    for (auto& x : v) x = d(rng);
    return v;
}

}  // namespace

TEST_CASE("parsing a small catalog") {
    Catalog c = parse_catalog(kMini, "mini");
    CHECK(c.version == "9.9");
    REQUIRE(c.entries.size() == 2);
    const auto& s = c.entries[1].spec;
    CHECK(s.involution == std::vector<int>{2, 1, 0});
    CHECK(s.signs == std::vector<int>{1, 1, 1});
    CHECK(s.n_g == 4);
    CHECK(c.entries[0].spec.signs == std::vector<int>{-1});
    CHECK_FALSE(c.entries[0].spec.n_g.has_value());
    CHECK(c.find("SL(2,H)") == &c.entries[1]);
    CHECK(c.find("so(2,1)") == nullptr);
}

TEST_CASE("catalog errors") {
    CHECK_THROWS_AS(parse_catalog("{", "x"), CatalogError);
    CHECK_THROWS_AS(parse_catalog(R"({"schema": "other", "version": "1", "forms": []})", "x"), CatalogError);
    CHECK_THROWS_AS(parse_catalog(with_form(R"({"id": "a", "cartan_type": "Z3", "real_rank": 1, "n_g": "n_gc"})"), "x"),
                    CatalogError);
    CHECK_THROWS_AS(
        parse_catalog(with_form(R"({"id": "a", "cartan_type": "A2", "involution": [1], "real_rank": 1, "n_g": "n_gc"})"), "x"),
        CatalogError);
    CHECK_THROWS_AS(
        parse_catalog(with_form(R"({"id": "a", "cartan_type": "A2", "signs": {"3": -1}, "real_rank": 1, "n_g": "n_gc"})"), "x"),
        CatalogError);
    CHECK_THROWS_AS(
        parse_catalog(with_form(R"({"id": "a", "cartan_type": "A2", "signs": {"x": -1}, "real_rank": 1, "n_g": "n_gc"})"), "x"),
        CatalogError);
    CHECK_THROWS_AS(
        parse_catalog(with_form(R"({"id": "a", "cartan_type": "A2", "signs": {"1": 2}, "real_rank": 1, "n_g": "n_gc"})"), "x"),
        CatalogError);
    CHECK_THROWS_AS(parse_catalog(with_form(R"({"id": "a", "cartan_type": "A2", "real_rank": 1, "n_g": "big"})"), "x"),
                    CatalogError);
    CHECK_THROWS_AS(parse_catalog(with_form(R"({"id": "a", "cartan_type": "A2", "n_g": "n_gc"})"), "x"), CatalogError);
    CHECK_THROWS_AS(parse_catalog(with_form(R"({"id": "a", "cartan_type": "A1", "real_rank": 1, "n_g": "n_gc"},
                                              {"id": "A", "cartan_type": "A1", "real_rank": 1, "n_g": "n_gc"})"),
                                  "x"),
                    CatalogError);
    CHECK_THROWS_AS(load_catalog("/nonexistent/catalog.json"), CatalogError);
}

TEST_CASE("form names") {
    CHECK(canonical_form_name("SO(1, 4)") == "so(4,1)");
    CHECK(canonical_form_name("su(2,3)") == "su(3,2)");
    CHECK(canonical_form_name("sp(1,2)") == "sp(2,1)");
    CHECK(canonical_form_name("e6(\xE2\x88\x92" "26)") == "e6(-26)");
    CHECK(canonical_form_name("sp(3,R)") == "sp(3,r)");
    CHECK(canonical_form_name("sl_n") == "sln");
    CHECK(glob_match("*", "anything"));
    CHECK(glob_match("g2*", "g2(2)"));
    CHECK(glob_match("so(?,1)", "so(4,1)"));
    CHECK_FALSE(glob_match("so(?,1)", "so(10,1)"));
    CHECK(glob_match("*(-2?)", "e6(-26)"));
    CHECK_FALSE(glob_match("a*b", "acbx"));
    CHECK(glob_match("", ""));
}

TEST_CASE("default catalog contents") {
    Catalog c = default_catalog();
    CHECK(c.schema == "orbitkit-catalog/1");
    CHECK(c.entries.size() == 64);
    CHECK(c.find("su(1,1)") == c.find("sl(2,R)"));
    CHECK(c.find("sp(1,R)") == c.find("sl(2,R)"));
    CHECK(c.find("SO(1,4)")->spec.id == "so(4,1)");
    CHECK(c.find("e6(\xE2\x88\x92" "26)")->spec.id == "e6(-26)");
    CHECK(c.of_type(CartanType::parse("E6")).size() == 4);
    CHECK(c.of_type(CartanType::parse("A3")).size() == 4);
    std::size_t fast = 0;
    for (const auto& e : c.entries) fast += !e.spec.slow;
    CHECK(fast >= 25);
}

TEST_CASE("ORBITKIT_CATALOG overrides the built-in catalog") {
    const std::string path = "test_catalog_override.json";
    {
        std::ofstream f(path);
        f << kMini;
    }
    setenv("ORBITKIT_CATALOG", path.c_str(), 1);
    Catalog c = default_catalog();
    unsetenv("ORBITKIT_CATALOG");
    CHECK(c.source == path);
    CHECK(c.entries.size() == 2);
    std::remove(path.c_str());
    CHECK(default_catalog().entries.size() == 64);
}

TEST_CASE("catalog-wide structure: dimensions, theta and the Killing form") {
    const Catalog c = default_catalog();
    std::mt19937 rng(7);
    std::size_t count = 0;
    for (const auto& e : c.entries) {
        if (e.spec.slow) continue;
        CAPTURE(e.spec.id);
        auto rf = realize(e.spec);
        const auto& L = rf->algebra();
        const std::size_t n = rf->dim();
        CHECK(n == rf->complex().dim());
        CHECK(rf->dim_k() == static_cast<std::size_t>(*e.spec.dim_k));
        CHECK(rf->a().dim() == static_cast<std::size_t>(e.spec.real_rank));
        std::size_t sum = rf->a().dim() + rf->m().dim();
        for (const auto& r : rf->restricted_roots()) sum += r.multiplicity();
        CHECK(sum == n);
        CHECK(L.is_subalgebra(rf->k()));
        CHECK(L.is_subalgebra(rf->n_plus()));
        CHECK(L.is_subalgebra(rf->a()));
        for (int s = 0; s < 20; ++s) {
            const Vector x = random_vector(rng, n), y = random_vector(rng, n), z = random_vector(rng, n);
            // theta is an involutive automorphism of the real algebra
            CHECK(rf->theta_real(L.bracket(x, y)) == L.bracket(rf->theta_real(x), rf->theta_real(y)));
            CHECK(rf->theta_real(rf->theta_real(x)) == x);
            // ad-invariance of the Killing form
            CHECK(L.killing(L.bracket(x, y), z) + L.killing(y, L.bracket(x, z)) == 0);
        }
        // Cartan involution: -B(x, theta x) > 0 on a random nonzero x
        const Vector x = random_vector(rng, n);
        if (!is_zero(x)) CHECK(L.killing(x, rf->theta_real(x)) < 0);
        ++count;
    }
    CHECK(count >= 25);
}
