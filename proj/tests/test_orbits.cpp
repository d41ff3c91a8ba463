#include "doctest.h"
#include "orbitkit/catalog.hpp"
#include "orbitkit/errors.hpp"
#include "orbitkit/orbits.hpp"

using namespace orbitkit;

namespace {

std::vector<CartanType> all_types() {
    std::vector<CartanType> out;
    for (int r = 1; r <= 8; ++r) out.push_back({Family::A, r});
    for (int r = 2; r <= 8; ++r) out.push_back({Family::B, r});
    for (int r = 2; r <= 8; ++r) out.push_back({Family::C, r});
    for (int r = 4; r <= 8; ++r) out.push_back({Family::D, r});
    out.push_back({Family::G, 2});
    out.push_back({Family::F, 4});
    for (int r = 6; r <= 8; ++r) out.push_back({Family::E, r});
    return out;
}

// positive roots not orthogonal to the highest root
std::size_t nonorthogonal_count(const RootSystem& rs) {
    const auto& beta = rs.roots()[rs.highest_root()].coords;
    std::size_t c = 0;
    for (const auto& a : rs.positive_roots())
        if (rs.inner(a.coords, beta) != 0) ++c;
    return c;
}

}  // namespace

TEST_CASE("n(g_C): both channels and the root count agree for every type") {
    for (auto t : all_types()) {
        CAPTURE(t.name());
        RootSystem rs(t);
        auto c = n_complex_channels(rs);
        CHECK(c.via_dual_coxeter == c.via_centralizer);
        // positives not orthogonal to beta: beta itself plus 2(h^vee - 2) others
        CHECK(nonorthogonal_count(rs) == 2 * c.via_dual_coxeter - 1);
    }
}

TEST_CASE("minimal orbit through X_beta") {
    for (auto t : all_types()) {
        if (t.family == Family::E && t.rank == 8) continue;  // covered by the table test
        CAPTURE(t.name());
        auto ch = chevalley_for(t);
        auto o = complex_minimal_orbit(*ch);
        CHECK(o.kind == OrbitKind::ComplexMinimal);
        CHECK(o.dim == 2 * n_complex(ch->roots()));
        CHECK(o.dim + o.centralizer_dim == ch->dim());
        CHECK(is_nilpotent(ch->algebra(), o.representative));
    }
}

TEST_CASE("nilpotency detects semisimple elements") {
    auto ch = chevalley_for(CartanType::parse("A2"));
    CHECK_FALSE(is_nilpotent(ch->algebra(), unit_vector(ch->dim(), 0)));
    CHECK(is_nilpotent(ch->algebra(), unit_vector(ch->dim(), 2)));
    CHECK_THROWS_AS(is_nilpotent(ch->algebra(), Vector(3)), DimensionMismatch);
}

TEST_CASE("real minimal orbits") {
    const Catalog cat = default_catalog();
    for (const char* id : {"sl(2,R)", "su(2,1)", "sp(1,1)", "sl(3,R)", "so(4,1)", "su*(4)"}) {
        CAPTURE(id);
        auto rf = realize(cat.find(id)->spec);
        auto o = real_minimal_orbit(*rf);
        CHECK(o.half_dim == n_real(*rf));
        CHECK(is_nilpotent(rf->algebra(), o.representative));
        const int c = minimality_case(*rf);
        if (c == 3) {
            auto m = real_minimal_orbit(*rf, true);
            CHECK(m.kind == OrbitKind::RealMinimalMinus);
            CHECK(m.dim == o.dim);
        } else {
            CHECK_THROWS_AS(real_minimal_orbit(*rf, true), InvalidForm);
        }
        auto oc = complexified_real_minimal_orbit(*rf);
        CHECK(oc.kind == OrbitKind::ComplexificationOfRealMinimal);
        CHECK(oc.algebra_id == std::string(id) + "_C");
        // in cases 2 and 3 the real orbit is a real form of O_min,C
        if (c != 1) CHECK(o.half_dim == n_complex(rf->complex().roots()));
        else CHECK(o.half_dim > n_complex(rf->complex().roots()));
    }
}

TEST_CASE("KKS pairing is skew and vanishes on the centralizer") {
    auto ch = chevalley_for(CartanType::parse("B2"));
    const auto& L = ch->algebra();
    const Vector x = ch->root_vector(ch->roots().highest_root());
    const Subspace z = centralizer(L, x);
    for (std::size_t i = 0; i < L.dim(); ++i)
        for (std::size_t j = 0; j < L.dim(); ++j) {
            const Vector a = unit_vector(L.dim(), i), b = unit_vector(L.dim(), j);
            CHECK(kks_pairing(L, x, a, b) == -kks_pairing(L, x, b, a));
        }
    for (const auto& v : z.vectors())
        for (std::size_t j = 0; j < L.dim(); ++j) CHECK(kks_pairing(L, x, v, unit_vector(L.dim(), j)) == 0);
}

TEST_CASE("relative centralizer is the Killing complement of [x, h]") {
    auto ch = chevalley_for(CartanType::parse("A2"));
    const auto& L = ch->algebra();
    const Vector x = ch->root_vector(ch->roots().highest_root());
    const Subspace full = Subspace::full(L.dim());
    CHECK(relative_centralizer(L, full, x) == centralizer(L, x));
}
