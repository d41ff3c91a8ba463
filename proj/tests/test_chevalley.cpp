#include <random>

#include "doctest.h"
#include "orbitkit/chevalley.hpp"

using namespace orbitkit;

namespace {

std::vector<CartanType> types_up_to(int lo, int hi) {
    std::vector<CartanType> out;
    for (int n = std::max(lo, 1); n <= hi; ++n) out.push_back({Family::A, n});
    for (int n = std::max(lo, 2); n <= hi; ++n) out.push_back({Family::B, n});
    for (int n = std::max(lo, 2); n <= hi; ++n) out.push_back({Family::C, n});
    for (int n = std::max(lo, 3); n <= hi; ++n) out.push_back({Family::D, n});
    for (int n = std::max(lo, 6); n <= std::min(8, hi); ++n) out.push_back({Family::E, n});
    if (lo <= 4 && hi >= 4) out.push_back({Family::F, 4});
    if (lo <= 2 && hi >= 2) out.push_back({Family::G, 2});
    return out;
}

Vector random_element(std::mt19937& rng, std::size_t n) {
    std::uniform_int_distribution<int> d(-3, 3);
    std::bernoulli_distribution keep(4.0 / n);
    Vector v(n);
    for (auto& x : v)
        if (keep(rng)) x = d(rng);
    return v;
}

}  // namespace

TEST_CASE("sl2 in a Chevalley basis") {
    auto g = chevalley_for({Family::A, 1});
    const auto& L = g->algebra();
    REQUIRE(L.dim() == 3);
    Vector h = unit_vector(3, 0), x = unit_vector(3, 1), y = unit_vector(3, 2);
    CHECK(L.bracket(h, x) == scaled(x, 2));
    CHECK(L.bracket(h, y) == scaled(y, -2));
    CHECK(L.bracket(x, y) == h);
    CHECK(L.killing(h, h) == 8);
    CHECK(L.killing(x, y) == 4);
    CHECK(L.killing(x, x) == 0);
}

TEST_CASE("Frenkel-Kac algebras satisfy Jacobi") {
    for (auto t : {CartanType{Family::A, 3}, CartanType{Family::D, 4}}) {
        auto L = frenkel_kac_algebra(RootSystem(t));
        for (std::size_t i = 0; i < L.dim(); ++i)
            for (std::size_t j = i + 1; j < L.dim(); ++j)
                for (std::size_t k = j + 1; k < L.dim(); ++k) REQUIRE(L.jacobi_holds(i, j, k));
    }
}

TEST_CASE("Jacobi identity on all basis triples, rank <= 4") {
    for (auto t : types_up_to(1, 4)) {
        CAPTURE(t.name());
        auto g = chevalley_for(t);
        const auto& L = g->algebra();
        CHECK(L.dim() == g->roots().dimension());
        bool ok = true;
        for (std::size_t i = 0; i < L.dim() && ok; ++i)
            for (std::size_t j = i + 1; j < L.dim() && ok; ++j)
                for (std::size_t k = j + 1; k < L.dim() && ok; ++k) ok = L.jacobi_holds(i, j, k);
        CHECK(ok);
    }
}

TEST_CASE("Jacobi identity on random triples, rank 5 to 8") {
    std::mt19937 rng(2024);
    std::size_t checked = 0;
    for (auto t : types_up_to(5, 8)) {
        CAPTURE(t.name());
        auto g = chevalley_for(t);
        const auto& L = g->algebra();
        std::uniform_int_distribution<std::size_t> pick(0, L.dim() - 1);
        for (int s = 0; s < 700; ++s) {
            REQUIRE(L.jacobi_holds(pick(rng), pick(rng), pick(rng)));
            ++checked;
        }
        for (int s = 0; s < 20; ++s) {
            auto x = random_element(rng, L.dim()), y = random_element(rng, L.dim()), z = random_element(rng, L.dim());
            Vector j = L.bracket(x, L.bracket(y, z));
            axpy(j, 1, L.bracket(y, L.bracket(z, x)));
            axpy(j, 1, L.bracket(z, L.bracket(x, y)));
            REQUIRE(is_zero(j));
        }
    }
    CHECK(checked >= 10000);
}

TEST_CASE("Chevalley basis sign symmetry and integrality") {
    for (auto t : types_up_to(1, 5)) {
        CAPTURE(t.name());
        auto g = chevalley_for(t);
        const auto& rs = g->roots();
        for (std::size_t a = 0; a < rs.roots().size(); ++a)
            for (std::size_t b = 0; b < rs.roots().size(); ++b) {
                int n = g->structure_constant(a, b);
                CHECK(n == -g->structure_constant(rs.negative_index(a), rs.negative_index(b)));
                CHECK(n == -g->structure_constant(b, a));
            }
    }
}

TEST_CASE("Killing form: invariance and value on the Cartan") {
    std::mt19937 rng(99);
    for (auto t : types_up_to(1, 4)) {
        CAPTURE(t.name());
        auto g = chevalley_for(t);
        const auto& L = g->algebra();
        const auto& rs = g->roots();
        const int hv = rs.dual_coxeter_number();
        const auto& K = L.killing();
        CHECK(K.is_symmetric());
        // B(H_i, H_j) = 2 h^vee (alpha_i^vee, alpha_j^vee) with long roots of length 2
        for (int i = 0; i < rs.rank(); ++i)
            for (int j = 0; j < rs.rank(); ++j) {
                Rational ci = 2 / rs.gram()(i, i), cj = 2 / rs.gram()(j, j);
                CHECK(K(i, j) == 2 * hv * ci * cj * rs.gram()(i, j));
            }
        for (int s = 0; s < 200; ++s) {
            auto x = random_element(rng, L.dim()), y = random_element(rng, L.dim()), z = random_element(rng, L.dim());
            CHECK(L.killing(L.bracket(x, y), z) + L.killing(y, L.bracket(x, z)) == 0);
        }
        CHECK(rank(K) == L.dim());
    }
}

TEST_CASE("exceptional and rank-8 algebras build") {
    for (auto t : {CartanType{Family::E, 8}, CartanType{Family::E, 7}, CartanType{Family::B, 8},
                   CartanType{Family::C, 8}, CartanType{Family::D, 8}}) {
        CAPTURE(t.name());
        auto g = chevalley_for(t);
        CHECK(g->dim() == g->roots().dimension());
    }
}

TEST_CASE("direct sums and the diagonal") {
    auto g = chevalley_for({Family::B, 2});
    auto sum = direct_sum(g->algebra(), g->algebra());
    CHECK(sum.dim() == 20);
    auto d = diag_subalgebra(sum);
    CHECK(d.dim() == 10);
    CHECK(sum.is_subalgebra(d));
    auto other = chevalley_for({Family::C, 2});
    auto mixed = direct_sum(g->algebra(), chevalley_for({Family::A, 2})->algebra());
    CHECK_THROWS_AS(diag_subalgebra(mixed), DimensionMismatch);
    AlgebraElement x{&g->algebra(), g->root_vector(0)};
    AlgebraElement y{&other->algebra(), other->root_vector(0)};
    CHECK_THROWS_AS(bracket(x, y), AlgebraMismatch);
}
