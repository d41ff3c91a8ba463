#include "doctest.h"
#include "oracles.hpp"
#include "orbitkit/bareiss.hpp"
#include "orbitkit/exactlin.hpp"

using namespace orbitkit;

namespace {

RationalMatrix mat(std::vector<Vector> rows) {
    const std::size_t c = rows.empty() ? 0 : rows[0].size();
    return RationalMatrix::from_rows(rows, c);
}

Vector vec(std::initializer_list<long> xs) {
    Vector v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

}  // namespace

TEST_CASE("rank of small matrices") {
    CHECK(rank(mat({vec({1, 2}), vec({2, 4})})) == 1);
    CHECK(rank(mat({vec({1, 0, 0}), vec({0, 1, 0}), vec({0, 0, 1})})) == 3);
    CHECK(rank(RationalMatrix(3, 4)) == 0);
    CHECK(rank(mat({vec({0, 0, 1}), vec({0, 1, 1}), vec({0, 1, 2})})) == 2);
}

TEST_CASE("kernel of a known matrix") {
    // x + y + z = 0 and x - y = 0
    auto k = kernel(mat({vec({1, 1, 1}), vec({1, -1, 0})}));
    REQUIRE(k.dim() == 1);
    CHECK(k.vectors()[0] == Vector{1, 1, -2});
    CHECK(k.pivots() == std::vector<std::size_t>{0});
}

TEST_CASE("canonical form does not depend on the spanning set") {
    auto a = Subspace::span(3, {vec({1, 2, 3}), vec({0, 1, 1})});
    auto b = Subspace::span(3, {vec({1, 3, 4}), vec({2, 5, 7}), vec({0, 0, 0})});
    CHECK(a == b);
    auto basis = a.basis();
    CHECK(basis.rows() == 3);
    CHECK(basis.cols() == 2);
}

TEST_CASE("Bareiss elimination agrees with naive rational elimination") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t r = 1 + rng() % 9, c = 1 + rng() % 9;
        auto rows = trial % 2 ? oracle::random_rows(rng, r, c, -5, 5)
                              : oracle::random_low_rank(rng, r, c, 1 + rng() % 3);
        auto naive = oracle::rref(rows, c);
        auto s = Subspace::span(c, rows);
        CHECK(s.vectors() == naive.rows);
        CHECK(s.pivots() == naive.pivots);
        auto m = RationalMatrix::from_rows(rows, c);
        CHECK(rank(m) == naive.pivots.size());
        CHECK(kernel(m) == Subspace::span(c, oracle::kernel_basis(rows, c)));
    }
}

TEST_CASE("int64 and mpz kernels produce the same echelon form") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t r = 2 + rng() % 8, c = 2 + rng() % 8;
        auto rows = oracle::random_rows(rng, r, c, -9, 9);
        auto ints = bareiss::integer_rows(rows, c);
        auto small = bareiss::gauss_jordan(ints, c, bareiss::Backend::Int64);
        auto big = bareiss::gauss_jordan(ints, c, bareiss::Backend::Mpz);
        REQUIRE(small.has_value());
        CHECK(small->used_int64);
        CHECK_FALSE(big->used_int64);
        CHECK(small->pivots == big->pivots);
        CHECK(small->rows == big->rows);
        CHECK(small->scale == big->scale);
    }
}

TEST_CASE("overflowing int64 elimination falls back to mpz") {
    std::mt19937 rng(3);
    std::uniform_int_distribution<long> big(-(1L << 40), 1L << 40);
    const std::size_t n = 8;
    std::vector<Vector> rows(n, Vector(n));
    for (auto& row : rows)
        for (auto& x : row) x = big(rng);
    auto ints = bareiss::integer_rows(rows, n);
    CHECK_FALSE(bareiss::gauss_jordan(ints, n, bareiss::Backend::Int64).has_value());
    auto e = bareiss::gauss_jordan(ints, n);
    CHECK_FALSE(e.used_int64);
    CHECK(Subspace::span(n, rows).vectors() == oracle::rref(rows, n).rows);
}

TEST_CASE("rank properties on random matrices") {
    std::mt19937 rng(19);
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t r = 1 + rng() % 10, c = 1 + rng() % 10;
        auto m = RationalMatrix::from_rows(oracle::random_low_rank(rng, r, c, 1 + rng() % 4), c);
        CHECK(rank(m) == rank(m.transpose()));
        auto k = kernel(m);
        CHECK(rank(m) + k.dim() == c);
        for (const auto& v : k.vectors()) CHECK(is_zero(m.apply(v)));
    }
}

TEST_CASE("orthogonal complements") {
    auto w = Subspace::span(3, {vec({1, 0, 0})});
    auto std_perp = orth_complement(w, RationalMatrix::identity(3));
    CHECK(std_perp == Subspace::coordinate(3, std::vector<std::size_t>{1, 2}));

    RationalMatrix hyperbolic(2, 2);  // x1 y2 + x2 y1
    hyperbolic(0, 1) = 1;
    hyperbolic(1, 0) = 1;
    auto line = Subspace::span(2, {vec({1, 0})});
    CHECK(orth_complement(line, hyperbolic) == line);  // isotropic

    std::mt19937 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 2 + rng() % 6;
        auto b = RationalMatrix::from_rows(oracle::random_rows(rng, n, n, -4, 4, 0.1), n);
        auto form = b.transpose() * b;
        if (rank(form) < n) continue;
        auto s = Subspace::span(n, oracle::random_rows(rng, 1 + rng() % n, n, -3, 3));
        auto perp = orth_complement(s, form);
        CHECK(perp.dim() + s.dim() == n);
        CHECK(orth_complement(perp, form) == s);
    }

    CHECK_THROWS_AS(orth_complement(w, RationalMatrix::identity(4)), DimensionMismatch);
    RationalMatrix skew(3, 3);
    skew(0, 1) = 1;
    skew(1, 0) = -1;
    CHECK_THROWS_AS(orth_complement(w, skew), InvalidForm);
}

TEST_CASE("sum, intersection and containment") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 2 + rng() % 7;
        auto a = Subspace::span(n, oracle::random_rows(rng, rng() % n, n, -3, 3));
        auto b = Subspace::span(n, oracle::random_rows(rng, rng() % n, n, -3, 3));
        auto s = subspace_sum(a, b);
        auto i = subspace_intersect(a, b);
        CHECK(s.dim() + i.dim() == a.dim() + b.dim());
        CHECK(subspace_contains(s, a));
        CHECK(subspace_contains(s, b));
        CHECK(subspace_contains(a, i));
        CHECK(subspace_contains(b, i));
        CHECK(subspace_contains(a, b) == (subspace_sum(a, b).dim() == a.dim()));
    }
    auto a = Subspace::span(4, {vec({1, 1, 0, 0}), vec({0, 0, 1, 0})});
    auto b = Subspace::span(4, {vec({1, 1, 1, 0}), vec({0, 0, 0, 1})});
    CHECK(subspace_intersect(a, b) == Subspace::span(4, {vec({1, 1, 1, 0})}));
    CHECK_THROWS_AS(subspace_sum(a, Subspace::zero(3)), DimensionMismatch);
}

TEST_CASE("coordinates and reduction") {
    auto s = Subspace::span(3, {vec({1, 2, 3}), vec({0, 1, 1})});
    Vector v = vec({2, 5, 7});
    auto c = s.coordinates(v);
    Vector rebuilt(3);
    for (std::size_t k = 0; k < c.size(); ++k) axpy(rebuilt, c[k], s.vectors()[k]);
    CHECK(rebuilt == v);
    CHECK_THROWS_AS(s.coordinates(vec({0, 0, 1})), NoSolution);
}

TEST_CASE("solve, inverse and determinant") {
    auto a = mat({vec({2, 1}), vec({1, 3})});
    auto x = solve(a, vec({3, 5}));
    REQUIRE(x.has_value());
    CHECK(a.apply(*x) == vec({3, 5}));
    CHECK(a * inverse(a) == RationalMatrix::identity(2));
    CHECK(determinant(a) == 5);
    CHECK_FALSE(solve(mat({vec({1, 1}), vec({1, 1})}), vec({0, 1})).has_value());
    CHECK_THROWS_AS(inverse(mat({vec({1, 2}), vec({2, 4})})), NoSolution);
}

TEST_CASE("definiteness via leading principal minors") {
    auto pd = mat({vec({2, -1, 0}), vec({-1, 2, -1}), vec({0, -1, 2})});
    CHECK(is_positive_definite(pd));
    auto minors = leading_principal_minors(pd);
    CHECK(minors == std::vector<Rational>{2, 3, 4});
    CHECK_FALSE(is_positive_definite(mat({vec({1, 2}), vec({2, 1})})));
    CHECK(is_negative_definite(mat({vec({-1, 0}), vec({0, -3})})));
    CHECK_FALSE(is_positive_definite(mat({vec({0, 1}), vec({1, 0})})));
    auto singular_first = mat({vec({0, 1}), vec({1, 0})});
    CHECK(leading_principal_minors(singular_first) == std::vector<Rational>{0, -1});
}
