#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "orbitkit/errors.hpp"

namespace orbitkit {

using Integer = mpz_class;
using Rational = mpq_class;
using Vector = std::vector<Rational>;

std::string to_string(const Rational& q);
Rational parse_rational(const std::string& text);

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);
bool is_zero(const Vector& v);
Vector& axpy(Vector& y, const Rational& a, const Vector& x);  // y += a x
Vector scaled(const Vector& v, const Rational& a);
Rational dot(const Vector& a, const Vector& b);

// Dense row-major matrix over Q.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols);

    static RationalMatrix identity(std::size_t n);
    static RationalMatrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
    static RationalMatrix from_columns(const std::vector<Vector>& cols, std::size_t rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<const Rational> row(std::size_t r) const {
        return {data_.data() + r * cols_, cols_};
    }
    Vector row_vector(std::size_t r) const;
    Vector column_vector(std::size_t c) const;

    RationalMatrix transpose() const;
    Vector apply(const Vector& v) const;                   // M v
    Vector apply_transpose(const Vector& v) const;         // M^T v
    Rational bilinear(const Vector& a, const Vector& b) const;  // a^T M b
    RationalMatrix principal_submatrix(std::span<const std::size_t> idx) const;

    bool is_square() const { return rows_ == cols_; }
    bool is_symmetric() const;
    bool is_zero() const;

    friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
    friend RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b);
    friend RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b);
    friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

// A subspace of Q^n held in canonical form: the reduced row echelon basis
// of its vectors. Equal subspaces have identical representations, so
// equality is structural. basis() exposes the same data as columns.
class Subspace {
public:
    Subspace() = default;

    static Subspace zero(std::size_t ambient);
    static Subspace full(std::size_t ambient);
    static Subspace span(std::size_t ambient, const std::vector<Vector>& vectors);
    static Subspace coordinate(std::size_t ambient, std::span<const std::size_t> idx);

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return rows_.size(); }

    const std::vector<Vector>& vectors() const { return rows_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }
    RationalMatrix basis() const;  // ambient x dim

    bool contains(const Vector& v) const;
    Vector reduce(const Vector& v) const;        // component outside the span
    Vector coordinates(const Vector& v) const;   // w.r.t. vectors(); throws NoSolution

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.rows_ == b.rows_;
    }

private:
    std::size_t ambient_ = 0;
    std::vector<Vector> rows_;
    std::vector<std::size_t> pivots_;
    std::vector<std::vector<std::size_t>> support_;

    void build_support();
    friend Subspace make_subspace(std::size_t, std::vector<Vector>, std::vector<std::size_t>);
};

std::size_t rank(const RationalMatrix& m);
Subspace kernel(const RationalMatrix& m);
Subspace row_space(const RationalMatrix& m);
Subspace column_space(const RationalMatrix& m);

// {v : v^T F w = 0 for all w in W}. F must be square, symmetric and of the
// ambient size of W.
Subspace orth_complement(const Subspace& w, const RationalMatrix& form);
Subspace subspace_sum(const Subspace& a, const Subspace& b);
bool subspace_contains(const Subspace& a, const Subspace& b);  // b inside a
Subspace subspace_intersect(const Subspace& a, const Subspace& b);

// Some x with A x = b, or nullopt.
std::optional<Vector> solve(const RationalMatrix& a, const Vector& b);
RationalMatrix inverse(const RationalMatrix& m);  // throws NoSolution if singular
Rational determinant(const RationalMatrix& m);

std::vector<Rational> leading_principal_minors(const RationalMatrix& m);
bool is_positive_definite(const RationalMatrix& m);
bool is_negative_definite(const RationalMatrix& m);

}  // namespace orbitkit
