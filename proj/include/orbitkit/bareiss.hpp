#pragma once

// Fraction-free Gauss-Jordan elimination on integer matrices. Every entry
// stays an integer minor of the input, so no gcd work is needed; the final
// matrix is d * RREF where d is the last pivot. An int64 kernel runs first
// and hands over to mpz on overflow.

#include <cstddef>
#include <optional>
#include <vector>

#include "orbitkit/exactlin.hpp"

namespace orbitkit::bareiss {

enum class Backend { Auto, Int64, Mpz };

struct Echelon {
    std::vector<std::vector<Integer>> rows;  // nonzero rows of d*RREF, pivot order
    std::vector<std::size_t> pivots;
    Integer scale;                           // d; 1 when the matrix is zero
    bool used_int64 = false;
};

using IntegerRows = std::vector<std::vector<Integer>>;

// Clears denominators row by row and divides out the row content. Row
// scaling leaves both row space and kernel unchanged.
IntegerRows integer_rows(const std::vector<Vector>& rows, std::size_t cols);
IntegerRows integer_rows(const RationalMatrix& m);

// Returns nullopt only for Backend::Int64 when an entry overflows.
std::optional<Echelon> gauss_jordan(const IntegerRows& m, std::size_t cols, Backend backend);
Echelon gauss_jordan(const IntegerRows& m, std::size_t cols);

}  // namespace orbitkit::bareiss
