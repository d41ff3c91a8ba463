#pragma once

// Independent reference computations used only by the tests.

#include <random>
#include <vector>

#include "orbitkit/exactlin.hpp"

namespace oracle {

using orbitkit::Rational;
using orbitkit::Vector;

// Textbook Gauss-Jordan over Q with first-nonzero pivoting.
struct Rref {
    std::vector<Vector> rows;
    std::vector<std::size_t> pivots;
};
Rref rref(std::vector<Vector> rows, std::size_t cols);
std::size_t rank(const std::vector<Vector>& rows, std::size_t cols);
std::vector<Vector> kernel_basis(const std::vector<Vector>& rows, std::size_t cols);

std::vector<Vector> random_rows(std::mt19937& rng, std::size_t r, std::size_t c, int lo, int hi,
                                double zero_prob = 0.3);
// Rows whose rank is at most `rank_bound`, built from products.
std::vector<Vector> random_low_rank(std::mt19937& rng, std::size_t r, std::size_t c, std::size_t rank_bound);

}  // namespace oracle
