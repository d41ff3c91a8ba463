#include "oracles.hpp"

namespace oracle {

Rref rref(std::vector<Vector> rows, std::size_t cols) {
    Rref out;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t p = r;
        while (p < rows.size() && rows[p][c] == 0) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[r]);
        Rational inv = 1 / rows[r][c];
        for (auto& x : rows[r]) x *= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == 0) continue;
            Rational f = rows[i][c];
            for (std::size_t j = 0; j < cols; ++j) rows[i][j] -= f * rows[r][j];
        }
        out.pivots.push_back(c);
        ++r;
    }
    rows.resize(r);
    out.rows = std::move(rows);
    return out;
}

std::size_t rank(const std::vector<Vector>& rows, std::size_t cols) { return rref(rows, cols).pivots.size(); }

std::vector<Vector> kernel_basis(const std::vector<Vector>& rows, std::size_t cols) {
    auto e = rref(rows, cols);
    std::vector<bool> piv(cols, false);
    for (auto p : e.pivots) piv[p] = true;
    std::vector<Vector> out;
    for (std::size_t f = 0; f < cols; ++f) {
        if (piv[f]) continue;
        Vector x(cols);
        x[f] = 1;
        for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = -e.rows[r][f];
        out.push_back(std::move(x));
    }
    return out;
}

std::vector<Vector> random_rows(std::mt19937& rng, std::size_t r, std::size_t c, int lo, int hi, double zero_prob) {
    std::uniform_int_distribution<int> val(lo, hi);
    std::uniform_int_distribution<int> den(1, 4);
    std::bernoulli_distribution zero(zero_prob);
    std::vector<Vector> rows(r, Vector(c));
    for (auto& row : rows)
        for (auto& x : row) {
            if (zero(rng)) continue;
            x = Rational(val(rng), den(rng));
            x.canonicalize();
        }
    return rows;
}

std::vector<Vector> random_low_rank(std::mt19937& rng, std::size_t r, std::size_t c, std::size_t k) {
    auto a = random_rows(rng, r, k, -3, 3, 0.2);
    auto b = random_rows(rng, k, c, -3, 3, 0.2);
    std::vector<Vector> out(r, Vector(c));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t t = 0; t < k; ++t)
            for (std::size_t j = 0; j < c; ++j) out[i][j] += a[i][t] * b[t][j];
    return out;
}

}  // namespace oracle
