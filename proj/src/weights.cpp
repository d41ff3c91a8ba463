#include "orbitkit/weights.hpp"

#include <algorithm>
#include <cstdlib>

namespace orbitkit {

namespace {

// Splits `block` into eigenspaces of the integer-valued operator m.
std::vector<std::pair<Integer, Subspace>> split(const RationalMatrix& m, const Subspace& block) {
    const std::size_t d = block.dim();
    const std::size_t n = block.ambient_dim();
    const auto& rows = block.vectors();
    // image_i = sum_j c(i,j) rows_j
    RationalMatrix c(d, d);
    for (std::size_t i = 0; i < d; ++i) {
        Vector img = m.apply(rows[i]);
        Vector rebuilt(n);
        for (std::size_t j = 0; j < d; ++j) {
            c(i, j) = img[block.pivots()[j]];
            axpy(rebuilt, c(i, j), rows[j]);
        }
        if (rebuilt != img) throw InternalError("eigenspaces: subspace is not invariant");
    }
    RationalMatrix ct = c.transpose();
    Rational bound;
    for (std::size_t i = 0; i < d; ++i) {
        Rational s;
        for (std::size_t j = 0; j < d; ++j) s += abs(ct(i, j));
        bound = std::max(bound, s);
    }
    mpz_class lim = bound.get_num() / bound.get_den() + 1;

    std::vector<std::pair<Integer, Subspace>> out;
    std::size_t found = 0;
    for (long k = 0; found < d && k <= lim.get_si(); ++k) {
        for (long sign : {1L, -1L}) {
            if (k == 0 && sign == -1) continue;
            Integer lambda = sign * k;
            RationalMatrix shifted = ct;
            for (std::size_t i = 0; i < d; ++i) shifted(i, i) -= Rational(lambda);
            auto ker = kernel(shifted);
            if (ker.dim() == 0) continue;
            std::vector<Vector> vecs;
            for (const auto& y : ker.vectors()) {
                Vector v(n);
                for (std::size_t i = 0; i < d; ++i) axpy(v, y[i], rows[i]);
                vecs.push_back(std::move(v));
            }
            found += ker.dim();
            out.emplace_back(lambda, Subspace::span(n, vecs));
        }
    }
    if (found != d) throw InternalError("eigenspaces: action is not diagonalisable over Q");
    return out;
}

}  // namespace

std::vector<WeightSpace> joint_eigenspaces(const LieAlgebra& alg, const std::vector<Vector>& elements,
                                           const Subspace& start) {
    std::vector<WeightSpace> blocks{{Vector{}, start}};
    if (start.dim() == 0) blocks.clear();
    for (const auto& h : elements) {
        RationalMatrix ad = alg.ad_matrix(h);
        Integer den = 1;
        for (std::size_t i = 0; i < ad.rows(); ++i)
            for (std::size_t j = 0; j < ad.cols(); ++j)
                if (sgn(ad(i, j)) != 0) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), ad(i, j).get_den_mpz_t());
        if (den != 1) {
            for (std::size_t i = 0; i < ad.rows(); ++i)
                for (std::size_t j = 0; j < ad.cols(); ++j) ad(i, j) *= den;
        }
        std::vector<WeightSpace> next;
        for (const auto& b : blocks)
            for (auto& [lambda, sub] : split(ad, b.space)) {
                WeightSpace w{b.weight, std::move(sub)};
                Rational value(lambda, den);
                value.canonicalize();
                w.weight.push_back(value);
                next.push_back(std::move(w));
            }
        blocks = std::move(next);
    }
    std::sort(blocks.begin(), blocks.end(), [](const WeightSpace& a, const WeightSpace& b) { return a.weight > b.weight; });
    return blocks;
}

}  // namespace orbitkit
