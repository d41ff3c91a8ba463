#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "orbitkit/exactlin.hpp"

namespace orbitkit {

struct Term {
    std::uint32_t index;
    Rational coeff;
    friend bool operator==(const Term&, const Term&) = default;
};
using SparseVector = std::vector<Term>;  // sorted by index, no zero coefficients

SparseVector sparse_from_dense(const Vector& v);
Vector dense_from_sparse(const SparseVector& s, std::size_t n);

// Finite-dimensional Lie algebra over Q given by structure constants on a
// fixed basis. Immutable after construction; the Killing form is computed
// on first use.
class LieAlgebra {
public:
    LieAlgebra() = default;
    // table[i * dim + j] = [b_i, b_j]
    LieAlgebra(std::string name, std::vector<std::string> labels, std::vector<SparseVector> table);

    const std::string& name() const { return name_; }
    std::size_t dim() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(std::size_t i) const { return labels_.at(i); }

    const SparseVector& structure(std::size_t i, std::size_t j) const { return table_[i * dim() + j]; }

    Vector bracket(const Vector& x, const Vector& y) const;
    Vector bracket_basis(std::size_t i, const Vector& y) const;  // [b_i, y]
    SparseVector bracket_sparse(const SparseVector& x, const SparseVector& y) const;
    RationalMatrix ad_matrix(const Vector& x) const;             // column j = [x, b_j]
    // Image of ad x restricted to span of vectors: { [x, v] }.
    Subspace bracket_space(const Vector& x, const Subspace& s) const;
    Subspace centralizer(const Vector& x) const;

    const RationalMatrix& killing() const;
    Rational killing(const Vector& x, const Vector& y) const;

    bool is_subalgebra(const Subspace& s) const;
    bool jacobi_holds(std::size_t i, std::size_t j, std::size_t k) const;

    // Block sizes when built as a direct sum; empty otherwise.
    const std::vector<std::size_t>& summand_dims() const { return summand_dims_; }

private:
    std::string name_;
    std::vector<std::string> labels_;
    std::vector<SparseVector> table_;
    std::vector<std::size_t> summand_dims_;

    struct KillingCache {
        std::once_flag once;
        RationalMatrix form;
    };
    std::shared_ptr<KillingCache> killing_ = std::make_shared<KillingCache>();

    friend LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b);
};

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b);
// span{(x, x)} inside a direct sum of two copies of the same algebra.
Subspace diag_subalgebra(const LieAlgebra& sum);

// A vector of coordinates tied to its algebra; brackets across algebras throw.
struct AlgebraElement {
    const LieAlgebra* algebra = nullptr;
    Vector coords;
};
AlgebraElement bracket(const AlgebraElement& x, const AlgebraElement& y);

}  // namespace orbitkit
