#pragma once

#include <memory>

#include "orbitkit/lie.hpp"
#include "orbitkit/rootsys.hpp"

namespace orbitkit {

// Complex simple Lie algebra in a Chevalley basis over Q.
// Basis order: H_1..H_r (simple coroots), then X_alpha for the roots in
// RootSystem::roots() order. Relations:
//   [H_i, X_a] = <a, alpha_i^vee> X_a,  [X_a, X_-a] = H_a (the coroot),
//   [X_a, X_b] = N_{a,b} X_{a+b},  N_{a,b} = +-(p+1),
// with N = +(p+1) on extraspecial pairs (alpha_i, zeta), i minimal.
class ChevalleyAlgebra {
public:
    explicit ChevalleyAlgebra(const RootSystem& rs);

    const RootSystem& roots() const { return rs_; }
    const LieAlgebra& algebra() const { return alg_; }
    std::size_t dim() const { return alg_.dim(); }
    int rank() const { return rs_.rank(); }

    std::size_t cartan_index(int i) const { return static_cast<std::size_t>(i); }
    std::size_t root_index(std::size_t root) const { return static_cast<std::size_t>(rank()) + root; }
    bool is_cartan_index(std::size_t b) const { return b < static_cast<std::size_t>(rank()); }
    std::size_t root_of_basis(std::size_t b) const { return b - static_cast<std::size_t>(rank()); }

    Vector root_vector(std::size_t root) const;  // X_root
    Vector coroot_element(std::size_t root) const;  // H_root in the H_i basis
    int structure_constant(std::size_t a, std::size_t b) const;  // N_{a,b}, 0 if a+b is not a root

    Subspace cartan() const;
    Subspace n_plus() const;

private:
    RootSystem rs_;
    LieAlgebra alg_;
};

std::shared_ptr<const ChevalleyAlgebra> build_chevalley(const RootSystem& rs);
// Cached per Cartan type; safe to call from several threads.
std::shared_ptr<const ChevalleyAlgebra> chevalley_for(const CartanType& type);

// The simply-laced algebra realised with the Frenkel-Kac sign cocycle on
// the root lattice: basis h_1..h_r, E_alpha, with [E_a, E_-a] = -h_a and
// [E_a, E_b] = eps(a, b) E_{a+b}. Exposed for tests.
LieAlgebra frenkel_kac_algebra(const RootSystem& rs);

}  // namespace orbitkit
