#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "orbitkit/chevalley.hpp"
#include "orbitkit/weights.hpp"

namespace orbitkit {

// Real form given by Vogan-diagram data on the Chevalley basis: a diagram
// involution pi of the Dynkin diagram and a sign s_i per node, with
//   theta(X_{alpha_i}) = s_i X_{pi alpha_i},  theta(X_{-alpha_i}) = s_i X_{-pi alpha_i},
//   theta(H_i) = H_{pi i}.
// The Cartan subalgebra h is then theta-stable and maximally compact.
struct RealFormSpec {
    std::string id;
    CartanType type;
    std::vector<int> involution;  // 0-based; identity when empty
    std::vector<int> signs;       // +1 / -1 per node; all +1 when empty
    int real_rank = 0;
    std::optional<int> n_g;       // nullopt: n(g) = n(g_C)
    std::optional<int> dim_k;     // optional cross-check
    bool slow = false;
};

// Real basis vector i^parity * w with w a rational Chevalley vector.
struct RealBasisVector {
    int parity = 0;
    SparseVector chevalley;
};

struct RestrictedRoot {
    Vector weight;   // values on a_basis()
    Subspace space;  // real coordinates
    std::size_t multiplicity() const { return space.dim(); }
    bool positive() const;
};

struct Sl2Triple {
    Vector h, e, f;     // [h,e] = 2e, [h,f] = -2f, [e,f] = h
    Rational c_prime;   // f = c_prime * theta(e)
};

// Data for h' = a_C + t_C, a theta-stable Cartan whose a-part is maximal,
// in Chevalley coordinates.
struct SplitCartanData {
    std::vector<Vector> a_basis;
    std::vector<Vector> t_basis;
    std::vector<WeightSpace> roots;  // nonzero weights, descending; roots[0] is beta
    Vector x_beta, x_minus_beta, h_beta;
    Subspace g_mu;                   // g_C(a; mu)
};

class RealForm {
public:
    const RealFormSpec& spec() const { return spec_; }
    const std::string& id() const { return spec_.id; }
    const ChevalleyAlgebra& complex() const { return *complex_; }
    std::shared_ptr<const ChevalleyAlgebra> complex_ptr() const { return complex_; }

    // g_R in the real basis: k first, then p.
    const LieAlgebra& algebra() const { return real_; }
    std::size_t dim() const { return real_.dim(); }
    const std::vector<RealBasisVector>& real_basis() const { return basis_; }
    std::size_t dim_k() const { return dim_k_; }
    std::size_t dim_p() const { return dim() - dim_k_; }

    // theta on the Chevalley basis: b -> sign * b'.
    const std::vector<std::pair<std::size_t, int>>& theta_complex() const { return theta_; }
    Vector theta_apply(const Vector& chevalley) const;
    RationalMatrix theta_matrix() const;  // on the real basis
    Vector theta_real(const Vector& real) const;

    // Noncompact imaginary positive roots used for the Cayley transform.
    const std::vector<std::size_t>& cayley_roots() const { return cayley_; }

    Subspace k() const;
    Subspace p() const;
    const Subspace& a() const { return a_; }
    const std::vector<Vector>& a_basis() const { return a_basis_; }  // real coordinates
    const Subspace& m() const { return m_; }
    const Subspace& n_plus() const { return n_plus_; }
    Subspace k_complex() const;  // theta-fixed part of g_C, Chevalley coordinates

    const std::vector<RestrictedRoot>& restricted_roots() const { return restricted_; }
    const RestrictedRoot& mu() const { return restricted_.front(); }
    const Vector& a_mu() const { return a_mu_; }   // mu(A_mu) = 2, Killing-orthogonal to ker mu
    const Vector& x() const { return x_; }         // nonzero element of g(a; mu)

    const SplitCartanData& split() const { return split_; }

    // sign c_alpha with theta(X_alpha) = c_alpha X_{pi alpha}, by root index
    int c(std::size_t root) const { return c_.at(root); }
    std::size_t pi_root(std::size_t root) const { return pi_root_.at(root); }
    int pi_node(int i) const { return pi_.at(i); }

private:
    friend std::shared_ptr<const RealForm> realize(const RealFormSpec& spec);
    RealFormSpec spec_;
    std::shared_ptr<const ChevalleyAlgebra> complex_;
    std::vector<int> pi_;
    std::vector<int> s_;
    std::vector<std::size_t> pi_root_;
    std::vector<int> c_;
    std::vector<std::pair<std::size_t, int>> theta_;
    std::vector<RealBasisVector> basis_;
    std::size_t dim_k_ = 0;
    LieAlgebra real_;
    std::vector<std::size_t> cayley_;
    std::vector<Vector> a_basis_;
    Subspace a_, m_, n_plus_;
    std::vector<RestrictedRoot> restricted_;
    Vector a_mu_, x_;
    SplitCartanData split_;
};

// Builds and validates. Throws InvalidInvolution, NotCartanInvolution,
// RankMismatch or ExpectationMismatch (dim_k) on bad data.
std::shared_ptr<const RealForm> realize(const RealFormSpec& spec);

bool hermitian_type(const RealForm& rf);
// theta(beta) == -beta for the highest root beta of h' = a_C + t_C.
bool theta_beta_test(const RealForm& rf);
// 1: theta beta != -beta; 3: theta beta = -beta and Hermitian; 2 otherwise.
int minimality_case(const RealForm& rf);
// (dim g - dim Z_g(X)) / 2 for X in g(a; mu). Throws ExpectationMismatch when
// it differs from spec().n_g (or from n(g_C) when n_g is unset).
std::size_t n_real(const RealForm& rf);
Sl2Triple find_sl2_triple(const RealForm& rf);
Subspace center_of_k(const RealForm& rf);

}  // namespace orbitkit
