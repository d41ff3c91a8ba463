#pragma once

#include <string>

#include "orbitkit/realform.hpp"

namespace orbitkit {

enum class OrbitKind { ComplexMinimal, RealMinimal, RealMinimalPlus, RealMinimalMinus, ComplexificationOfRealMinimal };
std::string to_string(OrbitKind k);

struct OrbitDescriptor {
    OrbitKind kind = OrbitKind::ComplexMinimal;
    std::string algebra_id;
    Vector representative;   // coordinates in the algebra's basis
    std::size_t dim = 0;
    std::size_t half_dim = 0;
    std::size_t centralizer_dim = 0;
};

struct NComplex {
    std::size_t via_dual_coxeter = 0;
    std::size_t via_centralizer = 0;
};

// n(g_C) by h^vee - 1 and by the centralizer of X_beta; throws InternalError
// if the two disagree.
std::size_t n_complex(const RootSystem& rs);
NComplex n_complex_channels(const RootSystem& rs);

bool is_nilpotent(const LieAlgebra& alg, const Vector& x);

// Representative X_beta. Checks the centralizer against
//   Z(X_beta) = sum_{alpha > 0, alpha perp beta} g_{-alpha} + h^{perp beta} + n^+.
OrbitDescriptor complex_minimal_orbit(const ChevalleyAlgebra& alg);
// Exact expected centralizer of X_beta from the root data.
Subspace expected_highest_centralizer(const ChevalleyAlgebra& alg);

// Representative X in g(a; mu); minus = true gives -X (Case 3 companion).
OrbitDescriptor real_minimal_orbit(const RealForm& rf, bool minus = false);
// The G_C-orbit of X inside g_C, i.e. O^C_min,R, with X_beta of h' as representative.
OrbitDescriptor complexified_real_minimal_orbit(const RealForm& rf);

Subspace centralizer(const LieAlgebra& alg, const Vector& x);
// Z_g(h; lambda) = [x, h]^perp for the Killing form.
Subspace relative_centralizer(const LieAlgebra& alg, const Subspace& h, const Vector& x);
// lambda([x, y]) = B(lambda_point, [x, y])
Rational kks_pairing(const LieAlgebra& alg, const Vector& lambda_point, const Vector& x, const Vector& y);

}  // namespace orbitkit
