#pragma once

#include <string>
#include <vector>

#include "orbitkit/realform.hpp"

namespace orbitkit {

enum class TheoremTag { RealSymmetric, DiagTensor, ComplexSymmetric };
std::string to_string(TheoremTag t);
TheoremTag theorem_tag_from_string(const std::string& s);

struct NamedCheck {
    std::string name;
    bool passed = false;
    friend bool operator==(const NamedCheck&, const NamedCheck&) = default;
};

struct CoisotropicCertificate {
    TheoremTag theorem_tag = TheoremTag::RealSymmetric;
    std::string algebra_id;
    std::string slice_point_desc;
    std::string branch;  // "A" / "B" for ComplexSymmetric, empty otherwise
    std::size_t lhs_dim = 0;  // dim (h + Z_g(lambda))^perp
    std::size_t rhs_dim = 0;  // dim [X_lambda, h]
    bool containment_verified = false;
    std::vector<NamedCheck> auxiliary_checks;
    std::string note;
    friend bool operator==(const CoisotropicCertificate&, const CoisotropicCertificate&) = default;
};

struct CoisoCheck {
    bool holds = false;
    Subspace lhs;  // (h + Z_g(lambda))^perp
    Subspace rhs;  // [lambda, h]
};

// (h + Z_g(lambda))^perp inside [lambda, h] for the Killing form.
// Throws NotASubalgebra if h is not closed under the bracket.
CoisoCheck check_coisotropic_at(const LieAlgebra& alg, const Subspace& h, const Vector& lambda_point);

// The K-action on the real minimal orbit, at X in g(a; mu).
CoisotropicCertificate certify_real_symmetric(const RealForm& rf);
// Diagonal action on O_min,C x O_min,C at (X_beta, X_-beta).
CoisotropicCertificate certify_diag_tensor(const RootSystem& rs);
// K_C on O_min,C: branch A (theta beta = -beta) checks the slice condition,
// branch B checks that K_C has an open orbit.
CoisotropicCertificate certify_complex_symmetric(const RealForm& rf);

}  // namespace orbitkit
