#include "orbitkit/coiso.hpp"

#include "orbitkit/errors.hpp"
#include "orbitkit/orbits.hpp"

namespace orbitkit {

namespace {

const char* kDensityNote =
    "span checks are the infinitesimal form of the density of the swept slice; "
    "density itself rests on the group-level decomposition";

void finish(CoisotropicCertificate& c) {
    if (!c.containment_verified) throw CertificationFailed(c.algebra_id + ": coisotropic containment fails");
    for (const auto& a : c.auxiliary_checks)
        if (!a.passed) throw CertificationFailed(c.algebra_id + ": " + a.name + " fails");
}

Subspace line(std::size_t n, const Vector& v) { return Subspace::span(n, {v}); }

}  // namespace

std::string to_string(TheoremTag t) {
    switch (t) {
    case TheoremTag::RealSymmetric: return "RealSymmetric";
    case TheoremTag::DiagTensor: return "DiagTensor";
    case TheoremTag::ComplexSymmetric: return "ComplexSymmetric";
    }
    return "?";
}

TheoremTag theorem_tag_from_string(const std::string& s) {
    if (s == "RealSymmetric") return TheoremTag::RealSymmetric;
    if (s == "DiagTensor") return TheoremTag::DiagTensor;
    if (s == "ComplexSymmetric") return TheoremTag::ComplexSymmetric;
    throw ParseError("unknown theorem tag " + s);
}

CoisoCheck check_coisotropic_at(const LieAlgebra& alg, const Subspace& h, const Vector& lambda_point) {
    if (h.ambient_dim() != alg.dim() || lambda_point.size() != alg.dim())
        throw DimensionMismatch("coisotropic check: dimensions differ");
    if (is_zero(lambda_point)) throw InvalidForm("coisotropic check needs a nonzero point");
    if (!alg.is_subalgebra(h)) throw NotASubalgebra("coisotropic check: h is not a subalgebra");
    CoisoCheck c;
    c.lhs = orth_complement(subspace_sum(h, alg.centralizer(lambda_point)), alg.killing());
    c.rhs = alg.bracket_space(lambda_point, h);
    c.holds = subspace_contains(c.rhs, c.lhs);
    return c;
}

CoisotropicCertificate certify_real_symmetric(const RealForm& rf) {
    const auto& g = rf.algebra();
    const std::size_t n = g.dim();
    CoisotropicCertificate c;
    c.theorem_tag = TheoremTag::RealSymmetric;
    c.algebra_id = rf.id();
    c.slice_point_desc = "X in g(a;mu), first basis vector";
    c.note = kDensityNote;
    const Subspace k = rf.k();
    const Vector& x = rf.x();
    auto chk = check_coisotropic_at(g, k, x);
    c.lhs_dim = chk.lhs.dim();
    c.rhs_dim = chk.rhs.dim();
    c.containment_verified = chk.holds;

    const Subspace z = g.centralizer(x);
    const Subspace amu = line(n, rf.a_mu());
    c.auxiliary_checks.push_back({"iwasawa_span", subspace_sum(subspace_sum(k, amu), z).dim() == n});
    const Subspace perp = orth_complement(subspace_sum(k, z), g.killing());
    c.auxiliary_checks.push_back({"perp_in_line", subspace_contains(amu, perp)});
    bool sl2 = false;
    try {
        find_sl2_triple(rf);
        sl2 = chk.rhs.contains(rf.a_mu());
    } catch (const InternalError&) {
        sl2 = false;
    }
    c.auxiliary_checks.push_back({"sl2_found", sl2});
    finish(c);
    return c;
}

CoisotropicCertificate certify_diag_tensor(const RootSystem& rs) {
    auto ch = chevalley_for(rs.type());
    const LieAlgebra& G = ch->algebra();
    const std::size_t n = G.dim();
    const LieAlgebra S = direct_sum(G, G);
    CoisotropicCertificate c;
    c.theorem_tag = TheoremTag::DiagTensor;
    c.algebra_id = rs.type().name();
    c.slice_point_desc = "(X_beta, X_-beta)";
    c.note = kDensityNote;

    const std::size_t hb = rs.highest_root();
    const Vector X = ch->root_vector(hb), Y = ch->root_vector(rs.negative_index(hb));
    auto pair = [n](const Vector& a, const Vector& b) {
        Vector v(2 * n);
        std::copy(a.begin(), a.end(), v.begin());
        std::copy(b.begin(), b.end(), v.begin() + n);
        return v;
    };
    const Vector lambda = pair(X, Y);
    const Subspace diag = diag_subalgebra(S);
    auto chk = check_coisotropic_at(S, diag, lambda);
    c.lhs_dim = chk.lhs.dim();
    c.rhs_dim = chk.rhs.dim();
    c.containment_verified = chk.holds;

    Vector hbeta(n);
    const Vector cor = ch->coroot_element(hb);
    std::copy(cor.begin(), cor.end(), hbeta.begin());
    const Vector anti = pair(hbeta, scaled(hbeta, -1));
    c.auxiliary_checks.push_back({"lhs_is_line", chk.lhs == line(2 * n, anti)});

    const Subspace zx = G.centralizer(X), zy = G.centralizer(Y);
    std::vector<Vector> zz;
    for (const auto& v : zx.vectors()) zz.push_back(pair(v, Vector(n)));
    for (const auto& v : zy.vectors()) zz.push_back(pair(Vector(n), v));
    zz.push_back(pair(hbeta, Vector(n)));
    const Subspace open = subspace_sum(diag, Subspace::span(2 * n, zz));
    c.auxiliary_checks.push_back({"bruhat_span", open.dim() == 2 * n});

    Vector xy = X;
    axpy(xy, 1, Y);
    const Vector br = S.bracket(lambda, pair(xy, xy));
    c.auxiliary_checks.push_back({"h_beta_in_bracket", !is_zero(br) && line(2 * n, anti).contains(br)});
    finish(c);
    return c;
}

CoisotropicCertificate certify_complex_symmetric(const RealForm& rf) {
    const auto& G = rf.complex().algebra();
    const std::size_t n = G.dim();
    const auto& sp = rf.split();
    CoisotropicCertificate c;
    c.theorem_tag = TheoremTag::ComplexSymmetric;
    c.algebra_id = rf.id();
    c.note = kDensityNote;
    const Subspace kc = rf.k_complex();
    const Vector& x = sp.x_beta;
    const bool branch_a = theta_beta_test(rf);
    c.branch = branch_a ? "A" : "B";
    c.slice_point_desc = branch_a ? "X_beta spanning g_C(a;mu)" : "X_beta, highest root vector for a_C + t_C";

    auto chk = check_coisotropic_at(G, kc, x);
    c.lhs_dim = chk.lhs.dim();
    c.rhs_dim = chk.rhs.dim();
    c.containment_verified = chk.holds;
    const Subspace z = G.centralizer(x);
    if (branch_a) {
        const Subspace hb = line(n, sp.h_beta);
        c.auxiliary_checks.push_back({"x_in_g_mu", sp.g_mu.dim() == 1 && sp.g_mu.contains(x)});
        c.auxiliary_checks.push_back({"iwasawa_span", subspace_sum(subspace_sum(kc, hb), z).dim() == n});
        c.auxiliary_checks.push_back(
            {"perp_in_line", subspace_contains(hb, orth_complement(subspace_sum(kc, z), G.killing()))});
        c.auxiliary_checks.push_back({"sl2_found", chk.rhs.contains(sp.h_beta)});
    } else {
        const Subspace tangent = G.bracket_space(x, Subspace::full(n));
        c.auxiliary_checks.push_back({"open_orbit", chk.rhs == tangent});
        c.auxiliary_checks.push_back({"h_beta_membership", subspace_sum(kc, z).contains(sp.h_beta)});
    }
    finish(c);
    return c;
}

}  // namespace orbitkit
