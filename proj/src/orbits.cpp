#include "orbitkit/orbits.hpp"

#include "orbitkit/errors.hpp"

namespace orbitkit {

std::string to_string(OrbitKind k) {
    switch (k) {
    case OrbitKind::ComplexMinimal: return "ComplexMinimal";
    case OrbitKind::RealMinimal: return "RealMinimal";
    case OrbitKind::RealMinimalPlus: return "RealMinimalPlus";
    case OrbitKind::RealMinimalMinus: return "RealMinimalMinus";
    case OrbitKind::ComplexificationOfRealMinimal: return "ComplexificationOfRealMinimal";
    }
    return "?";
}

bool is_nilpotent(const LieAlgebra& alg, const Vector& x) {
    const std::size_t n = alg.dim();
    if (x.size() != n) throw DimensionMismatch("nilpotency test: vector length differs from dim");
    for (std::size_t j = 0; j < n; ++j) {
        Vector v = unit_vector(n, j);
        std::size_t steps = 0;
        while (!is_zero(v)) {
            if (++steps > n) return false;
            v = alg.bracket(x, v);
        }
    }
    return true;
}

Subspace centralizer(const LieAlgebra& alg, const Vector& x) {
    if (x.size() != alg.dim()) throw DimensionMismatch("centralizer: vector length differs from dim");
    return alg.centralizer(x);
}

Subspace relative_centralizer(const LieAlgebra& alg, const Subspace& h, const Vector& x) {
    if (h.ambient_dim() != alg.dim() || x.size() != alg.dim())
        throw DimensionMismatch("relative centralizer: dimensions differ");
    return orth_complement(alg.bracket_space(x, h), alg.killing());
}

Rational kks_pairing(const LieAlgebra& alg, const Vector& lambda_point, const Vector& x, const Vector& y) {
    return alg.killing(lambda_point, alg.bracket(x, y));
}

NComplex n_complex_channels(const RootSystem& rs) {
    NComplex out;
    out.via_dual_coxeter = static_cast<std::size_t>(rs.dual_coxeter_number() - 1);
    auto ch = chevalley_for(rs.type());
    Vector x = ch->root_vector(rs.highest_root());
    const std::size_t z = ch->algebra().centralizer(x).dim();
    if ((ch->dim() - z) % 2) throw InternalError(rs.type().name() + ": odd orbit dimension");
    out.via_centralizer = (ch->dim() - z) / 2;
    return out;
}

std::size_t n_complex(const RootSystem& rs) {
    auto c = n_complex_channels(rs);
    if (c.via_dual_coxeter != c.via_centralizer)
        throw InternalError(rs.type().name() + ": n(g_C) channels disagree (" + std::to_string(c.via_dual_coxeter) +
                            " vs " + std::to_string(c.via_centralizer) + ")");
    return c.via_dual_coxeter;
}

Subspace expected_highest_centralizer(const ChevalleyAlgebra& alg) {
    const auto& rs = alg.roots();
    const std::size_t n = alg.dim(), np = rs.num_positive();
    const int r = rs.rank();
    const auto& beta = rs.roots()[rs.highest_root()].coords;
    std::vector<Vector> vecs;
    for (std::size_t k = 0; k < np; ++k) {
        vecs.push_back(alg.root_vector(k));
        if (k != rs.highest_root() && rs.pairing(rs.roots()[k].coords, beta) == 0)
            vecs.push_back(alg.root_vector(rs.negative_index(k)));
    }
    Vector row(r);
    for (int j = 0; j < r; ++j) row[j] = rs.pairing(beta, rs.roots()[rs.simple_root_index(j)].coords);
    const Subspace perp = kernel(RationalMatrix::from_rows({row}, r));
    for (const auto& h : perp.vectors()) {
        Vector v(n);
        for (int j = 0; j < r; ++j) v[j] = h[j];
        vecs.push_back(v);
    }
    return Subspace::span(n, vecs);
}

OrbitDescriptor complex_minimal_orbit(const ChevalleyAlgebra& alg) {
    const auto& rs = alg.roots();
    OrbitDescriptor o;
    o.kind = OrbitKind::ComplexMinimal;
    o.algebra_id = rs.type().name();
    o.representative = alg.root_vector(rs.highest_root());
    Subspace z = alg.algebra().centralizer(o.representative);
    if (!(z == expected_highest_centralizer(alg)))
        throw InternalError(o.algebra_id + ": centralizer of X_beta differs from the root-data prediction");
    if (!is_nilpotent(alg.algebra(), o.representative)) throw InternalError(o.algebra_id + ": X_beta is not nilpotent");
    o.centralizer_dim = z.dim();
    o.dim = alg.dim() - z.dim();
    o.half_dim = o.dim / 2;
    if (o.half_dim != n_complex(rs)) throw InternalError(o.algebra_id + ": orbit dimension differs from 2 n(g_C)");
    return o;
}

OrbitDescriptor real_minimal_orbit(const RealForm& rf, bool minus) {
    OrbitDescriptor o;
    const int c = minimality_case(rf);
    if (minus && c != 3) throw InvalidForm(rf.id() + ": a second real minimal orbit exists only in the Hermitian case");
    o.kind = c == 3 ? (minus ? OrbitKind::RealMinimalMinus : OrbitKind::RealMinimalPlus) : OrbitKind::RealMinimal;
    o.algebra_id = rf.id();
    o.representative = minus ? scaled(rf.x(), -1) : rf.x();
    o.centralizer_dim = rf.algebra().centralizer(o.representative).dim();
    o.dim = rf.dim() - o.centralizer_dim;
    o.half_dim = o.dim / 2;
    if (o.dim % 2) throw InternalError(rf.id() + ": odd orbit dimension");
    return o;
}

OrbitDescriptor complexified_real_minimal_orbit(const RealForm& rf) {
    // The real basis of g_R is also a C-basis of g_C with the same structure
    // constants, so the real representative serves for the complex orbit and
    // complex dimensions equal real ones.
    OrbitDescriptor o = real_minimal_orbit(rf);
    o.kind = OrbitKind::ComplexificationOfRealMinimal;
    o.algebra_id = rf.id() + "_C";
    return o;
}

}  // namespace orbitkit
