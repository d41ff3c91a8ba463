#include "orbitkit/realform.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace orbitkit {

bool RestrictedRoot::positive() const {
    for (const auto& x : weight)
        if (sgn(x) != 0) return sgn(x) > 0;
    return false;
}

namespace {

SparseVector make_sparse(std::vector<std::pair<std::size_t, long>> terms) {
    std::sort(terms.begin(), terms.end());
    SparseVector s;
    for (auto [i, c] : terms)
        if (c != 0) s.push_back({static_cast<std::uint32_t>(i), Rational(c)});
    return s;
}

// Splits Chevalley coordinates into theta-orbit blocks so that decomposing
// a vector on the real basis is a set of small solves.
class RealDecomposer {
public:
    RealDecomposer(const std::vector<RealBasisVector>& basis, std::size_t n) : coord_(n, {npos, 0}) {
        std::map<std::vector<std::uint32_t>, std::size_t> key_to_block;
        for (std::size_t v = 0; v < basis.size(); ++v) {
            std::vector<std::uint32_t> key;
            for (const auto& t : basis[v].chevalley) key.push_back(t.index);
            auto [it, fresh] = key_to_block.emplace(key, blocks_.size());
            if (fresh) blocks_.push_back({key, {}, {}});
            blocks_[it->second].vectors.push_back(v);
        }
        for (std::size_t b = 0; b < blocks_.size(); ++b) {
            auto& blk = blocks_[b];
            const std::size_t m = blk.coords.size();
            if (blk.vectors.size() != m) throw InternalError("real basis: block is not square");
            RationalMatrix w(m, m);
            for (std::size_t j = 0; j < m; ++j)
                for (const auto& t : basis[blk.vectors[j]].chevalley) {
                    auto pos = std::find(blk.coords.begin(), blk.coords.end(), t.index) - blk.coords.begin();
                    w(pos, j) = t.coeff;
                }
            blk.inverse = inverse(w);
            for (std::size_t i = 0; i < m; ++i) {
                if (coord_[blk.coords[i]].first != npos) throw InternalError("real basis: overlapping blocks");
                coord_[blk.coords[i]] = {b, i};
            }
        }
        for (const auto& c : coord_)
            if (c.first == npos) throw InternalError("real basis does not span g_C");
    }

    // Coefficients of z on the Chevalley parts w_v of the real basis.
    std::vector<std::pair<std::size_t, Rational>> decompose(const SparseVector& z) const {
        std::map<std::size_t, Vector> parts;
        for (const auto& t : z) {
            auto [b, i] = coord_[t.index];
            auto& v = parts[b];
            if (v.empty()) v.resize(blocks_[b].coords.size());
            v[i] = t.coeff;
        }
        std::vector<std::pair<std::size_t, Rational>> out;
        for (const auto& [b, zb] : parts) {
            Vector y = blocks_[b].inverse.apply(zb);
            for (std::size_t j = 0; j < y.size(); ++j)
                if (sgn(y[j]) != 0) out.emplace_back(blocks_[b].vectors[j], y[j]);
        }
        std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        return out;
    }

private:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
    struct Block {
        std::vector<std::uint32_t> coords;
        std::vector<std::size_t> vectors;
        RationalMatrix inverse;
    };
    std::vector<Block> blocks_;
    std::vector<std::pair<std::size_t, std::size_t>> coord_;
};

RootCoords permute(const RootCoords& c, const std::vector<int>& pi) {
    RootCoords out(c.size());
    for (std::size_t j = 0; j < c.size(); ++j) out[pi[j]] = c[j];
    return out;
}

// dim Z_p(span of the given real basis vectors), the vectors lying in p
std::size_t centralizer_in_p_dim(const LieAlgebra& g, std::size_t dim_k, const std::vector<std::size_t>& elems) {
    const std::size_t n = g.dim(), np = n - dim_k;
    std::map<std::pair<std::size_t, std::size_t>, Vector> rows;
    for (std::size_t t = 0; t < elems.size(); ++t)
        for (std::size_t j = dim_k; j < n; ++j)
            for (const auto& term : g.structure(elems[t], j)) {
                auto& row = rows[{t, term.index}];
                if (row.empty()) row.resize(np);
                row[j - dim_k] = term.coeff;
            }
    std::vector<Vector> rv;
    for (auto& [key, row] : rows) rv.push_back(std::move(row));
    if (rv.empty()) return np;
    return np - rank(RationalMatrix::from_rows(rv, np));
}

}  // namespace

Vector RealForm::theta_apply(const Vector& v) const {
    if (v.size() != theta_.size()) throw DimensionMismatch("theta: vector length differs from dim g_C");
    Vector out(v.size());
    for (std::size_t b = 0; b < v.size(); ++b)
        if (sgn(v[b]) != 0) out[theta_[b].first] += theta_[b].second * v[b];
    return out;
}

RationalMatrix RealForm::theta_matrix() const {
    RationalMatrix t(dim(), dim());
    for (std::size_t i = 0; i < dim(); ++i) t(i, i) = i < dim_k_ ? 1 : -1;
    return t;
}

Vector RealForm::theta_real(const Vector& v) const {
    if (v.size() != dim()) throw DimensionMismatch("theta: vector length differs from dim g");
    Vector out = v;
    for (std::size_t i = dim_k_; i < dim(); ++i) out[i] = -out[i];
    return out;
}

Subspace RealForm::k() const {
    std::vector<std::size_t> idx(dim_k_);
    for (std::size_t i = 0; i < dim_k_; ++i) idx[i] = i;
    return Subspace::coordinate(dim(), idx);
}

Subspace RealForm::p() const {
    std::vector<std::size_t> idx;
    for (std::size_t i = dim_k_; i < dim(); ++i) idx.push_back(i);
    return Subspace::coordinate(dim(), idx);
}

Subspace RealForm::k_complex() const {
    const std::size_t n = theta_.size();
    std::vector<Vector> vecs;
    for (std::size_t b = 0; b < n; ++b) {
        Vector v(n);
        v[b] += 1;
        v[theta_[b].first] += theta_[b].second;
        vecs.push_back(std::move(v));
    }
    return Subspace::span(n, vecs);
}

std::shared_ptr<const RealForm> realize(const RealFormSpec& spec) {
    auto rf = std::make_shared<RealForm>();
    rf->spec_ = spec;
    rf->complex_ = chevalley_for(spec.type);
    const auto& ch = *rf->complex_;
    const auto& rs = ch.roots();
    const auto& G = ch.algebra();
    const int r = rs.rank();
    const std::size_t np = rs.num_positive();
    const std::size_t n = ch.dim();
    const std::string who = spec.id + ": ";

    // --- diagram data
    auto& pi = rf->pi_;
    pi = spec.involution;
    if (pi.empty())
        for (int i = 0; i < r; ++i) pi.push_back(i);
    if (static_cast<int>(pi.size()) != r) throw InvalidInvolution(who + "involution has wrong length");
    for (int i = 0; i < r; ++i)
        if (pi[i] < 0 || pi[i] >= r) throw InvalidInvolution(who + "involution index out of range");
    for (int i = 0; i < r; ++i) {
        if (pi[pi[i]] != i) throw InvalidInvolution(who + "diagram map is not an involution");
        for (int j = 0; j < r; ++j)
            if (rs.cartan(pi[i], pi[j]) != rs.cartan(i, j))
                throw InvalidInvolution(who + "diagram map does not preserve the Cartan matrix");
    }
    auto& s = rf->s_;
    s = spec.signs;
    if (s.empty()) s.assign(r, 1);
    if (static_cast<int>(s.size()) != r) throw InvalidInvolution(who + "signs have wrong length");
    for (int i = 0; i < r; ++i) {
        if (s[i] != 1 && s[i] != -1) throw InvalidInvolution(who + "signs must be +1 or -1");
        if (s[i] != s[pi[i]]) throw InvalidInvolution(who + "theta would not square to the identity");
    }

    // --- theta on the Chevalley basis
    auto& pr = rf->pi_root_;
    pr.resize(rs.roots().size());
    for (std::size_t k = 0; k < rs.roots().size(); ++k) {
        auto idx = rs.index_of(permute(rs.roots()[k].coords, pi));
        if (!idx) throw InvalidInvolution(who + "diagram map does not permute the roots");
        pr[k] = *idx;
    }
    auto& c = rf->c_;
    c.assign(rs.roots().size(), 0);
    for (int i = 0; i < r; ++i) {
        c[rs.simple_root_index(i)] = s[i];
        c[rs.negative_index(rs.simple_root_index(i))] = s[i];
    }
    for (std::size_t k = 0; k < np; ++k) {
        const auto& xi = rs.roots()[k];
        if (xi.height == 1) continue;
        for (int i = 0; i < r; ++i) {
            RootCoords zeta = xi.coords;
            zeta[i] -= 1;
            auto zk = rs.index_of(zeta);
            if (!zk || *zk >= np) continue;
            const int p = rs.string_bounds(zeta, i).first;
            const std::size_t ai = rs.simple_root_index(i);
            // X_xi = [X_ai, X_zeta]/(p+1),  X_-xi = -[X_-ai, X_-zeta]/(p+1)
            Rational cp = Rational(s[i] * c[*zk] * ch.structure_constant(pr[ai], pr[*zk]), p + 1);
            Rational cn = Rational(-s[i] * c[rs.negative_index(*zk)] *
                                       ch.structure_constant(pr[rs.negative_index(ai)], pr[rs.negative_index(*zk)]),
                                   p + 1);
            cp.canonicalize();
            cn.canonicalize();
            // N at the permuted pair relative to the N defining X_{pi xi}
            int base = ch.structure_constant(ai, *zk);
            int nbase = ch.structure_constant(rs.negative_index(ai), rs.negative_index(*zk));
            if (base != p + 1 || nbase != -(p + 1)) throw InternalError("extraspecial sign convention violated");
            if (abs(cp) != 1 || abs(cn) != 1) throw InvalidInvolution(who + "theta does not map root vectors to root vectors");
            c[k] = static_cast<int>(cp.get_num().get_si());
            c[rs.negative_index(k)] = static_cast<int>(cn.get_num().get_si());
            break;
        }
    }
    auto& theta = rf->theta_;
    theta.resize(n);
    for (int i = 0; i < r; ++i) theta[i] = {static_cast<std::size_t>(pi[i]), 1};
    for (std::size_t k = 0; k < rs.roots().size(); ++k) theta[ch.root_index(k)] = {ch.root_index(pr[k]), c[k]};

    for (std::size_t b = 0; b < n; ++b) {
        auto [b2, s2] = theta[theta[b].first];
        if (b2 != b || s2 * theta[b].second != 1) throw InvalidInvolution(who + "theta does not square to the identity");
    }
    for (std::size_t k = 0; k < np; ++k)
        if (c[k] != c[rs.negative_index(k)]) throw InvalidInvolution(who + "c_alpha differs from c_-alpha");
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            // theta[b_a, b_b] == [theta b_a, theta b_b]
            std::map<std::uint32_t, Rational> lhs;
            for (const auto& t : G.structure(a, b)) lhs[theta[t.index].first] += theta[t.index].second * t.coeff;
            const int sign = theta[a].second * theta[b].second;
            SparseVector l, rr;
            for (auto& [i, v] : lhs)
                if (sgn(v) != 0) l.push_back({i, v});
            for (const auto& t : G.structure(theta[a].first, theta[b].first)) rr.push_back({t.index, sign * t.coeff});
            if (l != rr) throw InvalidInvolution(who + "theta is not an automorphism");
        }

    // --- real basis: k = u^theta, p = i u^{-theta}, u the compact form
    std::vector<RealBasisVector> kv, pv;
    std::vector<std::size_t> fund_p;           // positions in pv of H_j - H_{pi j}
    std::map<std::size_t, std::size_t> cayley_p;  // root -> position in pv of X_a + X_-a
    for (int j = 0; j < r; ++j) {
        if (pi[j] == j) {
            kv.push_back({1, make_sparse({{j, 1}})});
        } else if (j < pi[j]) {
            kv.push_back({1, make_sparse({{j, 1}, {pi[j], 1}})});
            fund_p.push_back(pv.size());
            pv.push_back({0, make_sparse({{j, 1}, {pi[j], -1}})});
        }
    }
    for (std::size_t k = 0; k < np; ++k) {
        const std::size_t A = ch.root_index(k), Am = ch.root_index(rs.negative_index(k));
        const long ck = c[k];
        if (pr[k] == k) {
            if (ck == 1) {
                kv.push_back({0, make_sparse({{A, 1}, {Am, -1}})});
                kv.push_back({1, make_sparse({{A, 1}, {Am, 1}})});
            } else {
                cayley_p[k] = pv.size();
                pv.push_back({0, make_sparse({{A, 1}, {Am, 1}})});
                pv.push_back({1, make_sparse({{A, 1}, {Am, -1}})});
            }
        } else if (k < pr[k]) {
            const std::size_t B = ch.root_index(pr[k]), Bm = ch.root_index(rs.negative_index(pr[k]));
            kv.push_back({0, make_sparse({{A, 1}, {Am, -1}, {B, ck}, {Bm, -ck}})});
            kv.push_back({1, make_sparse({{A, 1}, {Am, 1}, {B, ck}, {Bm, ck}})});
            pv.push_back({1, make_sparse({{A, 1}, {Am, -1}, {B, -ck}, {Bm, ck}})});
            pv.push_back({0, make_sparse({{A, 1}, {Am, 1}, {B, -ck}, {Bm, -ck}})});
        }
    }
    rf->dim_k_ = kv.size();
    auto& basis = rf->basis_;
    basis = kv;
    basis.insert(basis.end(), pv.begin(), pv.end());
    if (basis.size() != n) throw InternalError(who + "real basis has wrong size");
    for (std::size_t v = 0; v < n; ++v) {
        Vector w = dense_from_sparse(basis[v].chevalley, n);
        Vector tw = rf->theta_apply(w);
        if (tw != (v < rf->dim_k_ ? w : scaled(w, -1))) throw InternalError(who + "real basis vector is not a theta eigenvector");
    }
    if (spec.dim_k && static_cast<std::size_t>(*spec.dim_k) != rf->dim_k_)
        throw ExpectationMismatch(who + "dim k is " + std::to_string(rf->dim_k_) + ", catalog says " +
                                  std::to_string(*spec.dim_k));

    // --- real structure constants
    RealDecomposer dec(basis, n);
    std::vector<SparseVector> table(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            SparseVector w = G.bracket_sparse(basis[a].chevalley, basis[b].chevalley);
            if (w.empty()) continue;
            SparseVector out;
            for (auto& [v, y] : dec.decompose(w)) {
                const int e = basis[a].parity + basis[b].parity - basis[v].parity;
                if (e != 0 && e != 2) throw InternalError(who + "real span is not closed under the bracket");
                out.push_back({static_cast<std::uint32_t>(v), e == 2 ? Rational(-y) : y});
            }
            table[a * n + b] = std::move(out);
        }
    std::vector<std::string> labels;
    for (std::size_t v = 0; v < n; ++v) labels.push_back((v < rf->dim_k_ ? "k" : "p") + std::to_string(v));
    rf->real_ = LieAlgebra(spec.id, std::move(labels), std::move(table));

    // --- Cartan involution: Killing form negative on k, positive on p
    const auto& K = rf->real_.killing();
    std::vector<std::size_t> ki(rf->dim_k_), pi_idx;
    for (std::size_t i = 0; i < rf->dim_k_; ++i) ki[i] = i;
    for (std::size_t i = rf->dim_k_; i < n; ++i) pi_idx.push_back(i);
    for (auto i : ki)
        for (auto j : pi_idx)
            if (sgn(K(i, j)) != 0) throw NotCartanInvolution(who + "k and p are not Killing-orthogonal");
    if (!is_negative_definite(K.principal_submatrix(ki)))
        throw NotCartanInvolution(who + "Killing form is not negative definite on k");
    if (!is_positive_definite(K.principal_submatrix(pi_idx)))
        throw NotCartanInvolution(who + "Killing form is not positive definite on p");

    // --- maximal abelian a in p: a_fund plus Cayley transforms of a
    // strongly orthogonal set of noncompact imaginary roots
    std::vector<std::size_t> fund;
    for (auto q : fund_p) fund.push_back(rf->dim_k_ + q);
    std::vector<std::size_t> cand;
    for (const auto& [root, q] : cayley_p) cand.push_back(root);
    std::stable_sort(cand.begin(), cand.end(), [&](std::size_t x, std::size_t y) {
        return rs.roots()[x].height > rs.roots()[y].height;
    });
    auto strongly_orthogonal = [&](std::size_t x, std::size_t y) {
        const auto& a = rs.roots()[x].coords;
        const auto& b = rs.roots()[y].coords;
        RootCoords sum(r), diff(r);
        for (int i = 0; i < r; ++i) {
            sum[i] = a[i] + b[i];
            diff[i] = a[i] - b[i];
        }
        return x != y && !rs.is_root(sum) && !rs.is_root(diff);
    };
    std::vector<std::size_t> chosen, best;
    std::size_t leaves = 0;
    bool found = false;
    std::function<void(std::size_t)> dfs = [&](std::size_t start) {
        if (found || leaves > 20000) return;
        bool extended = false;
        for (std::size_t j = start; j < cand.size() && !found; ++j) {
            bool ok = std::all_of(chosen.begin(), chosen.end(), [&](std::size_t x) { return strongly_orthogonal(x, cand[j]); });
            if (!ok) continue;
            extended = true;
            chosen.push_back(cand[j]);
            dfs(j + 1);
            chosen.pop_back();
        }
        if (extended || found) return;
        for (std::size_t j = 0; j < start; ++j) {
            if (std::find(chosen.begin(), chosen.end(), cand[j]) != chosen.end()) continue;
            if (std::all_of(chosen.begin(), chosen.end(), [&](std::size_t x) { return strongly_orthogonal(x, cand[j]); }))
                return;  // not maximal; reached along another branch
        }
        ++leaves;
        std::vector<std::size_t> elems = fund;
        for (auto x : chosen) elems.push_back(rf->dim_k_ + cayley_p.at(x));
        if (centralizer_in_p_dim(rf->real_, rf->dim_k_, elems) == elems.size()) {
            found = true;
            best = chosen;
        }
    };
    dfs(0);
    if (!found) throw RankMismatch(who + "no maximal abelian subspace found by Cayley transforms");
    rf->cayley_ = best;
    std::vector<std::size_t> a_idx = fund;
    for (auto x : best) a_idx.push_back(rf->dim_k_ + cayley_p.at(x));
    if (static_cast<int>(a_idx.size()) != spec.real_rank)
        throw RankMismatch(who + "real rank is " + std::to_string(a_idx.size()) + ", catalog says " +
                           std::to_string(spec.real_rank));
    for (auto i : a_idx) rf->a_basis_.push_back(unit_vector(n, i));
    rf->a_ = Subspace::coordinate(n, a_idx);

    // --- restricted roots
    auto ws = joint_eigenspaces(rf->real_, rf->a_basis_, Subspace::full(n));
    for (auto& w : ws) {
        if (is_zero(w.weight)) {
            rf->m_ = subspace_intersect(w.space, rf->k());
            if (rf->m_.dim() + rf->a_.dim() != w.space.dim() || !subspace_contains(w.space, rf->a_))
                throw InternalError(who + "zero restricted weight space is not m + a");
        } else {
            rf->restricted_.push_back({w.weight, w.space});
        }
    }
    if (rf->restricted_.empty()) throw InternalError(who + "no restricted roots");
    std::vector<Vector> nplus;
    for (const auto& rr : rf->restricted_)
        if (rr.positive())
            for (const auto& v : rr.space.vectors()) nplus.push_back(v);
    rf->n_plus_ = Subspace::span(n, nplus);

    const std::size_t sdim = a_idx.size();
    RationalMatrix ga(sdim, sdim);
    for (std::size_t t = 0; t < sdim; ++t)
        for (std::size_t u = 0; u < sdim; ++u) ga(t, u) = K(a_idx[t], a_idx[u]);
    const Vector& muw = rf->mu().weight;
    auto u = solve(ga, muw);
    if (!u) throw InternalError(who + "Killing form is degenerate on a");
    Rational mu_h = dot(*u, muw);
    rf->a_mu_ = Vector(n);
    for (std::size_t t = 0; t < sdim; ++t) rf->a_mu_[a_idx[t]] = 2 * (*u)[t] / mu_h;
    rf->x_ = rf->mu().space.vectors().front();

    // --- h' = a_C + t_C in Chevalley coordinates
    auto& sp = rf->split_;
    for (auto i : a_idx) {
        if (basis[i].parity != 0) throw InternalError(who + "a basis vector is not rational in g_C");
        sp.a_basis.push_back(dense_from_sparse(basis[i].chevalley, n));
    }
    std::vector<Vector> cons;
    for (int j = 0; j < r; ++j)
        if (j < pi[j]) {
            Vector row(r);
            row[j] = 1;
            row[pi[j]] = -1;
            cons.push_back(row);
        }
    for (auto g : best) {
        Vector row(r);
        for (int j = 0; j < r; ++j) row[j] = rs.pairing(rs.roots()[g].coords, rs.roots()[rs.simple_root_index(j)].coords);
        cons.push_back(row);
    }
    Subspace t = cons.empty() ? Subspace::full(r) : kernel(RationalMatrix::from_rows(cons, r));
    for (const auto& x : t.vectors()) {
        Vector h(n);
        for (int j = 0; j < r; ++j) h[j] = x[j];
        sp.t_basis.push_back(h);
    }
    std::vector<Vector> hprime = sp.a_basis;
    hprime.insert(hprime.end(), sp.t_basis.begin(), sp.t_basis.end());
    auto cw = joint_eigenspaces(G, hprime, Subspace::full(n));
    for (auto& w : cw) {
        if (is_zero(w.weight)) {
            if (w.space.dim() != static_cast<std::size_t>(r)) throw InternalError(who + "h' is not a Cartan subalgebra");
            continue;
        }
        if (w.space.dim() != 1) throw InternalError(who + "h' root space is not one-dimensional");
        sp.roots.push_back(w);
    }
    if (sp.roots.size() != 2 * np) throw InternalError(who + "wrong number of roots for h'");
    const auto& beta = sp.roots.front();
    Vector minus = scaled(beta.weight, -1);
    auto it = std::find_if(sp.roots.begin(), sp.roots.end(), [&](const WeightSpace& w) { return w.weight == minus; });
    if (it == sp.roots.end()) throw InternalError(who + "-beta is not a root");
    sp.x_beta = beta.space.vectors().front();
    Vector xm = it->space.vectors().front();
    Vector w = G.bracket(sp.x_beta, xm);
    Vector wx = G.bracket(w, sp.x_beta);
    std::size_t piv = beta.space.pivots().front();
    Rational lambda = wx[piv] / sp.x_beta[piv];
    if (wx != scaled(sp.x_beta, lambda) || sgn(lambda) == 0) throw InternalError(who + "[X_b, X_-b] does not act on X_b");
    sp.h_beta = scaled(w, 2 / lambda);
    sp.x_minus_beta = scaled(xm, 2 / lambda);
    for (std::size_t i = 0; i < sdim; ++i)
        if (beta.weight[i] != muw[i]) throw InternalError(who + "beta does not restrict to mu");
    for (auto& wa : joint_eigenspaces(G, sp.a_basis, Subspace::full(n)))
        if (wa.weight == muw) sp.g_mu = wa.space;
    if (sp.g_mu.dim() != rf->mu().multiplicity()) throw InternalError(who + "complexified g(a; mu) has wrong dimension");
    return rf;
}

Subspace center_of_k(const RealForm& rf) {
    const auto& g = rf.algebra();
    const std::size_t dk = rf.dim_k();
    std::map<std::pair<std::size_t, std::size_t>, Vector> rows;
    for (std::size_t t = 0; t < dk; ++t)
        for (std::size_t j = 0; j < dk; ++j)
            for (const auto& term : g.structure(t, j)) {
                auto& row = rows[{t, term.index}];
                if (row.empty()) row.resize(dk);
                row[j] = term.coeff;
            }
    std::vector<Vector> rv;
    for (auto& [key, row] : rows) rv.push_back(std::move(row));
    Subspace z = rv.empty() ? Subspace::full(dk) : kernel(RationalMatrix::from_rows(rv, dk));
    std::vector<Vector> full;
    for (const auto& v : z.vectors()) {
        Vector x(rf.dim());
        std::copy(v.begin(), v.end(), x.begin());
        full.push_back(std::move(x));
    }
    return Subspace::span(rf.dim(), full);
}

bool hermitian_type(const RealForm& rf) { return center_of_k(rf).dim() > 0; }

bool theta_beta_test(const RealForm& rf) {
    const auto& sp = rf.split();
    Vector tx = rf.theta_apply(sp.x_beta);
    return Subspace::span(tx.size(), {sp.x_minus_beta}).contains(tx);
}

int minimality_case(const RealForm& rf) {
    if (!theta_beta_test(rf)) return 1;
    return hermitian_type(rf) ? 3 : 2;
}

std::size_t n_real(const RealForm& rf) {
    const std::size_t z = rf.algebra().centralizer(rf.x()).dim();
    if ((rf.dim() - z) % 2 != 0) throw InternalError(rf.id() + ": orbit dimension is odd");
    const std::size_t n = (rf.dim() - z) / 2;
    const int expected = rf.spec().n_g.value_or(rf.complex().roots().dual_coxeter_number() - 1);
    if (static_cast<int>(n) != expected)
        throw ExpectationMismatch(rf.id() + ": n(g) is " + std::to_string(n) + ", catalog says " + std::to_string(expected));
    return n;
}

Sl2Triple find_sl2_triple(const RealForm& rf) {
    const auto& g = rf.algebra();
    Sl2Triple t;
    t.h = rf.a_mu();
    t.e = rf.x();
    Vector tx = rf.theta_real(t.e);
    Vector w = g.bracket(t.e, tx);
    std::size_t k = 0;
    while (k < w.size() && sgn(w[k]) == 0) ++k;
    if (k == w.size()) throw InternalError(rf.id() + ": [X, theta X] vanishes");
    t.c_prime = t.h[k] / w[k];
    if (scaled(w, t.c_prime) != t.h) throw InternalError(rf.id() + ": [X, theta X] is not proportional to A_mu");
    t.f = scaled(tx, t.c_prime);
    if (g.bracket(t.h, t.e) != scaled(t.e, 2) || g.bracket(t.h, t.f) != scaled(t.f, -2) || g.bracket(t.e, t.f) != t.h)
        throw InternalError(rf.id() + ": sl2 relations fail");
    return t;
}

}  // namespace orbitkit
