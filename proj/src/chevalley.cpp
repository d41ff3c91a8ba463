#include "orbitkit/chevalley.hpp"

#include <map>
#include <mutex>

namespace orbitkit {

namespace {

bool simply_laced(Family f) { return f == Family::A || f == Family::D || f == Family::E; }

// eps(alpha_i, alpha_j) = -1 exactly when i == j, or i < j with the nodes joined.
int cocycle(const RootSystem& rs, const RootCoords& a, const RootCoords& b) {
    const int n = rs.rank();
    int parity = 0;
    for (int i = 0; i < n; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < n; ++j) {
            if (b[j] == 0) continue;
            bool odd = (i == j) || (i < j && rs.gram()(i, j) != 0);
            if (odd) parity += a[i] * b[j];
        }
    }
    return (parity % 2 == 0) ? 1 : -1;
}

std::string root_label(const RootCoords& c) {
    bool neg = false;
    for (int x : c)
        if (x < 0) neg = true;
    std::string s = neg ? "X-" : "X";
    for (int x : c) s += std::to_string(neg ? -x : x);
    return s;
}

struct Folding {
    CartanType big;
    std::vector<std::vector<int>> orbits;  // 0-based nodes of the big diagram
};

Folding folding_for(const CartanType& t) {
    const int n = t.rank;
    Folding f;
    switch (t.family) {
        case Family::B:
            f.big = {Family::D, n + 1};
            for (int i = 0; i < n - 1; ++i) f.orbits.push_back({i});
            f.orbits.push_back({n - 1, n});
            break;
        case Family::C:
            f.big = {Family::A, 2 * n - 1};
            for (int i = 0; i < n - 1; ++i) f.orbits.push_back({i, 2 * n - 2 - i});
            f.orbits.push_back({n - 1});
            break;
        case Family::F:
            f.big = {Family::E, 6};
            f.orbits = {{1}, {3}, {2, 4}, {0, 5}};
            break;
        case Family::G:
            f.big = {Family::D, 4};
            f.orbits = {{0, 2, 3}, {1}};
            break;
        default:
            throw InternalError("no folding for simply-laced type");
    }
    return f;
}

// Chevalley structure constants from any realisation: algebra `big` with
// elements e_i, f_i, h_i satisfying the Chevalley-Serre relations of rs.
std::vector<SparseVector> normalise(const RootSystem& rs, const LieAlgebra& big,
                                    const std::vector<SparseVector>& e, const std::vector<SparseVector>& f,
                                    const std::vector<SparseVector>& h) {
    const int r = rs.rank();
    const std::size_t np = rs.num_positive();
    const std::size_t n = static_cast<std::size_t>(r) + 2 * np;
    const auto& roots = rs.roots();

    auto scale = [](SparseVector v, const Rational& c) {
        if (sgn(c) == 0) return SparseVector{};
        for (auto& t : v) t.coeff *= c;
        return v;
    };

    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            if (big.bracket_sparse(h[i], e[j]) != scale(e[j], rs.cartan(j, i)))
                throw InternalError("realisation: [h_i, e_j] does not match the Cartan matrix");
            SparseVector ef = big.bracket_sparse(e[i], f[j]);
            if (i == j ? ef != h[i] : !ef.empty()) throw InternalError("realisation: [e_i, f_j] is wrong");
        }

    std::vector<SparseVector> vec(n);
    for (int i = 0; i < r; ++i) {
        vec[i] = h[i];
        vec[r + rs.simple_root_index(i)] = e[i];
        vec[r + rs.negative_index(rs.simple_root_index(i))] = f[i];
    }
    for (std::size_t k = 0; k < np; ++k) {
        const auto& xi = roots[k].coords;
        if (roots[k].height == 1) continue;
        for (int i = 0; i < r; ++i) {
            RootCoords zeta = xi;
            zeta[i] -= 1;
            auto zk = rs.index_of(zeta);
            if (!zk || *zk >= np) continue;
            const int p = rs.string_bounds(zeta, i).first;
            Rational inv(1, p + 1);
            vec[r + k] = scale(big.bracket_sparse(e[i], vec[r + *zk]), inv);
            vec[r + rs.negative_index(k)] =
                scale(big.bracket_sparse(f[i], vec[r + rs.negative_index(*zk)]), -inv);
            break;
        }
        if (vec[r + k].empty() || vec[r + rs.negative_index(k)].empty())
            throw InternalError("realisation: root vector vanished for " + format_root(xi));
    }

    // Each big coordinate belongs to at most one basis vector (distinct weights).
    std::map<std::uint32_t, std::pair<std::size_t, Rational>> owner;
    for (std::size_t b = 0; b < n; ++b)
        for (const auto& t : vec[b])
            if (!owner.emplace(t.index, std::make_pair(b, t.coeff)).second)
                throw InternalError("realisation: basis vectors share a coordinate");

    std::vector<SparseVector> table(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            SparseVector w = big.bracket_sparse(vec[a], vec[b]);
            if (w.empty()) continue;
            std::map<std::size_t, Rational> coeff;
            for (const auto& t : w) {
                auto it = owner.find(t.index);
                if (it == owner.end()) throw InternalError("realisation: bracket leaves the subalgebra");
                coeff.emplace(it->second.first, t.coeff / it->second.second);
            }
            // Confirm the decomposition reproduces w exactly.
            std::map<std::uint32_t, Rational> rebuilt;
            for (const auto& [c, x] : coeff)
                for (const auto& t : vec[c]) rebuilt[t.index] += x * t.coeff;
            SparseVector rb;
            for (const auto& [k, x] : rebuilt)
                if (sgn(x) != 0) rb.push_back({k, x});
            if (rb != w) throw InternalError("realisation: inconsistent decomposition");
            SparseVector out;
            for (const auto& [c, x] : coeff) out.push_back({static_cast<std::uint32_t>(c), x});
            table[a * n + b] = std::move(out);
        }
    return table;
}

std::vector<std::string> chevalley_labels(const RootSystem& rs) {
    std::vector<std::string> labels;
    for (int i = 0; i < rs.rank(); ++i) labels.push_back("H" + std::to_string(i + 1));
    for (const auto& root : rs.roots()) labels.push_back(root_label(root.coords));
    return labels;
}

}  // namespace

LieAlgebra frenkel_kac_algebra(const RootSystem& rs) {
    if (!simply_laced(rs.type().family)) throw InternalError("Frenkel-Kac construction needs a simply-laced type");
    const int r = rs.rank();
    const auto& roots = rs.roots();
    const std::size_t n = static_cast<std::size_t>(r) + roots.size();
    std::vector<SparseVector> table(n * n);
    auto put = [&](std::size_t a, std::size_t b, SparseVector v) { table[a * n + b] = std::move(v); };
    for (int i = 0; i < r; ++i)
        for (std::size_t k = 0; k < roots.size(); ++k) {
            Rational c;
            for (int j = 0; j < r; ++j) c += rs.gram()(i, j) * roots[k].coords[j];
            if (sgn(c) == 0) continue;
            put(i, r + k, {{static_cast<std::uint32_t>(r + k), c}});
            put(r + k, i, {{static_cast<std::uint32_t>(r + k), -c}});
        }
    for (std::size_t a = 0; a < roots.size(); ++a)
        for (std::size_t b = 0; b < roots.size(); ++b) {
            const auto& ca = roots[a].coords;
            const auto& cb = roots[b].coords;
            RootCoords s(r);
            bool zero = true;
            for (int i = 0; i < r; ++i) {
                s[i] = ca[i] + cb[i];
                if (s[i] != 0) zero = false;
            }
            if (zero) {
                SparseVector v;
                for (int i = 0; i < r; ++i)
                    if (ca[i] != 0) v.push_back({static_cast<std::uint32_t>(i), Rational(-ca[i])});
                put(r + a, r + b, std::move(v));
            } else if (auto k = rs.index_of(s)) {
                put(r + a, r + b, {{static_cast<std::uint32_t>(r + *k), Rational(cocycle(rs, ca, cb))}});
            }
        }
    return LieAlgebra("fk(" + rs.type().name() + ")", chevalley_labels(rs), std::move(table));
}

ChevalleyAlgebra::ChevalleyAlgebra(const RootSystem& rs) : rs_(rs) {
    const int r = rs.rank();
    std::vector<SparseVector> e(r), f(r), h(r);
    std::vector<SparseVector> table;
    if (simply_laced(rs.type().family)) {
        LieAlgebra big = frenkel_kac_algebra(rs);
        for (int i = 0; i < r; ++i) {
            auto k = static_cast<std::uint32_t>(r + rs.simple_root_index(i));
            auto kn = static_cast<std::uint32_t>(r + rs.negative_index(rs.simple_root_index(i)));
            e[i] = {{k, Rational(1)}};
            f[i] = {{kn, Rational(-1)}};
            h[i] = {{static_cast<std::uint32_t>(i), Rational(1)}};
        }
        table = normalise(rs, big, e, f, h);
    } else {
        Folding fold = folding_for(rs.type());
        RootSystem brs(fold.big);
        LieAlgebra big = frenkel_kac_algebra(brs);
        const int br = brs.rank();
        for (int i = 0; i < r; ++i) {
            for (int j : fold.orbits[i]) {
                auto k = static_cast<std::uint32_t>(br + brs.simple_root_index(j));
                auto kn = static_cast<std::uint32_t>(br + brs.negative_index(brs.simple_root_index(j)));
                e[i].push_back({k, Rational(1)});
                f[i].push_back({kn, Rational(-1)});
                h[i].push_back({static_cast<std::uint32_t>(j), Rational(1)});
            }
            auto by_index = [](const Term& a, const Term& b) { return a.index < b.index; };
            std::sort(e[i].begin(), e[i].end(), by_index);
            std::sort(f[i].begin(), f[i].end(), by_index);
            std::sort(h[i].begin(), h[i].end(), by_index);
        }
        table = normalise(rs, big, e, f, h);
    }
    alg_ = LieAlgebra(rs.type().name(), chevalley_labels(rs), std::move(table));

    // Defining relations of a Chevalley basis.
    const std::size_t np = rs.num_positive();
    for (std::size_t a = 0; a < rs.roots().size(); ++a) {
        const auto& ca = rs.roots()[a].coords;
        for (int i = 0; i < r; ++i) {
            SparseVector expect{{static_cast<std::uint32_t>(root_index(a)), Rational(rs.pairing(ca, rs.roots()[rs.simple_root_index(i)].coords))}};
            if (sgn(expect[0].coeff) == 0) expect.clear();
            if (alg_.structure(cartan_index(i), root_index(a)) != expect)
                throw InternalError("Chevalley basis: [H_i, X_a] is wrong");
        }
        if (a < np) {
            Vector hb = coroot_element(a);
            if (dense_from_sparse(alg_.structure(root_index(a), root_index(rs.negative_index(a))), dim()) != hb)
                throw InternalError("Chevalley basis: [X_a, X_-a] is not the coroot");
        }
        for (std::size_t b = 0; b < rs.roots().size(); ++b) {
            const auto& cb = rs.roots()[b].coords;
            RootCoords s(r);
            for (int i = 0; i < r; ++i) s[i] = ca[i] + cb[i];
            if (!rs.is_root(s)) continue;
            int p = 0;
            RootCoords d = cb;
            while (true) {
                for (int i = 0; i < r; ++i) d[i] -= ca[i];
                if (!rs.is_root(d)) break;
                ++p;
            }
            int nab = structure_constant(a, b);
            if (nab != p + 1 && nab != -(p + 1)) throw InternalError("Chevalley basis: |N_{a,b}| != p+1");
        }
    }
}

Vector ChevalleyAlgebra::root_vector(std::size_t root) const { return unit_vector(dim(), root_index(root)); }

Vector ChevalleyAlgebra::coroot_element(std::size_t root) const {
    auto c = rs_.coroot_in_simple_coroots(rs_.roots().at(root).coords);
    Vector v(dim());
    for (int i = 0; i < rank(); ++i) v[i] = c[i];
    return v;
}

int ChevalleyAlgebra::structure_constant(std::size_t a, std::size_t b) const {
    const auto& s = alg_.structure(root_index(a), root_index(b));
    if (s.empty()) return 0;
    if (s.size() != 1 || is_cartan_index(s[0].index)) return 0;
    return static_cast<int>(s[0].coeff.get_num().get_si());
}

Subspace ChevalleyAlgebra::cartan() const {
    std::vector<std::size_t> idx;
    for (int i = 0; i < rank(); ++i) idx.push_back(cartan_index(i));
    return Subspace::coordinate(dim(), idx);
}

Subspace ChevalleyAlgebra::n_plus() const {
    std::vector<std::size_t> idx;
    for (std::size_t k = 0; k < rs_.num_positive(); ++k) idx.push_back(root_index(k));
    return Subspace::coordinate(dim(), idx);
}

std::shared_ptr<const ChevalleyAlgebra> build_chevalley(const RootSystem& rs) {
    return std::make_shared<const ChevalleyAlgebra>(rs);
}

std::shared_ptr<const ChevalleyAlgebra> chevalley_for(const CartanType& type) {
    static std::mutex mu;
    static std::map<CartanType, std::shared_ptr<const ChevalleyAlgebra>> cache;
    {
        std::lock_guard lock(mu);
        auto it = cache.find(type);
        if (it != cache.end()) return it->second;
    }
    auto alg = build_chevalley(RootSystem(type));
    std::lock_guard lock(mu);
    return cache.emplace(type, alg).first->second;
}

}  // namespace orbitkit
