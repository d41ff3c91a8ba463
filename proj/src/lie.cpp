#include "orbitkit/lie.hpp"

#include <algorithm>

namespace orbitkit {

SparseVector sparse_from_dense(const Vector& v) {
    SparseVector s;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (sgn(v[i]) != 0) s.push_back({static_cast<std::uint32_t>(i), v[i]});
    return s;
}

Vector dense_from_sparse(const SparseVector& s, std::size_t n) {
    Vector v(n);
    for (const auto& t : s) v.at(t.index) = t.coeff;
    return v;
}

namespace {

const Rational* lookup(const SparseVector& s, std::size_t k) {
    auto it = std::lower_bound(s.begin(), s.end(), k,
                               [](const Term& t, std::size_t idx) { return t.index < idx; });
    if (it == s.end() || it->index != k) return nullptr;
    return &it->coeff;
}

}  // namespace

LieAlgebra::LieAlgebra(std::string name, std::vector<std::string> labels, std::vector<SparseVector> table)
    : name_(std::move(name)), labels_(std::move(labels)), table_(std::move(table)) {
    const std::size_t n = labels_.size();
    if (table_.size() != n * n) throw DimensionMismatch("structure table has wrong size");
    for (auto& s : table_) {
        std::sort(s.begin(), s.end(), [](const Term& a, const Term& b) { return a.index < b.index; });
        for (std::size_t k = 0; k < s.size(); ++k) {
            if (s[k].index >= n) throw DimensionMismatch("structure constant index out of range");
            if (k && s[k].index == s[k - 1].index) throw InternalError("duplicate index in structure constants");
            if (sgn(s[k].coeff) == 0) throw InternalError("explicit zero in structure constants");
        }
    }
}

Vector LieAlgebra::bracket(const Vector& x, const Vector& y) const {
    const std::size_t n = dim();
    if (x.size() != n || y.size() != n) throw DimensionMismatch("bracket: vector length differs from dim");
    std::vector<std::size_t> nx, ny;
    for (std::size_t i = 0; i < n; ++i) {
        if (sgn(x[i]) != 0) nx.push_back(i);
        if (sgn(y[i]) != 0) ny.push_back(i);
    }
    Vector out(n);
    Rational c;
    for (auto i : nx)
        for (auto j : ny) {
            const auto& s = table_[i * n + j];
            if (s.empty()) continue;
            c = x[i] * y[j];
            for (const auto& t : s) out[t.index] += c * t.coeff;
        }
    return out;
}

SparseVector LieAlgebra::bracket_sparse(const SparseVector& x, const SparseVector& y) const {
    const std::size_t n = dim();
    std::vector<std::pair<std::uint32_t, Rational>> acc;
    for (const auto& a : x)
        for (const auto& b : y) {
            const auto& s = table_[a.index * n + b.index];
            if (s.empty()) continue;
            Rational c = a.coeff * b.coeff;
            for (const auto& t : s) acc.emplace_back(t.index, c * t.coeff);
        }
    std::sort(acc.begin(), acc.end(), [](const auto& p, const auto& q) { return p.first < q.first; });
    SparseVector out;
    for (std::size_t k = 0; k < acc.size();) {
        std::size_t e = k;
        Rational v;
        while (e < acc.size() && acc[e].first == acc[k].first) v += acc[e++].second;
        if (sgn(v) != 0) out.push_back({acc[k].first, v});
        k = e;
    }
    return out;
}

Vector LieAlgebra::bracket_basis(std::size_t i, const Vector& y) const {
    const std::size_t n = dim();
    if (y.size() != n) throw DimensionMismatch("bracket: vector length differs from dim");
    Vector out(n);
    for (std::size_t j = 0; j < n; ++j) {
        if (sgn(y[j]) == 0) continue;
        for (const auto& t : table_[i * n + j]) out[t.index] += y[j] * t.coeff;
    }
    return out;
}

RationalMatrix LieAlgebra::ad_matrix(const Vector& x) const {
    const std::size_t n = dim();
    if (x.size() != n) throw DimensionMismatch("ad: vector length differs from dim");
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (sgn(x[i]) == 0) continue;
        for (std::size_t j = 0; j < n; ++j)
            for (const auto& t : table_[i * n + j]) m(t.index, j) += x[i] * t.coeff;
    }
    return m;
}

Subspace LieAlgebra::bracket_space(const Vector& x, const Subspace& s) const {
    std::vector<Vector> imgs;
    imgs.reserve(s.dim());
    for (const auto& v : s.vectors()) imgs.push_back(bracket(x, v));
    return Subspace::span(dim(), imgs);
}

Subspace LieAlgebra::centralizer(const Vector& x) const { return kernel(ad_matrix(x)); }

const RationalMatrix& LieAlgebra::killing() const {
    std::call_once(killing_->once, [this] {
        const std::size_t n = dim();
        // ad_j as triples: [b_j, b_k] has coefficient c on b_l.
        struct Entry {
            std::uint32_t k, l;
            const Rational* c;
        };
        std::vector<std::vector<Entry>> ad(n);
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                for (const auto& t : table_[j * n + k])
                    ad[j].push_back({static_cast<std::uint32_t>(k), t.index, &t.coeff});
        RationalMatrix form(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) {
                Rational s;
                for (const auto& e : ad[j]) {
                    // coefficient of b_k in [b_i, b_l]
                    if (const Rational* c = lookup(table_[i * n + e.l], e.k)) s += *e.c * *c;
                }
                form(i, j) = s;
                form(j, i) = s;
            }
        killing_->form = std::move(form);
    });
    return killing_->form;
}

Rational LieAlgebra::killing(const Vector& x, const Vector& y) const { return killing().bilinear(x, y); }

bool LieAlgebra::is_subalgebra(const Subspace& s) const {
    if (s.ambient_dim() != dim()) throw DimensionMismatch("subalgebra test: ambient dimension differs");
    const auto& v = s.vectors();
    for (std::size_t a = 0; a < v.size(); ++a)
        for (std::size_t b = a + 1; b < v.size(); ++b)
            if (!s.contains(bracket(v[a], v[b]))) return false;
    return true;
}

bool LieAlgebra::jacobi_holds(std::size_t i, std::size_t j, std::size_t k) const {
    const std::size_t n = dim();
    auto ei = unit_vector(n, i), ej = unit_vector(n, j), ek = unit_vector(n, k);
    Vector s = bracket(ei, bracket(ej, ek));
    axpy(s, 1, bracket(ej, bracket(ek, ei)));
    axpy(s, 1, bracket(ek, bracket(ei, ej)));
    return is_zero(s);
}

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
    const std::size_t na = a.dim(), nb = b.dim(), n = na + nb;
    std::vector<std::string> labels;
    for (const auto& l : a.labels()) labels.push_back("1:" + l);
    for (const auto& l : b.labels()) labels.push_back("2:" + l);
    std::vector<SparseVector> table(n * n);
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < na; ++j) table[i * n + j] = a.structure(i, j);
    for (std::size_t i = 0; i < nb; ++i)
        for (std::size_t j = 0; j < nb; ++j) {
            SparseVector s = b.structure(i, j);
            for (auto& t : s) t.index += static_cast<std::uint32_t>(na);
            table[(na + i) * n + na + j] = std::move(s);
        }
    LieAlgebra sum(a.name() + "+" + b.name(), std::move(labels), std::move(table));
    sum.summand_dims_ = {na, nb};
    return sum;
}

Subspace diag_subalgebra(const LieAlgebra& sum) {
    const auto& d = sum.summand_dims();
    if (d.size() != 2 || d[0] != d[1]) throw DimensionMismatch("diag: not a sum of two equal-dimensional summands");
    const std::size_t h = d[0];
    for (std::size_t i = 0; i < h; ++i)
        for (std::size_t j = 0; j < h; ++j) {
            SparseVector s = sum.structure(h + i, h + j);
            for (auto& t : s) t.index -= static_cast<std::uint32_t>(h);
            if (s != sum.structure(i, j)) throw DimensionMismatch("diag: summands are not the same algebra");
        }
    std::vector<Vector> rows;
    for (std::size_t i = 0; i < h; ++i) {
        Vector v(2 * h);
        v[i] = 1;
        v[h + i] = 1;
        rows.push_back(std::move(v));
    }
    return Subspace::span(2 * h, rows);
}

AlgebraElement bracket(const AlgebraElement& x, const AlgebraElement& y) {
    if (x.algebra == nullptr || x.algebra != y.algebra) throw AlgebraMismatch("bracket of elements of different algebras");
    return {x.algebra, x.algebra->bracket(x.coords, y.coords)};
}

}  // namespace orbitkit
