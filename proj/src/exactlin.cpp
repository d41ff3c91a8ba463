#include "orbitkit/exactlin.hpp"

#include <algorithm>

#include "orbitkit/bareiss.hpp"

namespace orbitkit {

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(const std::string& text) {
    Rational q;
    if (q.set_str(text, 10) != 0) throw ParseError("not a rational number: " + text);
    q.canonicalize();
    return q;
}

Vector zero_vector(std::size_t n) { return Vector(n); }

Vector unit_vector(std::size_t n, std::size_t i) {
    Vector v(n);
    v.at(i) = 1;
    return v;
}

bool is_zero(const Vector& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) == 0; });
}

Vector& axpy(Vector& y, const Rational& a, const Vector& x) {
    if (x.size() != y.size()) throw DimensionMismatch("axpy: length mismatch");
    if (sgn(a) == 0) return y;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (sgn(x[i]) != 0) y[i] += a * x[i];
    }
    return y;
}

Vector scaled(const Vector& v, const Rational& a) {
    Vector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (sgn(v[i]) != 0) out[i] = a * v[i];
    }
    return out;
}

Rational dot(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw DimensionMismatch("dot: length mismatch");
    Rational s;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) != 0 && sgn(b[i]) != 0) s += a[i] * b[i];
    }
    return s;
}

// ---------------------------------------------------------------- matrix

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

RationalMatrix RationalMatrix::identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

RationalMatrix RationalMatrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
    RationalMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw DimensionMismatch("from_rows: ragged input");
        std::copy(rows[i].begin(), rows[i].end(), m.data_.begin() + i * cols);
    }
    return m;
}

RationalMatrix RationalMatrix::from_columns(const std::vector<Vector>& cols, std::size_t rows) {
    return from_rows(cols, rows).transpose();
}

Vector RationalMatrix::row_vector(std::size_t r) const {
    auto s = row(r);
    return Vector(s.begin(), s.end());
}

Vector RationalMatrix::column_vector(std::size_t c) const {
    Vector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, c);
    return v;
}

RationalMatrix RationalMatrix::transpose() const {
    RationalMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Vector RationalMatrix::apply(const Vector& v) const {
    if (v.size() != cols_) throw DimensionMismatch("apply: length mismatch");
    Vector out(rows_);
    for (std::size_t j = 0; j < cols_; ++j) {
        if (sgn(v[j]) == 0) continue;
        for (std::size_t i = 0; i < rows_; ++i) {
            const auto& a = (*this)(i, j);
            if (sgn(a) != 0) out[i] += a * v[j];
        }
    }
    return out;
}

Vector RationalMatrix::apply_transpose(const Vector& v) const {
    if (v.size() != rows_) throw DimensionMismatch("apply_transpose: length mismatch");
    Vector out(cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        if (sgn(v[i]) == 0) continue;
        for (std::size_t j = 0; j < cols_; ++j) {
            const auto& a = (*this)(i, j);
            if (sgn(a) != 0) out[j] += a * v[i];
        }
    }
    return out;
}

Rational RationalMatrix::bilinear(const Vector& a, const Vector& b) const {
    return dot(a, apply(b));
}

RationalMatrix RationalMatrix::principal_submatrix(std::span<const std::size_t> idx) const {
    RationalMatrix s(idx.size(), idx.size());
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t j = 0; j < idx.size(); ++j) s(i, j) = (*this)(idx[i], idx[j]);
    return s;
}

bool RationalMatrix::is_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
}

bool RationalMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return sgn(x) == 0; });
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product: inner dimensions differ");
    RationalMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const auto& x = a(i, k);
            if (sgn(x) == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                const auto& y = b(k, j);
                if (sgn(y) != 0) c(i, j) += x * y;
            }
        }
    return c;
}

RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("matrix sum: shapes differ");
    RationalMatrix c = a;
    for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] += b.data_[i];
    return c;
}

RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("matrix difference: shapes differ");
    RationalMatrix c = a;
    for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] -= b.data_[i];
    return c;
}

// ---------------------------------------------------------------- subspaces

namespace {

// Canonical rows (RREF scaled to leading 1) from an integer echelon form.
std::vector<Vector> rref_rows(const bareiss::Echelon& e, std::size_t cols) {
    std::vector<Vector> rows(e.rows.size(), Vector(cols));
    for (std::size_t r = 0; r < e.rows.size(); ++r)
        for (std::size_t j = 0; j < cols; ++j) {
            if (sgn(e.rows[r][j]) == 0) continue;
            rows[r][j] = Rational(e.rows[r][j], e.scale);
            rows[r][j].canonicalize();
        }
    return rows;
}

Subspace kernel_of_rows(const std::vector<Vector>& rows, std::size_t cols) {
    auto e = bareiss::gauss_jordan(bareiss::integer_rows(rows, cols), cols);
    std::vector<bool> is_pivot(cols, false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<Vector> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        Vector x(cols);
        x[f] = 1;
        for (std::size_t r = 0; r < e.pivots.size(); ++r) {
            if (sgn(e.rows[r][f]) == 0) continue;
            x[e.pivots[r]] = Rational(-e.rows[r][f], e.scale);
            x[e.pivots[r]].canonicalize();
        }
        basis.push_back(std::move(x));
    }
    return Subspace::span(cols, basis);
}

}  // namespace

Subspace make_subspace(std::size_t ambient, std::vector<Vector> rows, std::vector<std::size_t> pivots) {
    Subspace s;
    s.ambient_ = ambient;
    s.rows_ = std::move(rows);
    s.pivots_ = std::move(pivots);
    s.build_support();
    return s;
}

void Subspace::build_support() {
    support_.assign(rows_.size(), {});
    for (std::size_t r = 0; r < rows_.size(); ++r)
        for (std::size_t j = 0; j < ambient_; ++j)
            if (sgn(rows_[r][j]) != 0) support_[r].push_back(j);
}

Subspace Subspace::zero(std::size_t ambient) { return make_subspace(ambient, {}, {}); }

Subspace Subspace::full(std::size_t ambient) {
    std::vector<Vector> rows;
    std::vector<std::size_t> piv;
    for (std::size_t i = 0; i < ambient; ++i) {
        rows.push_back(unit_vector(ambient, i));
        piv.push_back(i);
    }
    return make_subspace(ambient, std::move(rows), std::move(piv));
}

Subspace Subspace::coordinate(std::size_t ambient, std::span<const std::size_t> idx) {
    std::vector<std::size_t> sorted(idx.begin(), idx.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<Vector> rows;
    for (auto i : sorted) {
        if (i >= ambient) throw DimensionMismatch("coordinate index out of range");
        rows.push_back(unit_vector(ambient, i));
    }
    return make_subspace(ambient, std::move(rows), std::move(sorted));
}

Subspace Subspace::span(std::size_t ambient, const std::vector<Vector>& vectors) {
    std::vector<Vector> nonzero;
    for (const auto& v : vectors) {
        if (v.size() != ambient) throw DimensionMismatch("span: vector length differs from ambient");
        if (!orbitkit::is_zero(v)) nonzero.push_back(v);
    }
    if (nonzero.empty()) return zero(ambient);
    auto e = bareiss::gauss_jordan(bareiss::integer_rows(nonzero, ambient), ambient);
    return make_subspace(ambient, rref_rows(e, ambient), e.pivots);
}

RationalMatrix Subspace::basis() const { return RationalMatrix::from_columns(rows_, ambient_); }

Vector Subspace::reduce(const Vector& v) const {
    if (v.size() != ambient_) throw DimensionMismatch("reduce: vector length differs from ambient");
    Vector r = v;
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        Rational c = r[pivots_[k]];
        if (sgn(c) == 0) continue;
        for (auto j : support_[k]) r[j] -= c * rows_[k][j];
    }
    return r;
}

bool Subspace::contains(const Vector& v) const { return orbitkit::is_zero(reduce(v)); }

Vector Subspace::coordinates(const Vector& v) const {
    if (!contains(v)) throw NoSolution("vector is not in the subspace");
    Vector c(rows_.size());
    for (std::size_t k = 0; k < rows_.size(); ++k) c[k] = v[pivots_[k]];
    return c;
}

std::size_t rank(const RationalMatrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    return bareiss::gauss_jordan(bareiss::integer_rows(m), m.cols()).pivots.size();
}

Subspace kernel(const RationalMatrix& m) {
    std::vector<Vector> rows;
    for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row_vector(i));
    return kernel_of_rows(rows, m.cols());
}

Subspace row_space(const RationalMatrix& m) {
    std::vector<Vector> rows;
    for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row_vector(i));
    return Subspace::span(m.cols(), rows);
}

Subspace column_space(const RationalMatrix& m) { return row_space(m.transpose()); }

Subspace orth_complement(const Subspace& w, const RationalMatrix& form) {
    if (!form.is_square() || form.rows() != w.ambient_dim())
        throw DimensionMismatch("orth_complement: form size differs from ambient dimension");
    if (!form.is_symmetric()) throw InvalidForm("orth_complement: form is not symmetric");
    if (w.dim() == 0) return Subspace::full(w.ambient_dim());
    std::vector<Vector> rows;
    rows.reserve(w.dim());
    for (const auto& v : w.vectors()) rows.push_back(form.apply_transpose(v));
    return kernel_of_rows(rows, w.ambient_dim());
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim()) throw DimensionMismatch("sum: ambient dimensions differ");
    if (b.dim() == 0) return a;
    if (a.dim() == 0) return b;
    std::vector<Vector> rows = a.vectors();
    rows.insert(rows.end(), b.vectors().begin(), b.vectors().end());
    return Subspace::span(a.ambient_dim(), rows);
}

bool subspace_contains(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim()) throw DimensionMismatch("contains: ambient dimensions differ");
    if (b.dim() > a.dim()) return false;
    return std::all_of(b.vectors().begin(), b.vectors().end(),
                       [&](const Vector& v) { return a.contains(v); });
}

Subspace subspace_intersect(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim()) throw DimensionMismatch("intersect: ambient dimensions differ");
    const std::size_t n = a.ambient_dim();
    if (a.dim() == 0 || b.dim() == 0) return Subspace::zero(n);
    // x in kernel of [A | -B] gives sum x_i a_i = sum y_j b_j.
    const std::size_t da = a.dim(), db = b.dim();
    std::vector<Vector> rows(n, Vector(da + db));
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t k = 0; k < n; ++k) rows[k][i] = a.vectors()[i][k];
    for (std::size_t j = 0; j < db; ++j)
        for (std::size_t k = 0; k < n; ++k) rows[k][da + j] = -b.vectors()[j][k];
    auto ker = kernel_of_rows(rows, da + db);
    std::vector<Vector> out;
    for (const auto& x : ker.vectors()) {
        Vector v(n);
        for (std::size_t i = 0; i < da; ++i) axpy(v, x[i], a.vectors()[i]);
        out.push_back(std::move(v));
    }
    return Subspace::span(n, out);
}

std::optional<Vector> solve(const RationalMatrix& a, const Vector& b) {
    if (b.size() != a.rows()) throw DimensionMismatch("solve: right-hand side length differs");
    const std::size_t n = a.cols();
    std::vector<Vector> rows;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        Vector r = a.row_vector(i);
        r.push_back(b[i]);
        rows.push_back(std::move(r));
    }
    auto e = bareiss::gauss_jordan(bareiss::integer_rows(rows, n + 1), n + 1);
    Vector x(n);
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
        if (e.pivots[r] == n) return std::nullopt;
        x[e.pivots[r]] = Rational(e.rows[r][n], e.scale);
        x[e.pivots[r]].canonicalize();
    }
    return x;
}

RationalMatrix inverse(const RationalMatrix& m) {
    if (!m.is_square()) throw DimensionMismatch("inverse: matrix is not square");
    const std::size_t n = m.rows();
    std::vector<Vector> rows;
    for (std::size_t i = 0; i < n; ++i) {
        Vector r = m.row_vector(i);
        r.resize(2 * n);
        r[n + i] = 1;
        rows.push_back(std::move(r));
    }
    auto e = bareiss::gauss_jordan(bareiss::integer_rows(rows, 2 * n), 2 * n);
    if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) throw NoSolution("inverse: matrix is singular");
    RationalMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            inv(i, j) = Rational(e.rows[i][n + j], e.scale);
            inv(i, j).canonicalize();
        }
    return inv;
}

Rational determinant(const RationalMatrix& m) {
    if (!m.is_square()) throw DimensionMismatch("determinant: matrix is not square");
    const std::size_t n = m.rows();
    RationalMatrix a = m;
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && sgn(a(p, c)) == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
            det = -det;
        }
        det *= a(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (sgn(a(i, c)) == 0) continue;
            Rational f = a(i, c) / a(c, c);
            for (std::size_t j = c; j < n; ++j)
                if (sgn(a(c, j)) != 0) a(i, j) -= f * a(c, j);
        }
    }
    return det;
}

std::vector<Rational> leading_principal_minors(const RationalMatrix& m) {
    if (!m.is_square()) throw DimensionMismatch("minors: matrix is not square");
    const std::size_t n = m.rows();
    std::vector<Rational> minors;
    minors.reserve(n);
    // Elimination without pivoting: the k-th pivot is minor_k / minor_{k-1}.
    RationalMatrix a = m;
    Rational running = 1;
    std::size_t k = 0;
    for (; k < n; ++k) {
        if (sgn(a(k, k)) == 0) break;
        running *= a(k, k);
        minors.push_back(running);
        for (std::size_t i = k + 1; i < n; ++i) {
            if (sgn(a(i, k)) == 0) continue;
            Rational f = a(i, k) / a(k, k);
            for (std::size_t j = k; j < n; ++j)
                if (sgn(a(k, j)) != 0) a(i, j) -= f * a(k, j);
        }
    }
    for (; k < n; ++k) {
        std::vector<std::size_t> idx(k + 1);
        for (std::size_t i = 0; i <= k; ++i) idx[i] = i;
        minors.push_back(determinant(m.principal_submatrix(idx)));
    }
    return minors;
}

bool is_positive_definite(const RationalMatrix& m) {
    if (!m.is_symmetric()) return false;
    const std::size_t n = m.rows();
    RationalMatrix a = m;
    for (std::size_t k = 0; k < n; ++k) {
        if (sgn(a(k, k)) <= 0) return false;
        for (std::size_t i = k + 1; i < n; ++i) {
            if (sgn(a(i, k)) == 0) continue;
            Rational f = a(i, k) / a(k, k);
            for (std::size_t j = k; j < n; ++j)
                if (sgn(a(k, j)) != 0) a(i, j) -= f * a(k, j);
        }
    }
    return true;
}

bool is_negative_definite(const RationalMatrix& m) {
    RationalMatrix neg(m.rows(), m.cols());
    return is_positive_definite(neg - m);
}

}  // namespace orbitkit
