#include "orbitkit/bareiss.hpp"

#include <cstdint>
#include <limits>
#include <numeric>

namespace orbitkit::bareiss {

namespace {

struct Int64Ops {
    using T = std::int64_t;
    static bool is_zero(T x) { return x == 0; }
    static bool less_abs(T a, T b) {
        // |a| < |b| without negating INT64_MIN
        auto ua = a < 0 ? ~static_cast<std::uint64_t>(a) + 1 : static_cast<std::uint64_t>(a);
        auto ub = b < 0 ? ~static_cast<std::uint64_t>(b) + 1 : static_cast<std::uint64_t>(b);
        return ua < ub;
    }
    // out = (p*x - a*y) / prev
    static bool combine(T p, T x, T a, T y, T prev, T& out) {
        __int128 t = static_cast<__int128>(p) * x - static_cast<__int128>(a) * y;
        t /= prev;
        if (t > std::numeric_limits<T>::max() || t < std::numeric_limits<T>::min()) return false;
        out = static_cast<T>(t);
        return true;
    }
    static bool rescale(T p, T x, T prev, T& out) {
        __int128 t = static_cast<__int128>(p) * x / prev;
        if (t > std::numeric_limits<T>::max() || t < std::numeric_limits<T>::min()) return false;
        out = static_cast<T>(t);
        return true;
    }
};

struct MpzOps {
    using T = Integer;
    static bool is_zero(const T& x) { return sgn(x) == 0; }
    static bool less_abs(const T& a, const T& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()) < 0; }
    static bool combine(const T& p, const T& x, const T& a, const T& y, const T& prev, T& out) {
        T t = p * x;
        t -= a * y;
        mpz_divexact(out.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        return true;
    }
    static bool rescale(const T& p, const T& x, const T& prev, T& out) {
        T t = p * x;
        mpz_divexact(out.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        return true;
    }
};

template <class Ops>
bool run(std::vector<std::vector<typename Ops::T>>& m, std::size_t cols,
         std::vector<std::size_t>& pivots, typename Ops::T& scale) {
    using T = typename Ops::T;
    const std::size_t nrows = m.size();
    T prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < nrows; ++c) {
        std::size_t best = nrows;
        for (std::size_t i = r; i < nrows; ++i) {
            if (Ops::is_zero(m[i][c])) continue;
            if (best == nrows || Ops::less_abs(m[i][c], m[best][c])) best = i;
        }
        if (best == nrows) continue;
        std::swap(m[r], m[best]);
        const T p = m[r][c];
        const auto& prow = m[r];
        for (std::size_t i = 0; i < nrows; ++i) {
            if (i == r) continue;
            auto& row = m[i];
            const T a = row[c];
            if (Ops::is_zero(a)) {
                if (p == prev) continue;
                for (std::size_t j = 0; j < cols; ++j) {
                    if (Ops::is_zero(row[j])) continue;
                    if (!Ops::rescale(p, row[j], prev, row[j])) return false;
                }
                continue;
            }
            for (std::size_t j = 0; j < cols; ++j) {
                if (Ops::is_zero(row[j]) && Ops::is_zero(prow[j])) continue;
                if (!Ops::combine(p, row[j], a, prow[j], prev, row[j])) return false;
            }
        }
        pivots.push_back(c);
        prev = p;
        ++r;
    }
    m.resize(r);
    scale = prev;
    return true;
}

Integer content(const std::vector<Integer>& row) {
    Integer g = 0;
    for (const auto& x : row) {
        if (sgn(x) == 0) continue;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

}  // namespace

IntegerRows integer_rows(const std::vector<Vector>& rows, std::size_t cols) {
    IntegerRows out;
    out.reserve(rows.size());
    for (const auto& row : rows) {
        if (row.size() != cols) throw DimensionMismatch("row length differs from column count");
        Integer l = 1;
        for (const auto& x : row) {
            if (sgn(x) != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
        }
        std::vector<Integer> irow(cols);
        for (std::size_t j = 0; j < cols; ++j) {
            if (sgn(row[j]) == 0) continue;
            irow[j] = l / row[j].get_den() * row[j].get_num();
        }
        Integer g = content(irow);
        if (sgn(g) != 0 && g != 1) {
            for (auto& x : irow) {
                if (sgn(x) != 0) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
            }
        }
        out.push_back(std::move(irow));
    }
    return out;
}

IntegerRows integer_rows(const RationalMatrix& m) {
    std::vector<Vector> rows;
    rows.reserve(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row_vector(i));
    return integer_rows(rows, m.cols());
}

std::optional<Echelon> gauss_jordan(const IntegerRows& m, std::size_t cols, Backend backend) {
    for (const auto& row : m) {
        if (row.size() != cols) throw DimensionMismatch("row length differs from column count");
    }
    Echelon e;
    bool try_small = backend != Backend::Mpz;
    if (try_small) {
        for (const auto& row : m) {
            for (const auto& x : row) {
                if (!x.fits_slong_p()) {
                    try_small = false;
                    break;
                }
            }
            if (!try_small) break;
        }
        if (!try_small && backend == Backend::Int64) return std::nullopt;
    }
    if (try_small) {
        std::vector<std::vector<std::int64_t>> s(m.size(), std::vector<std::int64_t>(cols));
        for (std::size_t i = 0; i < m.size(); ++i)
            for (std::size_t j = 0; j < cols; ++j) s[i][j] = m[i][j].get_si();
        std::int64_t scale = 1;
        if (run<Int64Ops>(s, cols, e.pivots, scale)) {
            e.rows.resize(s.size());
            for (std::size_t i = 0; i < s.size(); ++i) {
                e.rows[i].resize(cols);
                for (std::size_t j = 0; j < cols; ++j) e.rows[i][j] = static_cast<long>(s[i][j]);
            }
            e.scale = static_cast<long>(scale);
            e.used_int64 = true;
            return e;
        }
        if (backend == Backend::Int64) return std::nullopt;
        e.pivots.clear();
    }
    e.rows = m;
    run<MpzOps>(e.rows, cols, e.pivots, e.scale);
    return e;
}

Echelon gauss_jordan(const IntegerRows& m, std::size_t cols) {
    return *gauss_jordan(m, cols, Backend::Auto);
}

}  // namespace orbitkit::bareiss
