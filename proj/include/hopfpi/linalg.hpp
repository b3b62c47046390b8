#pragma once

// Exact dense linear algebra over a Scalar field: square matrices over an
// arbitrary commutative ring entry type, incremental row spans (reduced row
// form) over Scalar, nullspace and inverse.

#include "hopfpi/scalar.hpp"

#include <algorithm>
#include <vector>

namespace hopfpi {

template <class R>
struct SqMatrix {
    unsigned n = 0;
    std::vector<R> a;  // row-major

    SqMatrix() = default;
    SqMatrix(unsigned dim, const R& fill) : n(dim), a(std::size_t(dim) * dim, fill) {}

    R& at(unsigned i, unsigned j) { return a[std::size_t(i) * n + j]; }
    const R& at(unsigned i, unsigned j) const { return a[std::size_t(i) * n + j]; }

    bool operator==(const SqMatrix& o) const { return n == o.n && a == o.a; }
    bool operator!=(const SqMatrix& o) const { return !(*this == o); }
};

template <class R>
SqMatrix<R> mat_zero(unsigned n, const R& zero) {
    return SqMatrix<R>(n, zero);
}

template <class R>
SqMatrix<R> mat_identity(unsigned n, const R& zero, const R& one) {
    SqMatrix<R> m(n, zero);
    for (unsigned i = 0; i < n; ++i) m.at(i, i) = one;
    return m;
}

template <class R>
SqMatrix<R> operator+(const SqMatrix<R>& x, const SqMatrix<R>& y) {
    SqMatrix<R> r = x;
    for (std::size_t k = 0; k < r.a.size(); ++k) r.a[k] = r.a[k] + y.a[k];
    return r;
}

template <class R>
SqMatrix<R> operator-(const SqMatrix<R>& x, const SqMatrix<R>& y) {
    SqMatrix<R> r = x;
    for (std::size_t k = 0; k < r.a.size(); ++k) r.a[k] = r.a[k] - y.a[k];
    return r;
}

template <class R>
SqMatrix<R> operator*(const SqMatrix<R>& x, const SqMatrix<R>& y) {
    SqMatrix<R> r(x.n, x.a.empty() ? R() : x.a[0] - x.a[0]);  // zero of the ring
    for (unsigned i = 0; i < x.n; ++i)
        for (unsigned k = 0; k < x.n; ++k) {
            const R& xik = x.at(i, k);
            for (unsigned j = 0; j < x.n; ++j)
                r.at(i, j) = r.at(i, j) + xik * y.at(k, j);
        }
    return r;
}

template <class R>
SqMatrix<R> scalar_mul(const R& s, const SqMatrix<R>& x) {
    SqMatrix<R> r = x;
    for (auto& e : r.a) e = s * e;
    return r;
}

template <class R>
bool mat_is_zero(const SqMatrix<R>& x, const R& zero) {
    for (const auto& e : x.a)
        if (!(e == zero)) return false;
    return true;
}

using ScalarMatrix = SqMatrix<Scalar>;

// Incremental reduced row form over Scalar. Rows are dense; the column count
// may grow between insertions (rows are padded with zeros on demand).
class RowSpan {
public:
    explicit RowSpan(const FieldCtx& ctx) : ctx_(ctx) {}

    unsigned rank() const { return static_cast<unsigned>(rows_.size()); }
    unsigned cols() const { return cols_; }

    // reduces `row` against the span; if independent, inserts it and returns
    // true. `row` may be shorter or longer than current width.
    bool add(std::vector<Scalar> row) {
        grow(row);
        reduce(row);
        unsigned p = 0;
        while (p < cols_ && row[p].is_zero()) ++p;
        if (p == cols_) return false;
        Scalar inv = row[p].inverse();
        for (unsigned j = p; j < cols_; ++j) row[j] *= inv;
        // keep reduced form: eliminate the new pivot column from existing rows
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            if (!rows_[r][p].is_zero()) {
                Scalar c = rows_[r][p];
                for (unsigned j = p; j < cols_; ++j)
                    rows_[r][j] -= c * row[j];
            }
        }
        std::size_t ins = 0;
        while (ins < pivots_.size() && pivots_[ins] < p) ++ins;
        rows_.insert(rows_.begin() + ins, std::move(row));
        pivots_.insert(pivots_.begin() + ins, p);
        return true;
    }

    // residual of `row` after reduction (zero vector iff row is in the span)
    std::vector<Scalar> residual(std::vector<Scalar> row) const {
        if (row.size() < cols_) row.resize(cols_, ctx_.zero());
        reduce(row);
        return row;
    }

    bool contains(std::vector<Scalar> row) const {
        row = residual(std::move(row));
        for (const auto& c : row)
            if (!c.is_zero()) return false;
        return true;
    }

    const std::vector<std::vector<Scalar>>& rows() const { return rows_; }
    const std::vector<unsigned>& pivot_columns() const { return pivots_; }

private:
    void grow(std::vector<Scalar>& row) {
        if (row.size() > cols_) {
            cols_ = static_cast<unsigned>(row.size());
            for (auto& r : rows_) r.resize(cols_, ctx_.zero());
        } else {
            row.resize(cols_, ctx_.zero());
        }
    }
    void reduce(std::vector<Scalar>& row) const {
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            unsigned p = pivots_[r];
            if (p < row.size() && !row[p].is_zero()) {
                Scalar c = row[p];
                unsigned lim = std::min<unsigned>(cols_, static_cast<unsigned>(row.size()));
                for (unsigned j = p; j < lim; ++j)
                    row[j] -= c * rows_[r][j];
            }
        }
    }

    FieldCtx ctx_;
    unsigned cols_ = 0;
    std::vector<std::vector<Scalar>> rows_;
    std::vector<unsigned> pivots_;
};

// Basis of {x : M x = 0} for a rows x cols matrix (row-major), exact.
inline std::vector<std::vector<Scalar>> nullspace(const std::vector<std::vector<Scalar>>& m,
                                                  unsigned cols, const FieldCtx& ctx) {
    RowSpan span(ctx);
    for (auto row : m) {
        row.resize(cols, ctx.zero());
        span.add(std::move(row));
    }
    std::vector<bool> is_pivot(cols, false);
    for (unsigned p : span.pivot_columns()) is_pivot[p] = true;
    std::vector<std::vector<Scalar>> basis;
    for (unsigned f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Scalar> v(cols, ctx.zero());
        v[f] = ctx.one();
        for (std::size_t r = 0; r < span.rows().size(); ++r)
            v[span.pivot_columns()[r]] = -span.rows()[r][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

inline ScalarMatrix mat_inverse(const ScalarMatrix& m, const FieldCtx& ctx) {
    unsigned n = m.n;
    std::vector<std::vector<Scalar>> aug(n, std::vector<Scalar>(2 * n, ctx.zero()));
    for (unsigned i = 0; i < n; ++i) {
        for (unsigned j = 0; j < n; ++j) aug[i][j] = m.at(i, j);
        aug[i][n + i] = ctx.one();
    }
    unsigned row = 0;
    for (unsigned col = 0; col < n && row < n; ++col) {
        unsigned sel = row;
        while (sel < n && aug[sel][col].is_zero()) ++sel;
        if (sel == n) throw std::invalid_argument("mat_inverse: singular matrix");
        std::swap(aug[sel], aug[row]);
        Scalar inv = aug[row][col].inverse();
        for (unsigned j = 0; j < 2 * n; ++j) aug[row][j] *= inv;
        for (unsigned i = 0; i < n; ++i) {
            if (i != row && !aug[i][col].is_zero()) {
                Scalar c = aug[i][col];
                for (unsigned j = 0; j < 2 * n; ++j) aug[i][j] -= c * aug[row][j];
            }
        }
        ++row;
    }
    ScalarMatrix r(n, ctx.zero());
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) r.at(i, j) = aug[i][n + j];
    return r;
}

inline std::vector<Scalar> mat_apply(const ScalarMatrix& m, const std::vector<Scalar>& v,
                                     const FieldCtx& ctx) {
    std::vector<Scalar> r(m.n, ctx.zero());
    for (unsigned i = 0; i < m.n; ++i)
        for (unsigned j = 0; j < m.n; ++j)
            if (!m.at(i, j).is_zero() && !v[j].is_zero()) r[i] += m.at(i, j) * v[j];
    return r;
}

}  // namespace hopfpi
