#pragma once

// Matrices over the rational-function field, with the determinant strategy
// tuned to this project's matrices: expansion along the sparsest row or
// column with memoized minors (the 10x10 and 9x9 systems here have at most
// four nonzero entries per line), falling back to fraction-free Bareiss
// when the submatrix is dense.

#include "buchi/ratfunc.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace buchi {

class PolyMatrix {
   public:
    PolyMatrix(size_t rows, size_t cols, const VarSetPtr& vars)
        : rows_(rows), cols_(cols), vars_(vars), entries_(rows * cols, RatFunc::constant(vars, 0)) {}

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    const VarSetPtr& vars() const { return vars_; }

    RatFunc& at(size_t r, size_t c) { return entries_[r * cols_ + c]; }
    const RatFunc& at(size_t r, size_t c) const { return entries_[r * cols_ + c]; }

    bool is_square() const { return rows_ == cols_; }

    bool is_skew_symmetric() const {
        if (!is_square()) return false;
        for (size_t i = 0; i < rows_; ++i) {
            for (size_t j = i; j < cols_; ++j) {
                if (!(at(i, j) + at(j, i)).is_zero()) return false;
            }
        }
        return true;
    }

    PolyMatrix submatrix(const std::vector<size_t>& rows, const std::vector<size_t>& cols) const {
        for (size_t r : rows)
            if (r >= rows_) throw ExactError("IndexOutOfRange: row");
        for (size_t c : cols)
            if (c >= cols_) throw ExactError("IndexOutOfRange: col");
        PolyMatrix s(rows.size(), cols.size(), vars_);
        for (size_t i = 0; i < rows.size(); ++i)
            for (size_t j = 0; j < cols.size(); ++j) s.at(i, j) = at(rows[i], cols[j]);
        return s;
    }

    PolyMatrix with_deleted(size_t row, size_t col) const {
        std::vector<size_t> rs, cs;
        for (size_t i = 0; i < rows_; ++i)
            if (i != row) rs.push_back(i);
        for (size_t j = 0; j < cols_; ++j)
            if (j != col) cs.push_back(j);
        return submatrix(rs, cs);
    }

    PolyMatrix substituted(const std::map<size_t, RatFunc>& subs) const {
        PolyMatrix r(rows_, cols_, vars_);
        for (size_t i = 0; i < rows_ * cols_; ++i) r.entries_[i] = substitute(entries_[i], subs);
        return r;
    }

    friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
        if (a.cols_ != b.rows_) throw ExactError("SizeMismatch: matrix product");
        PolyMatrix r(a.rows_, b.cols_, a.vars_);
        for (size_t i = 0; i < a.rows_; ++i)
            for (size_t k = 0; k < a.cols_; ++k) {
                if (a.at(i, k).is_zero()) continue;
                for (size_t j = 0; j < b.cols_; ++j) {
                    if (b.at(k, j).is_zero()) continue;
                    r.at(i, j) += a.at(i, k) * b.at(k, j);
                }
            }
        return r;
    }

   private:
    size_t rows_, cols_;
    VarSetPtr vars_;
    std::vector<RatFunc> entries_;
};

namespace detail {

// Masks select the active rows/columns of the original matrix.
struct DetMemo {
    std::map<std::pair<uint64_t, uint64_t>, RatFunc> cache;
};

RatFunc det_rec(const PolyMatrix& a, uint64_t rowmask, uint64_t colmask, DetMemo& memo);

inline RatFunc det_bareiss(const PolyMatrix& a, const std::vector<size_t>& rows,
                           const std::vector<size_t>& cols) {
    // fraction-free over the polynomial subring is not available once entries
    // are genuine fractions; plain Gaussian elimination over the field is
    // exact here, with Bareiss used when everything is polynomial.
    size_t n = rows.size();
    std::vector<std::vector<RatFunc>> m(n, std::vector<RatFunc>(n, RatFunc::constant(a.vars(), 0)));
    bool all_poly = true;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            m[i][j] = a.at(rows[i], cols[j]);
            all_poly &= m[i][j].is_polynomial();
        }
    Rational sign = 1;
    if (all_poly) {
        // Bareiss: divisions are exact polynomial divisions
        MultiPoly prev = MultiPoly::constant(a.vars(), 1);
        std::vector<std::vector<MultiPoly>> p(n, std::vector<MultiPoly>(n));
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) p[i][j] = m[i][j].as_polynomial();
        for (size_t k = 0; k + 1 < n; ++k) {
            if (p[k][k].is_zero()) {
                size_t piv = k + 1;
                while (piv < n && p[piv][k].is_zero()) ++piv;
                if (piv == n) return RatFunc::constant(a.vars(), 0);
                std::swap(p[k], p[piv]);
                sign = -sign;
            }
            for (size_t i = k + 1; i < n; ++i)
                for (size_t j = k + 1; j < n; ++j)
                    p[i][j] = exact_divide(p[i][j] * p[k][k] - p[i][k] * p[k][j], prev);
            prev = p[k][k];
        }
        return RatFunc(p[n - 1][n - 1] * MultiPoly::constant(a.vars(), sign));
    }
    for (size_t k = 0; k < n; ++k) {
        if (m[k][k].is_zero()) {
            size_t piv = k + 1;
            while (piv < n && m[piv][k].is_zero()) ++piv;
            if (piv == n) return RatFunc::constant(a.vars(), 0);
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            if (m[i][k].is_zero()) continue;
            RatFunc f = m[i][k] / m[k][k];
            for (size_t j = k; j < n; ++j) m[i][j] -= f * m[k][j];
        }
    }
    RatFunc d = RatFunc::constant(a.vars(), sign);
    for (size_t k = 0; k < n; ++k) d *= m[k][k];
    return d;
}

inline RatFunc det_rec(const PolyMatrix& a, uint64_t rowmask, uint64_t colmask, DetMemo& memo) {
    int n = __builtin_popcountll(rowmask);
    if (n == 0) return RatFunc::constant(a.vars(), 1);
    auto key = std::make_pair(rowmask, colmask);
    auto it = memo.cache.find(key);
    if (it != memo.cache.end()) return it->second;

    std::vector<size_t> rows, cols;
    for (size_t i = 0; i < a.rows(); ++i)
        if (rowmask >> i & 1) rows.push_back(i);
    for (size_t j = 0; j < a.cols(); ++j)
        if (colmask >> j & 1) cols.push_back(j);

    // pick the sparsest active line
    size_t best = 0, best_count = SIZE_MAX;
    bool best_is_row = true;
    for (size_t i : rows) {
        size_t cnt = 0;
        for (size_t j : cols) cnt += !a.at(i, j).is_zero();
        if (cnt < best_count) {
            best_count = cnt;
            best = i;
            best_is_row = true;
        }
    }
    for (size_t j : cols) {
        size_t cnt = 0;
        for (size_t i : rows) cnt += !a.at(i, j).is_zero();
        if (cnt < best_count) {
            best_count = cnt;
            best = j;
            best_is_row = false;
        }
    }
    if (best_count == 0) {
        memo.cache[key] = RatFunc::constant(a.vars(), 0);
        return memo.cache[key];
    }
    if (best_count > 3 && n > 3) {
        RatFunc d = det_bareiss(a, rows, cols);
        memo.cache[key] = d;
        return d;
    }

    RatFunc acc = RatFunc::constant(a.vars(), 0);
    if (best_is_row) {
        size_t pos_i = 0;
        while (rows[pos_i] != best) ++pos_i;
        size_t pos_j = 0;
        for (size_t j : cols) {
            const RatFunc& e = a.at(best, j);
            if (!e.is_zero()) {
                RatFunc minor = det_rec(a, rowmask & ~(1ull << best), colmask & ~(1ull << j), memo);
                Rational sgn = ((pos_i + pos_j) % 2 == 0) ? 1 : -1;
                acc += e * minor * sgn;
            }
            ++pos_j;
        }
    } else {
        size_t pos_j = 0;
        while (cols[pos_j] != best) ++pos_j;
        size_t pos_i = 0;
        for (size_t i : rows) {
            const RatFunc& e = a.at(i, best);
            if (!e.is_zero()) {
                RatFunc minor = det_rec(a, rowmask & ~(1ull << i), colmask & ~(1ull << best), memo);
                Rational sgn = ((pos_i + pos_j) % 2 == 0) ? 1 : -1;
                acc += e * minor * sgn;
            }
            ++pos_i;
        }
    }
    memo.cache[key] = acc;
    return acc;
}

}  // namespace detail

inline RatFunc det(const PolyMatrix& a) {
    if (!a.is_square()) throw ExactError("NotSquare");
    if (a.rows() > 63) throw ExactError("det: matrix too large");
    detail::DetMemo memo;
    uint64_t all_rows = (a.rows() == 64) ? ~0ull : (1ull << a.rows()) - 1;
    return detail::det_rec(a, all_rows, all_rows, memo);
}

// Determinant of the sub-matrix on the given row and column index sets
// (0-based, matching the row-label convention used throughout).
inline RatFunc subdet(const PolyMatrix& a, const std::vector<size_t>& rows,
                      const std::vector<size_t>& cols) {
    if (rows.size() != cols.size()) throw ExactError("SizeMismatch: subdet needs |rows| == |cols|");
    return det(a.submatrix(rows, cols));
}

// pf(A) = a01*a23 - a02*a13 + a03*a12 for a 4x4 skew-symmetric A.
inline RatFunc pfaffian4(const PolyMatrix& a) {
    if (a.rows() != 4 || a.cols() != 4) throw ExactError("pfaffian4: need 4x4");
    if (!a.is_skew_symmetric()) throw ExactError("NotSkew");
    return a.at(0, 1) * a.at(2, 3) - a.at(0, 2) * a.at(1, 3) + a.at(0, 3) * a.at(1, 2);
}

// Exact rank via Gaussian elimination over the fraction field after an
// exact rational substitution for every variable.
inline size_t rank_at_point(const PolyMatrix& a, const std::vector<Rational>& point) {
    std::vector<std::vector<Rational>> m(a.rows(), std::vector<Rational>(a.cols()));
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j) m[i][j] = a.at(i, j).eval(point);
    size_t rank = 0;
    for (size_t col = 0; col < a.cols() && rank < a.rows(); ++col) {
        size_t piv = rank;
        while (piv < a.rows() && m[piv][col] == 0) ++piv;
        if (piv == a.rows()) continue;
        std::swap(m[rank], m[piv]);
        for (size_t i = rank + 1; i < a.rows(); ++i) {
            if (m[i][col] == 0) continue;
            Rational f = m[i][col] / m[rank][col];
            for (size_t j = col; j < a.cols(); ++j) m[i][j] -= f * m[rank][j];
        }
        ++rank;
    }
    return rank;
}

}  // namespace buchi
