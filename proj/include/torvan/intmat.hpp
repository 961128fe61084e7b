#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "torvan/errors.hpp"

namespace torvan {

using Int = mpz_class;
using Rat = mpq_class;

/// Dense matrix of arbitrary-precision integers, row-major.
class IntMatrix {
public:
    IntMatrix() = default;

    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols) {
        if (rows < 0 || cols < 0) throw validation_error("IntMatrix: negative dimensions");
    }

    static IntMatrix identity(int n) {
        IntMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows) {
        int r = static_cast<int>(rows.size());
        int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
        IntMatrix m(r, c);
        for (int i = 0; i < r; ++i) {
            if (static_cast<int>(rows[i].size()) != c) throw validation_error("IntMatrix: ragged rows");
            for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
        }
        return m;
    }

    static IntMatrix from_rows(const std::vector<std::vector<long>>& rows) {
        std::vector<std::vector<Int>> z(rows.size());
        for (size_t i = 0; i < rows.size(); ++i) z[i].assign(rows[i].begin(), rows[i].end());
        return from_rows(z);
    }

    static IntMatrix diagonal(const std::vector<Int>& d) {
        IntMatrix m(static_cast<int>(d.size()), static_cast<int>(d.size()));
        for (size_t i = 0; i < d.size(); ++i) m.at(static_cast<int>(i), static_cast<int>(i)) = d[i];
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Int& at(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
    const Int& at(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }

    std::vector<Int> row(int i) const {
        std::vector<Int> v(cols_);
        for (int j = 0; j < cols_; ++j) v[j] = at(i, j);
        return v;
    }

    std::vector<Int> col(int j) const {
        std::vector<Int> v(rows_);
        for (int i = 0; i < rows_; ++i) v[i] = at(i, j);
        return v;
    }

    IntMatrix transpose() const {
        IntMatrix t(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    bool is_zero() const {
        for (const auto& v : data_)
            if (v != 0) return false;
        return true;
    }

    friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
        if (a.cols_ != b.rows_) throw validation_error("IntMatrix: product dimension mismatch");
        IntMatrix c(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                if (a.at(i, k) == 0) continue;
                for (int j = 0; j < b.cols_; ++j) c.at(i, j) += a.at(i, k) * b.at(k, j);
            }
        return c;
    }

    std::vector<Int> apply(const std::vector<Int>& v) const {
        if (static_cast<int>(v.size()) != cols_) throw validation_error("IntMatrix: apply dimension mismatch");
        std::vector<Int> out(rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) out[i] += at(i, j) * v[j];
        return out;
    }

    std::string to_string() const {
        std::ostringstream os;
        os << "[";
        for (int i = 0; i < rows_; ++i) {
            os << (i ? ",[" : "[");
            for (int j = 0; j < cols_; ++j) os << (j ? "," : "") << at(i, j);
            os << "]";
        }
        os << "]";
        return os.str();
    }

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Int> data_;
};

inline IntMatrix stack_rows(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.cols() && a.rows() != 0 && b.rows() != 0)
        throw validation_error("stack_rows: column count mismatch");
    int cols = a.rows() ? a.cols() : b.cols();
    IntMatrix m(a.rows() + b.rows(), cols);
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < cols; ++j) m.at(i, j) = a.at(i, j);
    for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < cols; ++j) m.at(a.rows() + i, j) = b.at(i, j);
    return m;
}

namespace detail {

inline void row_swap(IntMatrix& m, int a, int b) {
    if (a == b) return;
    for (int j = 0; j < m.cols(); ++j) std::swap(m.at(a, j), m.at(b, j));
}

inline void col_swap(IntMatrix& m, int a, int b) {
    if (a == b) return;
    for (int i = 0; i < m.rows(); ++i) std::swap(m.at(i, a), m.at(i, b));
}

// row[a] -= c * row[b]
inline void row_axpy(IntMatrix& m, int a, int b, const Int& c) {
    if (c == 0) return;
    for (int j = 0; j < m.cols(); ++j) m.at(a, j) -= c * m.at(b, j);
}

// col[a] -= c * col[b]
inline void col_axpy(IntMatrix& m, int a, int b, const Int& c) {
    if (c == 0) return;
    for (int i = 0; i < m.rows(); ++i) m.at(i, a) -= c * m.at(i, b);
}

inline void row_negate(IntMatrix& m, int a) {
    for (int j = 0; j < m.cols(); ++j) m.at(a, j) = -m.at(a, j);
}

inline Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

} // namespace detail

/// Row-style Hermite normal form of the row space of M.
/// Pivots positive, entries above each pivot reduced into [0, pivot); zero rows dropped.
/// Unique canonical form: two matrices have equal row spaces iff their HNFs are identical.
inline IntMatrix hnf(const IntMatrix& M) {
    IntMatrix a = M;
    const int m = a.rows(), n = a.cols();
    int row = 0;
    for (int col = 0; col < n && row < m; ++col) {
        // Euclidean elimination below the working row until one nonzero remains.
        for (;;) {
            int piv = -1;
            for (int r = row; r < m; ++r) {
                if (a.at(r, col) == 0) continue;
                if (piv < 0 || cmp(abs(a.at(r, col)), abs(a.at(piv, col))) < 0) piv = r;
            }
            if (piv < 0) break;
            detail::row_swap(a, row, piv);
            bool any_left = false;
            for (int r = row + 1; r < m; ++r) {
                if (a.at(r, col) == 0) continue;
                Int q = a.at(r, col) / a.at(row, col); // truncated; remainder shrinks
                detail::row_axpy(a, r, row, q);
                if (a.at(r, col) != 0) any_left = true;
            }
            if (!any_left) break;
        }
        if (a.at(row, col) == 0) continue;
        if (a.at(row, col) < 0) detail::row_negate(a, row);
        for (int r = 0; r < row; ++r)
            detail::row_axpy(a, r, row, detail::floor_div(a.at(r, col), a.at(row, col)));
        ++row;
    }
    IntMatrix out(row, n);
    for (int i = 0; i < row; ++i)
        for (int j = 0; j < n; ++j) out.at(i, j) = a.at(i, j);
    return out;
}

struct SmithForm {
    IntMatrix D; // same shape as input, diagonal with d1 | d2 | ...
    IntMatrix P; // rows x rows, unimodular
    IntMatrix K; // cols x cols, unimodular
};

/// Smith normal form with transforms: P * M * K = D.
inline SmithForm snf(const IntMatrix& M) {
    const int m = M.rows(), n = M.cols();
    IntMatrix a = M;
    IntMatrix p = IntMatrix::identity(m);
    IntMatrix k = IntMatrix::identity(n);

    int t = 0;
    while (t < m && t < n) {
        int pi = -1, pj = -1;
        for (int i = t; i < m; ++i)
            for (int j = t; j < n; ++j) {
                if (a.at(i, j) == 0) continue;
                if (pi < 0 || cmp(abs(a.at(i, j)), abs(a.at(pi, pj))) < 0) { pi = i; pj = j; }
            }
        if (pi < 0) break;
        detail::row_swap(a, t, pi);
        detail::row_swap(p, t, pi);
        detail::col_swap(a, t, pj);
        detail::col_swap(k, t, pj);

        // Clear the cross at (t,t); Euclid swaps may re-dirty, so loop to a fixed point.
        bool clean = false;
        while (!clean) {
            clean = true;
            for (int i = t + 1; i < m; ++i) {
                if (a.at(i, t) == 0) continue;
                Int q = a.at(i, t) / a.at(t, t);
                detail::row_axpy(a, i, t, q);
                detail::row_axpy(p, i, t, q);
                if (a.at(i, t) != 0) {
                    detail::row_swap(a, i, t);
                    detail::row_swap(p, i, t);
                    clean = false;
                }
            }
            for (int j = t + 1; j < n; ++j) {
                if (a.at(t, j) == 0) continue;
                Int q = a.at(t, j) / a.at(t, t);
                detail::col_axpy(a, j, t, q);
                detail::col_axpy(k, j, t, q);
                if (a.at(t, j) != 0) {
                    detail::col_swap(a, j, t);
                    detail::col_swap(k, j, t);
                    clean = false;
                }
            }
        }
        if (a.at(t, t) < 0) {
            detail::row_negate(a, t);
            detail::row_negate(p, t);
        }
        ++t;
    }

    // Enforce the divisibility chain d_i | d_{i+1} on the nonzero diagonal.
    int rank = t;
    for (int i = 0; i + 1 < rank; ++i) {
        for (int j = i + 1; j < rank; ++j) {
            if (a.at(j, j) % a.at(i, i) == 0) continue;
            // Fold d_j into column i and re-diagonalize the 2x2 corner via gcd steps.
            detail::col_axpy(a, i, j, Int(-1));
            detail::col_axpy(k, i, j, Int(-1));
            bool clean = false;
            while (!clean) {
                clean = true;
                if (a.at(j, i) != 0) {
                    Int q = a.at(j, i) / a.at(i, i);
                    detail::row_axpy(a, j, i, q);
                    detail::row_axpy(p, j, i, q);
                    if (a.at(j, i) != 0) {
                        detail::row_swap(a, j, i);
                        detail::row_swap(p, j, i);
                        clean = false;
                    }
                }
                if (a.at(i, j) != 0) {
                    Int q = a.at(i, j) / a.at(i, i);
                    detail::col_axpy(a, j, i, q);
                    detail::col_axpy(k, j, i, q);
                    if (a.at(i, j) != 0) {
                        detail::col_swap(a, j, i);
                        detail::col_swap(k, j, i);
                        clean = false;
                    }
                }
            }
            if (a.at(i, i) < 0) {
                detail::row_negate(a, i);
                detail::row_negate(p, i);
            }
            if (a.at(j, j) < 0) {
                detail::row_negate(a, j);
                detail::row_negate(p, j);
            }
        }
    }
    return SmithForm{std::move(a), std::move(p), std::move(k)};
}

/// Exact determinant (Bareiss fraction-free elimination).
inline Int det(const IntMatrix& M) {
    if (M.rows() != M.cols()) throw validation_error("det: matrix not square");
    const int n = M.rows();
    if (n == 0) return 1;
    IntMatrix a = M;
    Int prev = 1;
    int sign = 1;
    for (int c = 0; c + 1 < n; ++c) {
        if (a.at(c, c) == 0) {
            int piv = -1;
            for (int r = c + 1; r < n; ++r)
                if (a.at(r, c) != 0) { piv = r; break; }
            if (piv < 0) return 0;
            detail::row_swap(a, c, piv);
            sign = -sign;
        }
        for (int i = c + 1; i < n; ++i)
            for (int j = c + 1; j < n; ++j) {
                Int v = a.at(i, j) * a.at(c, c) - a.at(i, c) * a.at(c, j);
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                a.at(i, j) = v;
            }
        prev = a.at(c, c);
    }
    return sign * a.at(n - 1, n - 1);
}

inline int rank(const IntMatrix& M) { return hnf(M).rows(); }

} // namespace torvan
