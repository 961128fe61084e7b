#pragma once

#include <string>
#include <utility>
#include <vector>

#include "torvan/intmat.hpp"

namespace torvan {

/// Sublattice of Z^n stored by its row-HNF basis. Canonicalization is eager,
/// so equality of lattices is equality of basis matrices.
class Lattice {
public:
    static Lattice zero(int ambient) { return Lattice(ambient, IntMatrix(0, ambient)); }

    static Lattice from_rows(int ambient, const IntMatrix& rows) {
        if (rows.rows() > 0 && rows.cols() != ambient)
            throw validation_error("Lattice: row length != ambient dimension");
        return Lattice(ambient, hnf(rows));
    }

    static Lattice from_rows(const std::vector<std::vector<long>>& rows, int ambient) {
        return from_rows(ambient, IntMatrix::from_rows(rows));
    }

    static Lattice full(int ambient) { return from_rows(ambient, IntMatrix::identity(ambient)); }

    int ambient_dim() const { return ambient_; }
    int rank() const { return basis_.rows(); }
    const IntMatrix& basis() const { return basis_; }
    std::vector<Int> basis_row(int i) const { return basis_.row(i); }

    /// Membership by back-substitution against the echelon basis.
    bool contains(const std::vector<Int>& v) const {
        if (static_cast<int>(v.size()) != ambient_) throw validation_error("Lattice: vector dimension mismatch");
        std::vector<Int> w = v;
        for (int i = 0; i < basis_.rows(); ++i) {
            int pc = pivot_col(i);
            Int q, r;
            mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), w[pc].get_mpz_t(), basis_.at(i, pc).get_mpz_t());
            if (r != 0) return false;
            for (int j = 0; j < ambient_; ++j) w[j] -= q * basis_.at(i, j);
        }
        for (const auto& x : w)
            if (x != 0) return false;
        return true;
    }

    friend bool operator==(const Lattice& a, const Lattice& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }

    std::string to_string() const { return basis_.to_string(); }

private:
    Lattice(int ambient, IntMatrix basis) : ambient_(ambient), basis_(std::move(basis)) {}

    int pivot_col(int i) const {
        for (int j = 0; j < ambient_; ++j)
            if (basis_.at(i, j) != 0) return j;
        throw std::logic_error("Lattice: zero row in canonical basis");
    }

    int ambient_ = 0;
    IntMatrix basis_;
};

/// {m : M*m = 0}, via the Smith form (kernel basis = trailing columns of K).
inline Lattice kernel_lattice(const IntMatrix& M) {
    const int n = M.cols();
    SmithForm s = snf(M);
    int rnk = 0;
    int dlen = std::min(M.rows(), n);
    for (int i = 0; i < dlen; ++i)
        if (s.D.at(i, i) != 0) ++rnk;
    IntMatrix rows(n - rnk, n);
    for (int j = rnk; j < n; ++j)
        for (int i = 0; i < n; ++i) rows.at(j - rnk, i) = s.K.at(i, j);
    return Lattice::from_rows(n, rows);
}

/// Column span of M as a lattice in Z^rows.
inline Lattice image_lattice(const IntMatrix& M) {
    return Lattice::from_rows(M.rows(), M.transpose());
}

inline Lattice lattice_sum(const Lattice& a, const Lattice& b) {
    if (a.ambient_dim() != b.ambient_dim()) throw validation_error("lattice_sum: ambient dimension mismatch");
    return Lattice::from_rows(a.ambient_dim(), stack_rows(a.basis(), b.basis()));
}

inline Lattice lattice_scale(const Int& k, const Lattice& l) {
    IntMatrix rows = l.basis();
    for (int i = 0; i < rows.rows(); ++i)
        for (int j = 0; j < rows.cols(); ++j) rows.at(i, j) *= k;
    return Lattice::from_rows(l.ambient_dim(), rows);
}

/// {m : m in a and m in b}, by the kernel of the stacked system
/// [B_a^T | -B_b^T] * (u, v)^T = 0 projected through B_a.
inline Lattice lattice_intersect(const Lattice& a, const Lattice& b) {
    const int n = a.ambient_dim();
    if (n != b.ambient_dim()) throw validation_error("lattice_intersect: ambient dimension mismatch");
    const int ka = a.rank(), kb = b.rank();
    if (ka == 0 || kb == 0) return Lattice::zero(n);
    IntMatrix sys(n, ka + kb);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < ka; ++j) sys.at(i, j) = a.basis().at(j, i);
        for (int j = 0; j < kb; ++j) sys.at(i, ka + j) = -b.basis().at(j, i);
    }
    Lattice ker = kernel_lattice(sys);
    IntMatrix rows(ker.rank(), n);
    for (int i = 0; i < ker.rank(); ++i) {
        std::vector<Int> uv = ker.basis_row(i);
        for (int j = 0; j < n; ++j) {
            Int acc = 0;
            for (int t = 0; t < ka; ++t) acc += uv[t] * a.basis().at(t, j);
            rows.at(i, j) = acc;
        }
    }
    return Lattice::from_rows(n, rows);
}

/// {m : k*m in l} for k >= 1.
inline Lattice lattice_colon(const Lattice& l, const Int& k) {
    if (k <= 0) throw validation_error("lattice_colon: k must be positive");
    const int n = l.ambient_dim();
    const int rk = l.rank();
    if (rk == 0) return Lattice::zero(n);
    // kernel of [k*I | -B^T] over (m, c), projected onto m
    IntMatrix sys(n, n + rk);
    for (int i = 0; i < n; ++i) {
        sys.at(i, i) = k;
        for (int j = 0; j < rk; ++j) sys.at(i, n + j) = -l.basis().at(j, i);
    }
    Lattice ker = kernel_lattice(sys);
    IntMatrix rows(ker.rank(), n);
    for (int i = 0; i < ker.rank(); ++i)
        for (int j = 0; j < n; ++j) rows.at(i, j) = ker.basis().at(i, j);
    return Lattice::from_rows(n, rows);
}

inline bool lattice_eq(const Lattice& a, const Lattice& b) {
    if (a.ambient_dim() != b.ambient_dim()) throw validation_error("lattice_eq: ambient dimension mismatch");
    return a == b;
}

inline bool lattice_contains(const Lattice& l, const std::vector<Int>& v) { return l.contains(v); }

inline bool lattice_subset(const Lattice& a, const Lattice& b) {
    for (int i = 0; i < a.rank(); ++i)
        if (!b.contains(a.basis_row(i))) return false;
    return true;
}

} // namespace torvan
