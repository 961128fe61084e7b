#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "torvan/points.hpp"

namespace torvan {

/// Evaluation code: values of the degree-alpha monomial basis at fixed
/// canonical representatives of the points of Y_Q.
struct EvalCode {
    std::vector<Int> alpha;
    PointSet points;
    std::vector<Exps> basis;                       // monomials spanning S_alpha
    std::vector<std::vector<FqElem>> gen_matrix;   // |basis| x |points|
    size_t n = 0;                                  // |points|
    size_t k = 0;                                  // rank of the generator matrix
    size_t dmin = 0;                               // exact minimum distance; 0 when k = 0
};

namespace detail {

// Solves the square rational system (columns `pick` of beta) = alpha.
// Returns the full-length solution with zeros elsewhere, or nullopt.
inline std::optional<std::vector<Rat>> basic_solution(const IntMatrix& beta, const std::vector<Int>& alpha,
                                                      const std::vector<int>& pick) {
    const int d = beta.rows();
    std::vector<std::vector<Rat>> a(d, std::vector<Rat>(d + 1));
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) a[i][j] = Rat(beta.at(i, pick[j]));
        a[i][d] = Rat(alpha[i]);
    }
    for (int c = 0; c < d; ++c) {
        int piv = -1;
        for (int r0 = c; r0 < d; ++r0)
            if (a[r0][c] != 0) { piv = r0; break; }
        if (piv < 0) return std::nullopt; // singular
        std::swap(a[c], a[piv]);
        for (int r0 = 0; r0 < d; ++r0) {
            if (r0 == c || a[r0][c] == 0) continue;
            Rat f = a[r0][c] / a[c][c];
            for (int j = c; j <= d; ++j) a[r0][j] -= f * a[c][j];
        }
    }
    std::vector<Rat> sol(beta.cols(), Rat(0));
    for (int c = 0; c < d; ++c) {
        Rat v = a[c][d] / a[c][c];
        v.canonicalize();
        sol[pick[c]] = v;
    }
    return sol;
}

// All basic feasible solutions (vertices) of {x >= 0 : beta x = alpha}.
inline std::vector<std::vector<Rat>> fiber_vertices(const IntMatrix& beta, const std::vector<Int>& alpha) {
    const int d = beta.rows(), r = beta.cols();
    std::vector<std::vector<Rat>> verts;
    std::vector<int> pick(d);
    auto rec = [&](auto&& self, int start, int depth) -> void {
        if (depth == d) {
            auto sol = basic_solution(beta, alpha, pick);
            if (!sol) return;
            for (const auto& v : *sol)
                if (v < 0) return;
            verts.push_back(*sol);
            return;
        }
        for (int c = start; c < r; ++c) {
            pick[depth] = c;
            self(self, c + 1, depth + 1);
        }
    };
    rec(rec, 0, 0);
    return verts;
}

} // namespace detail

/// All a in N^r with beta * a = alpha, in ascending lex order. Per-variable
/// caps come from exact vertex enumeration of the fiber polytope; an
/// unbounded fiber (impossible when the rays positively span) is an error.
inline std::vector<Exps> monomials_of_degree(const std::vector<Int>& alpha, const ToricSetup& setup,
                                             uint64_t max_enum = kDefaultEnumBudget) {
    const IntMatrix& beta = setup.beta;
    const int r = beta.cols();
    if (static_cast<int>(alpha.size()) != beta.rows())
        throw validation_error("monomials_of_degree: alpha must have d entries");

    // recession ray check: {x >= 0, beta x = 0, sum x = 1} feasible <=> unbounded fiber
    {
        IntMatrix aug(beta.rows() + 1, r);
        for (int i = 0; i < beta.rows(); ++i)
            for (int j = 0; j < r; ++j) aug.at(i, j) = beta.at(i, j);
        for (int j = 0; j < r; ++j) aug.at(beta.rows(), j) = 1;
        std::vector<Int> rhs(beta.rows() + 1);
        rhs[beta.rows()] = 1;
        if (!detail::fiber_vertices(aug, rhs).empty())
            throw validation_error("monomials_of_degree: unbounded monomial space for this grading");
    }

    auto verts = detail::fiber_vertices(beta, alpha);
    if (verts.empty()) return {};
    std::vector<uint32_t> cap(r, 0);
    for (const auto& v : verts)
        for (int j = 0; j < r; ++j) {
            Rat x = v[j];
            Int c;
            mpz_cdiv_q(c.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
            if (c > 0 && static_cast<uint32_t>(c.get_ui()) > cap[j]) cap[j] = static_cast<uint32_t>(c.get_ui());
        }

    uint64_t box = 1;
    for (int j = 0; j < r; ++j) {
        box *= cap[j] + 1;
        if (box > max_enum) throw budget_error("monomials_of_degree: enumeration budget exceeded");
    }

    std::vector<Exps> out;
    Exps a(r, 0);
    std::vector<Int> residual = alpha; // alpha - beta * a, maintained incrementally
    auto rec = [&](auto&& self, int var) -> void {
        if (var == r) {
            for (const auto& v : residual)
                if (v != 0) return;
            out.push_back(a);
            return;
        }
        for (uint32_t e = 0; e <= cap[var]; ++e) {
            a[var] = e;
            self(self, var + 1);
            for (int i = 0; i < beta.rows(); ++i) residual[i] -= beta.at(i, var);
        }
        for (int i = 0; i < beta.rows(); ++i) residual[i] += beta.at(i, var) * static_cast<long>(cap[var] + 1);
        a[var] = 0;
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    return out;
}

/// Builds the evaluation code of S_alpha on Y_Q: generator matrix, dimension
/// by row reduction, minimum distance by exhausting all q^k codewords.
inline EvalCode build_code(const IntMatrix& Q, const std::vector<Int>& alpha, const ToricSetup& setup,
                           uint64_t max_codewords = 1'000'000, uint64_t max_enum = kDefaultEnumBudget) {
    EvalCode code;
    code.alpha = alpha;
    code.points = enumerate_YQ(Q, setup, max_enum);
    code.basis = monomials_of_degree(alpha, setup, max_enum);
    code.n = code.points.size();

    const FqField& fld = setup.field;
    code.gen_matrix.assign(code.basis.size(), std::vector<FqElem>(code.n, fld.zero()));
    for (size_t i = 0; i < code.basis.size(); ++i)
        for (size_t j = 0; j < code.n; ++j) {
            FqElem v = fld.one();
            const auto& p = code.points.points[j];
            for (int t = 0; t < setup.r(); ++t)
                if (code.basis[i][t] != 0)
                    v = fld.mul(v, fld.eta_pow(static_cast<uint64_t>(p.dlogs[t]) * code.basis[i][t]));
            code.gen_matrix[i][j] = v;
        }

    // row reduce to an independent spanning set
    std::vector<std::vector<FqElem>> rowspace;
    for (const auto& row : code.gen_matrix) {
        std::vector<FqElem> work = row;
        for (const auto& basis_row : rowspace) {
            size_t lead = 0;
            while (lead < code.n && basis_row[lead].code == 0) ++lead;
            if (lead < code.n && work[lead].code != 0) {
                FqElem f = fld.div(work[lead], basis_row[lead]);
                for (size_t j = 0; j < code.n; ++j) work[j] = fld.sub(work[j], fld.mul(f, basis_row[j]));
            }
        }
        if (std::any_of(work.begin(), work.end(), [](FqElem e) { return e.code != 0; })) {
            // normalize the new pivot and insert keeping echelon shape
            size_t lead = 0;
            while (work[lead].code == 0) ++lead;
            FqElem inv = fld.inv(work[lead]);
            for (size_t j = 0; j < code.n; ++j) work[j] = fld.mul(work[j], inv);
            rowspace.push_back(std::move(work));
            std::sort(rowspace.begin(), rowspace.end(), [&](const auto& x, const auto& y) {
                size_t lx = 0, ly = 0;
                while (lx < code.n && x[lx].code == 0) ++lx;
                while (ly < code.n && y[ly].code == 0) ++ly;
                return lx < ly;
            });
        }
    }
    code.k = rowspace.size();
    if (code.k == 0) {
        code.dmin = 0; // degenerate: no nonzero codewords
        return code;
    }

    uint64_t total = 1;
    for (size_t i = 0; i < code.k; ++i) {
        total *= fld.q();
        if (total > max_codewords) throw budget_error("build_code: q^k exceeds the codeword budget");
    }

    size_t best = code.n + 1;
    std::vector<uint32_t> msg(code.k, 0);
    std::vector<FqElem> word(code.n);
    for (;;) {
        // advance odometer; skip the zero message
        size_t pos = code.k;
        while (pos-- > 0) {
            if (++msg[pos] < fld.q()) break;
            msg[pos] = 0;
        }
        if (pos == static_cast<size_t>(-1)) break;
        std::fill(word.begin(), word.end(), fld.zero());
        for (size_t i = 0; i < code.k; ++i) {
            if (msg[i] == 0) continue;
            FqElem c = fld.from_code(msg[i]);
            for (size_t j = 0; j < code.n; ++j)
                word[j] = fld.add(word[j], fld.mul(c, rowspace[i][j]));
        }
        size_t weight = 0;
        for (const auto& e : word)
            if (e.code != 0) ++weight;
        if (weight > 0 && weight < best) best = weight;
    }
    code.dmin = best;
    return code;
}

} // namespace torvan
