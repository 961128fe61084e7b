#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "torvan/gf.hpp"
#include "torvan/lattice.hpp"

namespace torvan {

/// Validated linear data of the exact sequence 0 -> Z^n -> Z^r -> Z^d -> 0:
/// ray matrix phi (r x n, rows are the ray generators), grading matrix beta
/// (d x r, d = r - n), and the ground field F_q.
struct ToricSetup {
    IntMatrix phi;
    IntMatrix beta;
    uint32_t q = 0;
    FqField field = FqField::make(2);
    bool beta_nonneg = true;

    int r() const { return phi.rows(); }
    int n() const { return phi.cols(); }
    int d() const { return beta.rows(); }
};

struct BetaResult {
    IntMatrix beta;
    bool nonneg; // false: raw Smith rows returned, no nonnegative unimodular combination found
};

namespace detail {

inline void check_phi(const IntMatrix& phi) {
    const int r = phi.rows(), n = phi.cols();
    if (n < 1 || r <= n) throw validation_error("setup: phi must be r x n with r > n >= 1");
    SmithForm s = snf(phi);
    int rnk = 0;
    for (int i = 0; i < std::min(r, n); ++i)
        if (s.D.at(i, i) != 0) ++rnk;
    if (rnk != n) throw validation_error("setup: rays do not span (phi rank < n)");
    for (int i = 0; i < n; ++i)
        if (s.D.at(i, i) != 1)
            throw validation_error("setup: class group has torsion (Smith diagonal of phi is not all ones)");
}

} // namespace detail

/// Derives a grading matrix from phi: the bottom d rows of the Smith transform
/// P satisfy beta*phi = 0 and make the sequence exact. A bounded deterministic
/// search over unimodular row combinations then looks for an entrywise
/// nonnegative representative; on failure the raw rows are returned flagged.
inline BetaResult beta_from_phi(const IntMatrix& phi, int search_bound = 5) {
    detail::check_phi(phi);
    const int r = phi.rows(), n = phi.cols();
    const int d = r - n;
    SmithForm s = snf(phi);
    IntMatrix raw(d, r);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < r; ++j) raw.at(i, j) = s.P.at(n + i, j);

    // candidate combination vectors u with u * raw >= 0, ordered by (|u|_1, lex)
    std::vector<std::vector<long>> candidates;
    std::vector<long> u(d, -search_bound);
    for (;;) {
        bool nonzero = std::any_of(u.begin(), u.end(), [](long v) { return v != 0; });
        if (nonzero) {
            bool ok = true;
            for (int j = 0; j < r && ok; ++j) {
                Int acc = 0;
                for (int i = 0; i < d; ++i) acc += Int(u[i]) * raw.at(i, j);
                if (acc < 0) ok = false;
            }
            if (ok) candidates.push_back(u);
        }
        int pos = d - 1;
        while (pos >= 0 && u[pos] == search_bound) u[pos--] = -search_bound;
        if (pos < 0) break;
        ++u[pos];
    }
    std::sort(candidates.begin(), candidates.end(), [](const auto& a, const auto& b) {
        long sa = 0, sb = 0;
        for (long v : a) sa += std::abs(v);
        for (long v : b) sb += std::abs(v);
        return sa != sb ? sa < sb : a < b;
    });
    if (candidates.size() > 64) candidates.resize(64);

    // pick d candidates forming a unimodular matrix; first hit in index order wins
    std::vector<int> chosen;
    std::vector<int> found;
    auto search = [&](auto&& self, int start) -> bool {
        if (static_cast<int>(chosen.size()) == d) {
            IntMatrix um(d, d);
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j) um.at(i, j) = candidates[chosen[i]][j];
            Int dd = det(um);
            if (dd == 1 || dd == -1) {
                found = chosen;
                return true;
            }
            return false;
        }
        for (int c = start; c < static_cast<int>(candidates.size()); ++c) {
            chosen.push_back(c);
            if (self(self, c + 1)) return true;
            chosen.pop_back();
        }
        return false;
    };
    if (!candidates.empty() && search(search, 0)) {
        std::vector<std::vector<Int>> rows;
        for (int i = 0; i < d; ++i) {
            std::vector<Int> row(r);
            for (int j = 0; j < r; ++j)
                for (int t = 0; t < d; ++t) row[j] += Int(candidates[found[i]][t]) * raw.at(t, j);
            rows.push_back(std::move(row));
        }
        std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
            for (size_t j = 0; j < a.size(); ++j)
                if (a[j] != b[j]) return a[j] > b[j];
            return false;
        });
        return BetaResult{IntMatrix::from_rows(rows), true};
    }
    return BetaResult{std::move(raw), false};
}

/// Checks every ToricSetup invariant, reporting the first violation by name.
inline ToricSetup validate_setup(const IntMatrix& phi, const IntMatrix& beta, uint32_t q) {
    detail::check_phi(phi);
    const int r = phi.rows(), n = phi.cols(), d = r - n;
    if (beta.rows() != d)
        throw validation_error("setup: beta must have r - n = " + std::to_string(d) + " rows");
    if (beta.cols() != r) throw validation_error("setup: beta must have r columns");
    IntMatrix prod = beta * phi;
    if (!prod.is_zero()) throw validation_error("setup: beta * phi != 0");
    if (rank(beta) != d) throw validation_error("setup: beta rank deficient");
    if (!(image_lattice(phi) == kernel_lattice(beta)))
        throw validation_error("setup: sequence not exact (image(phi) != ker(beta))");
    bool nonneg = true;
    for (int i = 0; i < d && nonneg; ++i)
        for (int j = 0; j < r && nonneg; ++j)
            if (beta.at(i, j) < 0) nonneg = false;
    ToricSetup setup;
    setup.phi = phi;
    setup.beta = beta;
    setup.q = q;
    setup.field = FqField::make(q);
    setup.beta_nonneg = nonneg;
    return setup;
}

/// Entrywise representative of Q in [0, q-2] modulo q-1 (all zeros for q = 2);
/// parameterizes the same subgroup since t^{q-1} = 1 on F_q*.
inline IntMatrix normalize_Q(const IntMatrix& Q, uint32_t q) {
    if (q < 2) throw validation_error("normalize_Q: q must be >= 2");
    IntMatrix out = Q;
    Int m = static_cast<long>(q - 1);
    for (int i = 0; i < out.rows(); ++i)
        for (int j = 0; j < out.cols(); ++j) {
            Int v;
            mpz_fdiv_r(v.get_mpz_t(), out.at(i, j).get_mpz_t(), m.get_mpz_t());
            out.at(i, j) = v;
        }
    return out;
}

/// Q is homogeneous iff ker(Q) is contained in ker(beta) (then A*Q = beta has
/// a rational solution A).
inline bool is_homogeneous_Q(const IntMatrix& Q, const ToricSetup& setup) {
    if (Q.cols() != setup.r()) throw validation_error("is_homogeneous_Q: Q must have r columns");
    return lattice_subset(kernel_lattice(Q), kernel_lattice(setup.beta));
}

// ---------------------------------------------------------------------------
// JSON input document: { "q": int, "phi": [[int]], "beta": [[int]] (optional),
//                        "Q": [[int]] (optional) }
// ---------------------------------------------------------------------------

inline IntMatrix matrix_from_json(const nlohmann::json& j, const std::string& name) {
    if (!j.is_array()) throw validation_error("input field '" + name + "': expected an array of rows");
    std::vector<std::vector<Int>> rows;
    for (const auto& row : j) {
        if (!row.is_array()) throw validation_error("input field '" + name + "': expected rows of integers");
        std::vector<Int> r;
        for (const auto& v : row) {
            if (v.is_number_integer()) r.emplace_back(static_cast<long>(v.get<int64_t>()));
            else if (v.is_string()) r.emplace_back(Int(v.get<std::string>()));
            else throw validation_error("input field '" + name + "': entries must be integers");
        }
        rows.push_back(std::move(r));
    }
    return IntMatrix::from_rows(rows);
}

inline nlohmann::json matrix_to_json(const IntMatrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 0; j < m.cols(); ++j) {
            if (m.at(i, j).fits_slong_p()) row.push_back(m.at(i, j).get_si());
            else row.push_back(m.at(i, j).get_str());
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

struct ProblemInput {
    ToricSetup setup;
    std::optional<IntMatrix> Q;
    bool beta_supplied = false;
};

inline ProblemInput problem_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw validation_error("input: expected a JSON object");
    if (!j.contains("q")) throw validation_error("input field 'q': missing");
    if (!j["q"].is_number_integer() || j["q"].get<int64_t>() < 2)
        throw validation_error("input field 'q': expected an integer >= 2");
    uint32_t q = static_cast<uint32_t>(j["q"].get<int64_t>());
    if (!j.contains("phi")) throw validation_error("input field 'phi': missing");
    IntMatrix phi = matrix_from_json(j["phi"], "phi");

    ProblemInput in;
    if (j.contains("beta")) {
        in.beta_supplied = true;
        in.setup = validate_setup(phi, matrix_from_json(j["beta"], "beta"), q);
    } else {
        BetaResult br = beta_from_phi(phi);
        in.setup = validate_setup(phi, br.beta, q);
    }
    if (j.contains("Q")) {
        IntMatrix Q = matrix_from_json(j["Q"], "Q");
        if (Q.cols() != in.setup.r())
            throw validation_error("input field 'Q': must have r = " + std::to_string(in.setup.r()) + " columns");
        in.Q = std::move(Q);
    }
    return in;
}

inline nlohmann::json problem_to_json(const ToricSetup& setup, const std::optional<IntMatrix>& Q) {
    nlohmann::json j;
    j["q"] = setup.q;
    j["phi"] = matrix_to_json(setup.phi);
    j["beta"] = matrix_to_json(setup.beta);
    if (Q) j["Q"] = matrix_to_json(*Q);
    return j;
}

} // namespace torvan
