#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "torvan/groebner.hpp"
#include "torvan/toric.hpp"

namespace torvan {

enum class VanishMethod { EliminationGeneral, EliminationSimple, Lattice };

inline std::string method_name(VanishMethod m) {
    switch (m) {
        case VanishMethod::EliminationGeneral: return "elimination-general";
        case VanishMethod::EliminationSimple: return "elimination-simple";
        case VanishMethod::Lattice: return "lattice";
    }
    return "?";
}

/// I(Y_Q) as a reduced monic lex Groebner basis in the coordinate ring
/// F_q[x1..xr], plus how it was obtained.
struct VanishingResult {
    Ideal ideal;
    VanishMethod method = VanishMethod::Lattice;
    std::optional<Lattice> lattice_used;
    std::optional<bool> condition_held;
};

/// The coordinate ring S = F_q[x1..xr].
inline RingPtr cox_ring(const ToricSetup& setup) {
    return make_xyz_ring(setup.field, setup.r(), 0, 0, false);
}

namespace detail {

inline uint32_t exp_of(const Int& v) {
    if (v > (1 << 30)) throw std::overflow_error("exponent too large");
    return static_cast<uint32_t>(v.get_ui());
}

// positive/negative part of column i of M, as y- or z-block exponents
inline void split_column(const IntMatrix& m, int col, std::vector<uint32_t>& plus, std::vector<uint32_t>& minus) {
    plus.assign(m.rows(), 0);
    minus.assign(m.rows(), 0);
    for (int i = 0; i < m.rows(); ++i) {
        const Int& v = m.at(i, col);
        if (v > 0) plus[i] = exp_of(v);
        else if (v < 0) minus[i] = exp_of(-v);
    }
}

} // namespace detail

/// The general construction in R = F_q[x, y, z, w]: for each i the binomial
/// x_i y^{qi-} z^{bi-} - y^{qi+} z^{bi+}, the cyclotomic y_i^{q-1} - 1, and
/// the single w-generator clearing all negative parts. Valid for any integer
/// Q; r + s + 1 generators in total.
inline Ideal build_J_general(const IntMatrix& Q, const ToricSetup& setup) {
    if (Q.cols() != setup.r()) throw validation_error("build_J_general: Q must have r columns");
    const int r = setup.r(), s = Q.rows(), d = setup.d();
    RingPtr ring = make_xyz_ring(setup.field, r, s, d, true);
    const FqField& fld = setup.field;
    const int nv = ring->nvars();
    std::vector<Polynomial> gens;

    std::vector<uint32_t> qp, qm, bp, bm;
    Exps wexps(nv, 0); // accumulates the product of all negative parts
    wexps[nv - 1] = 1; // w
    for (int i = 0; i < r; ++i) {
        detail::split_column(Q, i, qp, qm);
        detail::split_column(setup.beta, i, bp, bm);
        Exps lhs(nv, 0), rhs(nv, 0);
        lhs[i] = 1;
        for (int j = 0; j < s; ++j) { lhs[r + j] = qm[j]; rhs[r + j] = qp[j]; }
        for (int j = 0; j < d; ++j) { lhs[r + s + j] = bm[j]; rhs[r + s + j] = bp[j]; }
        gens.push_back(Polynomial::monomial(ring, lhs, fld.one()) -
                       Polynomial::monomial(ring, rhs, fld.one()));
        for (int j = 0; j < s; ++j) wexps[r + j] += qm[j];
        for (int j = 0; j < d; ++j) wexps[r + s + j] += bm[j];
    }
    for (int j = 0; j < s; ++j) {
        Exps ye(nv, 0);
        ye[r + j] = setup.q - 1;
        gens.push_back(Polynomial::monomial(ring, ye, fld.one()) - Polynomial::constant(ring, fld.one()));
    }
    gens.push_back(Polynomial::monomial(ring, wexps, fld.one()) - Polynomial::constant(ring, fld.one()));
    return Ideal(ring, std::move(gens));
}

/// The simplified construction in R = F_q[x, y, z] for entrywise nonnegative
/// Q and beta: x_i - y^{qi} z^{bi} and y_i^{q-1} - 1.
inline Ideal build_J_simple(const IntMatrix& Q, const ToricSetup& setup) {
    if (Q.cols() != setup.r()) throw validation_error("build_J_simple: Q must have r columns");
    const int r = setup.r(), s = Q.rows(), d = setup.d();
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < r; ++j)
            if (Q.at(i, j) < 0) throw validation_error("build_J_simple: Q has a negative entry");
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < r; ++j)
            if (setup.beta.at(i, j) < 0) throw validation_error("build_J_simple: beta has a negative entry");

    RingPtr ring = make_xyz_ring(setup.field, r, s, d, false);
    const FqField& fld = setup.field;
    const int nv = ring->nvars();
    std::vector<Polynomial> gens;
    for (int i = 0; i < r; ++i) {
        Exps lhs(nv, 0), rhs(nv, 0);
        lhs[i] = 1;
        for (int j = 0; j < s; ++j) rhs[r + j] = detail::exp_of(Q.at(j, i));
        for (int j = 0; j < d; ++j) rhs[r + s + j] = detail::exp_of(setup.beta.at(j, i));
        gens.push_back(Polynomial::monomial(ring, lhs, fld.one()) -
                       Polynomial::monomial(ring, rhs, fld.one()));
    }
    for (int j = 0; j < s; ++j) {
        Exps ye(nv, 0);
        ye[r + j] = setup.q - 1;
        gens.push_back(Polynomial::monomial(ring, ye, fld.one()) - Polynomial::constant(ring, fld.one()));
    }
    return Ideal(ring, std::move(gens));
}

/// Eliminates the auxiliary variables from J with the block order
/// w > z1 > ... > zd > y1 > ... > ys > x1 > ... > xr, and restricts to S.
/// The surviving basis is the reduced lex Groebner basis of I(Y_Q).
inline VanishingResult vanishing_via_elimination(const IntMatrix& Q, const ToricSetup& setup, bool general,
                                                 uint64_t budget = kDefaultReductionBudget) {
    IntMatrix Quse = Q;
    if (!general) {
        Quse = normalize_Q(Q, setup.q);
        if (!setup.beta_nonneg)
            throw validation_error("vanishing_via_elimination: simple method needs a nonnegative beta");
    }
    Ideal J = general ? build_J_general(Quse, setup) : build_J_simple(Quse, setup);
    const RingPtr& ring = J.ring();
    const int r = setup.r();
    // drop everything but the x block, z before y per the elimination order
    std::vector<int> drop;
    if (general) drop.push_back(ring->nvars() - 1);
    const int s = Quse.rows(), d = setup.d();
    for (int j = 0; j < d; ++j) drop.push_back(r + s + j);
    for (int j = 0; j < s; ++j) drop.push_back(r + j);
    MonomialOrder order = MonomialOrder::block_lex(drop, ring->nvars());
    GroebnerBasis gb = buchberger(J, order, budget);

    RingPtr sring = cox_ring(setup);
    std::vector<int> back(ring->nvars(), -1);
    for (int v = 0; v < r; ++v) back[v] = v;
    std::vector<Polynomial> kept;
    for (const auto& f : gb.elements) {
        bool in_s = true;
        for (const auto& t : f.terms())
            for (int v = r; v < ring->nvars() && in_s; ++v)
                if (t.exps[v] != 0) in_s = false;
        if (in_s) kept.push_back(map_vars(f, sring, back).with_order(MonomialOrder::lex(r)));
    }
    VanishingResult res;
    res.ideal = Ideal(sring, std::move(kept));
    res.method = general ? VanishMethod::EliminationGeneral : VanishMethod::EliminationSimple;
    return res;
}

/// The lattice of Lemma 3.2: {m in L_beta : Q m = 0 mod (q-1)}, computed in
/// phi-coordinates as phi * {u : (Q phi) u = 0 mod (q-1)}.
inline Lattice lattice_L1(const IntMatrix& Q, const ToricSetup& setup) {
    if (Q.cols() != setup.r()) throw validation_error("lattice_L1: Q must have r columns");
    const int s = Q.rows(), n = setup.n(), r = setup.r();
    IntMatrix qphi = Q * setup.phi; // s x n
    IntMatrix sys(s, n + s);
    for (int i = 0; i < s; ++i) {
        for (int j = 0; j < n; ++j) sys.at(i, j) = qphi.at(i, j);
        sys.at(i, n + i) = static_cast<long>(setup.q - 1);
    }
    Lattice ker = kernel_lattice(sys);
    IntMatrix rows(ker.rank(), r);
    for (int i = 0; i < ker.rank(); ++i) {
        std::vector<Int> u(n);
        for (int j = 0; j < n; ++j) u[j] = ker.basis().at(i, j);
        std::vector<Int> m = setup.phi.apply(u);
        for (int j = 0; j < r; ++j) rows.at(i, j) = m[j];
    }
    return Lattice::from_rows(r, rows);
}

/// The image lattice script-L = Q L_beta = image(Q phi).
inline Lattice script_L(const IntMatrix& Q, const ToricSetup& setup) {
    return image_lattice(Q * setup.phi);
}

/// Theorem 3.4 condition: script-L equals its colon by q-1.
inline bool condition_holds(const IntMatrix& Q, const ToricSetup& setup) {
    Lattice l = script_L(Q, setup);
    return lattice_eq(l, lattice_colon(l, Int(static_cast<long>(setup.q - 1))));
}

/// Theorem 3.4 lattice: (L_Q cap L_beta) + (q-1) L_beta.
inline Lattice lattice_L_thm(const IntMatrix& Q, const ToricSetup& setup) {
    Lattice lq = kernel_lattice(Q);
    Lattice lb = kernel_lattice(setup.beta);
    return lattice_sum(lattice_intersect(lq, lb), lattice_scale(Int(static_cast<long>(setup.q - 1)), lb));
}

/// Full lattice ideal I_L: basis binomials saturated at the product of all
/// variables, presented as the reduced lex basis in S.
inline Ideal lattice_ideal(const Lattice& l, const ToricSetup& setup, uint64_t budget = kDefaultReductionBudget) {
    RingPtr ring = cox_ring(setup);
    if (l.ambient_dim() != setup.r()) throw validation_error("lattice_ideal: ambient dimension must be r");
    if (l.rank() == 0) return Ideal(ring, {});
    std::vector<Polynomial> gens;
    for (int i = 0; i < l.rank(); ++i) gens.push_back(to_binomial(ring, l.basis_row(i)));
    Ideal sat = saturate_vars(Ideal(ring, std::move(gens)), budget);
    GroebnerBasis gb = buchberger(sat, MonomialOrder::lex(ring->nvars()), budget);
    return Ideal(ring, gb.elements);
}

/// I(Y_Q) through Lemma 3.2: the lattice ideal of L1. Condition diagnostics
/// of Theorem 3.4 are reported alongside.
inline VanishingResult vanishing_via_lattice(const IntMatrix& Q, const ToricSetup& setup,
                                             uint64_t budget = kDefaultReductionBudget) {
    Lattice l1 = lattice_L1(Q, setup);
    VanishingResult res;
    res.ideal = lattice_ideal(l1, setup, budget);
    res.method = VanishMethod::Lattice;
    res.lattice_used = l1;
    res.condition_held = condition_holds(Q, setup);
    if (*res.condition_held && !lattice_eq(l1, lattice_L_thm(Q, setup)))
        throw std::logic_error("vanishing_via_lattice: condition holds but closed-form lattice differs");
    return res;
}

/// Theorem 3.10 lattice for diagonal Q: D (L_{beta D}) with d_i = |eta^{q_i}|.
inline Lattice degenerate_lattice(const std::vector<Int>& q_diag, const ToricSetup& setup) {
    const int r = setup.r();
    if (static_cast<int>(q_diag.size()) != r)
        throw validation_error("degenerate_lattice: diagonal must have r entries");
    std::vector<Int> dvec(r);
    Int qm1 = static_cast<long>(setup.q - 1);
    for (int i = 0; i < r; ++i) {
        Int g = gcd(qm1, q_diag[i]);
        dvec[i] = qm1 / g;
    }
    IntMatrix bd = setup.beta; // beta * D, columns scaled
    for (int i = 0; i < bd.rows(); ++i)
        for (int j = 0; j < r; ++j) bd.at(i, j) *= dvec[j];
    Lattice ker = kernel_lattice(bd);
    IntMatrix rows = ker.basis();
    for (int i = 0; i < rows.rows(); ++i)
        for (int j = 0; j < r; ++j) rows.at(i, j) *= dvec[j];
    return Lattice::from_rows(r, rows);
}

} // namespace torvan
