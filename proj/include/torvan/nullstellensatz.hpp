#pragma once

#include <optional>

#include "torvan/points.hpp"

namespace torvan {

/// Theorem 3.8 diagnostics for a homogeneous Q with L = L_Q + (q-1) L_beta:
/// the proof identity I_L = I_{L_Q} + I_{(q-1)L_beta}, the locus identity
/// V_Q = V_X(I_L) on the torus, and the conditional statements V_Q = Y_Q and
/// I(V_X(I_L)) = I_L (witnessing cardinalities when the condition fails).
struct NullstellensatzReport {
    bool condition = false;
    bool ideal_identity = false;
    bool loci_equal = false;
    size_t card_YQ = 0;
    size_t card_VQ = 0;
    std::optional<bool> sets_equal;          // V_Q == Y_Q, evaluated when the condition holds
    std::optional<bool> ideal_of_locus_ok;   // I(V_X(I_L)) == I_L, when the condition holds
    Lattice L = Lattice::zero(0);
    Ideal I_L;
};

inline NullstellensatzReport nullstellensatz_check(const IntMatrix& Q, const ToricSetup& setup,
                                                   uint64_t budget = kDefaultReductionBudget,
                                                   uint64_t max_enum = kDefaultEnumBudget) {
    if (!is_homogeneous_Q(Q, setup))
        throw validation_error("nullstellensatz_check: Q is not homogeneous");

    Int qm1 = static_cast<long>(setup.q - 1);
    Lattice lq = kernel_lattice(Q);
    Lattice lb_scaled = lattice_scale(qm1, kernel_lattice(setup.beta));
    Lattice l = lattice_L_thm(Q, setup); // = L_Q + (q-1) L_beta for homogeneous Q

    NullstellensatzReport rep;
    rep.condition = condition_holds(Q, setup);
    rep.L = l;
    rep.I_L = lattice_ideal(l, setup, budget);

    Ideal i_lq = lattice_ideal(lq, setup, budget);
    Ideal i_lb = lattice_ideal(lb_scaled, setup, budget);
    rep.ideal_identity = ideal_eq(rep.I_L, ideal_sum(i_lq, i_lb), budget);

    PointSet vq = zero_locus(i_lq, setup, max_enum);
    PointSet vl = zero_locus(rep.I_L, setup, max_enum);
    rep.loci_equal = vq == vl;
    rep.card_VQ = vq.size();
    PointSet yq = enumerate_YQ(Q, setup, max_enum);
    rep.card_YQ = yq.size();

    if (rep.condition) {
        rep.sets_equal = vq == yq;
        if (vl.size() <= 32)
            rep.ideal_of_locus_ok = ideal_eq(ideal_of_points(vl, setup, budget), rep.I_L, budget);
    }
    return rep;
}

} // namespace torvan
