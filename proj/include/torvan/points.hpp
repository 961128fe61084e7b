#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "torvan/vanish.hpp"

namespace torvan {

inline constexpr uint64_t kDefaultEnumBudget = 10'000'000;

/// Class [p1 : ... : pr] of the quotient torus, stored as the canonical
/// representative: the lexicographically least dlog vector in the G-orbit.
struct TorusPoint {
    std::vector<uint32_t> dlogs;
    friend auto operator<=>(const TorusPoint&, const TorusPoint&) = default;
};

/// Deduplicated, sorted set of torus points.
struct PointSet {
    std::vector<TorusPoint> points;

    size_t size() const { return points.size(); }

    bool contains(const TorusPoint& p) const {
        return std::binary_search(points.begin(), points.end(), p);
    }

    friend bool operator==(const PointSet&, const PointSet&) = default;
};

/// The kernel G of the projection (F_q*)^r -> (F_q*)^n in dlog coordinates:
/// all h with phi^T h = 0 mod (q-1).
struct GroupG {
    std::vector<std::vector<uint32_t>> elements; // sorted, includes the identity
};

namespace detail {

inline uint64_t ipow_checked(uint64_t base, int e, uint64_t cap) {
    uint64_t v = 1;
    for (int i = 0; i < e; ++i) {
        v *= base;
        if (v > cap) return cap + 1;
    }
    return v;
}

// odometer over [0, q-2]^len; returns false after the last tuple
inline bool next_tuple(std::vector<uint32_t>& t, uint32_t qm1) {
    for (size_t i = t.size(); i-- > 0;) {
        if (++t[i] < qm1) return true;
        t[i] = 0;
    }
    return false;
}

} // namespace detail

inline GroupG group_G(const ToricSetup& setup, uint64_t max_enum = kDefaultEnumBudget) {
    const int r = setup.r(), n = setup.n();
    const uint32_t qm1 = setup.q - 1;
    if (detail::ipow_checked(qm1, r, max_enum) > max_enum)
        throw budget_error("group_G: (q-1)^r exceeds the enumeration budget");
    GroupG g;
    std::vector<uint32_t> h(r, 0);
    do {
        bool in_kernel = true;
        for (int j = 0; j < n && in_kernel; ++j) {
            Int acc = 0;
            for (int i = 0; i < r; ++i) acc += setup.phi.at(i, j) * static_cast<long>(h[i]);
            Int rem;
            mpz_fdiv_r_ui(rem.get_mpz_t(), acc.get_mpz_t(), qm1);
            if (rem != 0) in_kernel = false;
        }
        if (in_kernel) g.elements.push_back(h);
    } while (detail::next_tuple(h, qm1));
    return g;
}

/// Lexicographically least dlog vector in the orbit h + G.
inline TorusPoint canonicalize(const std::vector<uint32_t>& h, const GroupG& g, uint32_t qm1) {
    std::vector<uint32_t> best;
    std::vector<uint32_t> cur(h.size());
    for (const auto& ge : g.elements) {
        for (size_t i = 0; i < h.size(); ++i) cur[i] = (h[i] + ge[i]) % qm1;
        if (best.empty() || cur < best) best = cur;
    }
    return TorusPoint{std::move(best)};
}

/// All (q-1)^n classes of T_X.
inline PointSet enumerate_torus(const ToricSetup& setup, uint64_t max_enum = kDefaultEnumBudget) {
    const int r = setup.r();
    const uint32_t qm1 = setup.q - 1;
    if (detail::ipow_checked(qm1, r, max_enum) > max_enum)
        throw budget_error("enumerate_torus: (q-1)^r exceeds the enumeration budget");
    GroupG g = group_G(setup, max_enum);
    std::set<TorusPoint> acc;
    std::vector<uint32_t> h(r, 0);
    do {
        acc.insert(canonicalize(h, g, qm1));
    } while (detail::next_tuple(h, qm1));
    PointSet out;
    out.points.assign(acc.begin(), acc.end());
    return out;
}

/// The subgroup Y_Q: classes of [t^{q_1} : ... : t^{q_r}] over t in (F_q*)^s.
inline PointSet enumerate_YQ(const IntMatrix& Q, const ToricSetup& setup,
                             uint64_t max_enum = kDefaultEnumBudget) {
    if (Q.cols() != setup.r()) throw validation_error("enumerate_YQ: Q must have r columns");
    const int r = setup.r(), s = Q.rows();
    const uint32_t qm1 = setup.q - 1;
    if (detail::ipow_checked(qm1, s, max_enum) > max_enum ||
        detail::ipow_checked(qm1, r, max_enum) > max_enum)
        throw budget_error("enumerate_YQ: enumeration budget exceeded");
    GroupG g = group_G(setup, max_enum);
    std::set<TorusPoint> acc;
    std::vector<uint32_t> t(s, 0);
    std::vector<uint32_t> h(r);
    do {
        for (int j = 0; j < r; ++j) {
            Int e = 0;
            for (int i = 0; i < s; ++i) e += Q.at(i, j) * static_cast<long>(t[i]);
            Int rem;
            mpz_fdiv_r_ui(rem.get_mpz_t(), e.get_mpz_t(), qm1);
            h[j] = static_cast<uint32_t>(rem.get_ui());
        }
        acc.insert(canonicalize(h, g, qm1));
    } while (detail::next_tuple(t, qm1));
    PointSet out;
    out.points.assign(acc.begin(), acc.end());
    return out;
}

/// Field coordinates eta^{h_j} of a point's representative.
inline std::vector<FqElem> point_coords(const FqField& field, const TorusPoint& p) {
    std::vector<FqElem> c(p.dlogs.size());
    for (size_t j = 0; j < p.dlogs.size(); ++j) c[j] = field.eta_pow(p.dlogs[j]);
    return c;
}

/// Zero locus in T_X of an ideal with beta-homogeneous generators. Vanishing
/// is checked on the canonical representative; well-definedness across the
/// orbit is sampled on a second representative.
inline PointSet zero_locus(const Ideal& ideal, const ToricSetup& setup,
                           uint64_t max_enum = kDefaultEnumBudget) {
    for (const auto& f : ideal.generators())
        if (!is_homogeneous_poly(f, setup.beta))
            throw validation_error("zero_locus: non-homogeneous generator");
    PointSet torus = enumerate_torus(setup, max_enum);
    GroupG g = group_G(setup, max_enum);
    const FqField& fld = setup.field;
    const uint32_t qm1 = setup.q - 1;

    auto vanishes_at = [&](const std::vector<uint32_t>& dlogs) {
        std::vector<FqElem> coords(dlogs.size());
        for (size_t j = 0; j < dlogs.size(); ++j) coords[j] = fld.eta_pow(dlogs[j]);
        for (const auto& f : ideal.generators())
            if (f.evaluate(coords).code != 0) return false;
        return true;
    };

    PointSet out;
    size_t sampled = 0;
    for (const auto& p : torus.points) {
        bool z = vanishes_at(p.dlogs);
        if (sampled < 3 && g.elements.size() > 1) {
            std::vector<uint32_t> alt(p.dlogs.size());
            const auto& ge = g.elements.back();
            for (size_t j = 0; j < alt.size(); ++j) alt[j] = (p.dlogs[j] + ge[j]) % qm1;
            if (vanishes_at(alt) != z)
                throw std::logic_error("zero_locus: vanishing not well defined on the orbit");
            ++sampled;
        }
        if (z) out.points.push_back(p);
    }
    return out;
}

/// Independent ideal-of-points oracle: each class equals Y_{Q_p} for the 1 x r
/// matrix of its dlogs, so I(P) is the intersection of per-point elimination
/// ideals. Capped at 32 points.
inline Ideal ideal_of_points(const PointSet& pts, const ToricSetup& setup,
                             uint64_t budget = kDefaultReductionBudget) {
    if (pts.points.empty()) throw validation_error("ideal_of_points: empty point set");
    if (pts.points.size() > 32) throw budget_error("ideal_of_points: more than 32 points");
    std::optional<Ideal> acc;
    for (const auto& p : pts.points) {
        IntMatrix qp(1, setup.r());
        for (int j = 0; j < setup.r(); ++j) qp.at(0, j) = static_cast<long>(p.dlogs[j]);
        Ideal ip = vanishing_via_elimination(qp, setup, /*general=*/false, budget).ideal;
        acc = acc ? ideal_intersect(*acc, ip, budget) : ip;
    }
    GroebnerBasis gb = buchberger(*acc, MonomialOrder::lex(setup.r()), budget);
    return Ideal(acc->ring(), gb.elements);
}

} // namespace torvan
