#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "torvan/poly.hpp"

namespace torvan {

inline constexpr uint64_t kDefaultReductionBudget = 1'000'000;

/// Reduced monic Groebner basis: no leading term divides another, every
/// element fully tail-reduced, elements ascending by leading monomial.
/// Unique for (ideal, order).
struct GroebnerBasis {
    MonomialOrder order;
    std::vector<Polynomial> elements;
};

namespace detail {

inline bool exps_divides(const Exps& a, const Exps& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

inline Exps exps_lcm(const Exps& a, const Exps& b) {
    Exps l(a.size());
    for (size_t i = 0; i < a.size(); ++i) l[i] = std::max(a[i], b[i]);
    return l;
}

inline Exps exps_sub(const Exps& a, const Exps& b) {
    Exps d(a.size());
    for (size_t i = 0; i < a.size(); ++i) d[i] = a[i] - b[i];
    return d;
}

inline bool exps_coprime(const Exps& a, const Exps& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0 && b[i] != 0) return false;
    return true;
}

struct StepCounter {
    uint64_t steps = 0;
    uint64_t budget = kDefaultReductionBudget;
    void tick() {
        if (++steps > budget)
            throw budget_error("groebner: reduction budget exceeded (" + std::to_string(budget) + " steps)");
    }
};

// One full reduction of f modulo G: no term of the result is divisible by any
// leading term in G. Divisor choice: first match in list order.
inline Polynomial reduce_full(Polynomial f, const std::vector<Polynomial>& g, const MonomialOrder& order,
                              StepCounter& counter) {
    const RingPtr& ring = f.ring();
    const FqField& fld = ring->field();
    Polynomial out = Polynomial::zero(ring, order);
    Polynomial work = f.with_order(order);
    while (!work.is_zero()) {
        const Term& lt = work.leading_term();
        bool reduced = false;
        for (const auto& gi : g) {
            if (gi.is_zero()) continue;
            const Term& glt = gi.leading_term();
            if (!exps_divides(glt.exps, lt.exps)) continue;
            counter.tick();
            FqElem c = fld.div(lt.coeff, glt.coeff);
            work = work - gi.mul_term(exps_sub(lt.exps, glt.exps), c);
            reduced = true;
            break;
        }
        if (!reduced) {
            out = out + Polynomial::monomial(ring, lt.exps, lt.coeff, order);
            work = work - Polynomial::monomial(ring, lt.exps, lt.coeff, order);
        }
    }
    return out;
}

inline Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order) {
    const FqField& fld = f.ring()->field();
    const Term& lf = f.leading_term();
    const Term& lg = g.leading_term();
    Exps l = exps_lcm(lf.exps, lg.exps);
    return f.mul_term(exps_sub(l, lf.exps), fld.inv(lf.coeff)) -
           g.mul_term(exps_sub(l, lg.exps), fld.inv(lg.coeff));
}

} // namespace detail

/// Remainder of multivariate division of f by G under the given order.
inline Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& g, const MonomialOrder& order,
                              uint64_t budget = kDefaultReductionBudget) {
    detail::StepCounter counter{0, budget};
    return detail::reduce_full(f, g, order, counter);
}

inline Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb,
                              uint64_t budget = kDefaultReductionBudget) {
    return normal_form(f, gb.elements, gb.order, budget);
}

/// Buchberger with the normal pair-selection strategy (smallest lcm in the
/// order, ties by generator index) and full inter-reduction of the output.
inline GroebnerBasis buchberger(const Ideal& ideal, const MonomialOrder& order,
                                uint64_t budget = kDefaultReductionBudget) {
    std::vector<Polynomial> cached;
    if (ideal.cache_lookup(order.key(), cached)) return GroebnerBasis{order, std::move(cached)};

    detail::StepCounter counter{0, budget};
    std::vector<Polynomial> g;
    for (const auto& f : ideal.generators())
        if (!f.is_zero()) g.push_back(f.with_order(order));

    if (g.empty()) {
        ideal.cache_store(order.key(), {});
        return GroebnerBasis{order, {}};
    }

    using Pair = std::pair<size_t, size_t>;
    std::set<Pair> pending;
    auto add_pairs_for = [&](size_t j) {
        for (size_t i = 0; i < j; ++i) pending.insert({i, j});
    };
    for (size_t j = 1; j < g.size(); ++j) add_pairs_for(j);

    while (!pending.empty()) {
        // normal strategy: minimal lcm, ties by index pair
        auto best = pending.end();
        Exps best_lcm;
        for (auto it = pending.begin(); it != pending.end(); ++it) {
            Exps l = detail::exps_lcm(g[it->first].leading_term().exps, g[it->second].leading_term().exps);
            if (best == pending.end() || order.less(l, best_lcm)) {
                best = it;
                best_lcm = std::move(l);
            }
        }
        auto [i, j] = *best;
        pending.erase(best);

        const Exps& li = g[i].leading_term().exps;
        const Exps& lj = g[j].leading_term().exps;
        if (detail::exps_coprime(li, lj)) continue; // product criterion
        bool chained = false;
        for (size_t k = 0; k < g.size() && !chained; ++k) {
            if (k == i || k == j) continue;
            if (!detail::exps_divides(g[k].leading_term().exps, best_lcm)) continue;
            Pair ik{std::min(i, k), std::max(i, k)};
            Pair jk{std::min(j, k), std::max(j, k)};
            if (!pending.count(ik) && !pending.count(jk)) chained = true; // chain criterion
        }
        if (chained) continue;

        Polynomial s = detail::s_polynomial(g[i], g[j], order);
        Polynomial r = detail::reduce_full(s, g, order, counter);
        if (!r.is_zero()) {
            g.push_back(std::move(r));
            add_pairs_for(g.size() - 1);
        }
    }

    // minimalize: drop elements whose leading term another leading term divides
    std::vector<size_t> idx(g.size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
        int c = order.compare(g[a].leading_term().exps, g[b].leading_term().exps);
        return c != 0 ? c < 0 : a < b;
    });
    std::vector<Polynomial> minimal;
    for (size_t id : idx) {
        const Exps& lt = g[id].leading_term().exps;
        bool dominated = false;
        for (const auto& kept : minimal)
            if (detail::exps_divides(kept.leading_term().exps, lt)) { dominated = true; break; }
        if (!dominated) minimal.push_back(g[id].monic());
    }

    // tail-reduce to the unique reduced basis
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t a = 0; a < minimal.size(); ++a) {
            std::vector<Polynomial> others;
            for (size_t b = 0; b < minimal.size(); ++b)
                if (b != a) others.push_back(minimal[b]);
            Polynomial red = detail::reduce_full(minimal[a], others, order, counter).monic();
            if (!(red == minimal[a])) {
                minimal[a] = std::move(red);
                changed = true;
            }
        }
    }
    std::sort(minimal.begin(), minimal.end(), [&](const Polynomial& a, const Polynomial& b) {
        return order.less(a.leading_term().exps, b.leading_term().exps);
    });

    ideal.cache_store(order.key(), minimal);
    return GroebnerBasis{order, std::move(minimal)};
}

/// I cap K[kept vars]: generators of the elimination ideal, themselves the
/// reduced basis under lex on the kept variables. The result stays in the
/// ambient ring; dropped variables simply no longer occur.
inline Ideal eliminate(const Ideal& ideal, const std::vector<int>& drop_vars,
                       uint64_t budget = kDefaultReductionBudget) {
    const RingPtr& ring = ideal.ring();
    std::vector<int> drop = drop_vars;
    std::sort(drop.begin(), drop.end());
    MonomialOrder order = MonomialOrder::block_lex(drop, ring->nvars());
    GroebnerBasis gb = buchberger(ideal, order, budget);
    std::vector<bool> dropped(ring->nvars(), false);
    for (int v : drop) dropped[v] = true;
    std::vector<Polynomial> kept;
    for (const auto& f : gb.elements) {
        bool uses_dropped = false;
        for (const auto& t : f.terms())
            for (int v = 0; v < ring->nvars() && !uses_dropped; ++v)
                if (dropped[v] && t.exps[v] != 0) uses_dropped = true;
        if (!uses_dropped) kept.push_back(f);
    }
    return Ideal(ring, std::move(kept));
}

namespace detail {

inline std::string fresh_var_name(const RingPtr& ring, const std::string& stem) {
    if (ring->var_index(stem) < 0) return stem;
    for (int i = 1;; ++i) {
        std::string cand = stem + "_" + std::to_string(i);
        if (ring->var_index(cand) < 0) return cand;
    }
}

// Extend the ring by one fresh variable (appended last); returns the new ring
// and the index map old -> new.
inline std::pair<RingPtr, std::vector<int>> extend_ring(const RingPtr& ring, const std::string& stem) {
    std::vector<std::string> names = ring->names();
    names.push_back(fresh_var_name(ring, stem));
    std::vector<int> fwd(ring->nvars());
    for (int v = 0; v < ring->nvars(); ++v) fwd[v] = v;
    return {make_ring(ring->field(), std::move(names)), std::move(fwd)};
}

inline std::vector<int> restriction_map(const RingPtr& big, const RingPtr& small) {
    std::vector<int> m(big->nvars(), -1);
    for (int v = 0; v < big->nvars(); ++v) m[v] = small->var_index(big->name(v));
    return m;
}

} // namespace detail

/// Saturation I : (prod of all variables)^inf, by adjoining w * x1...xn - 1
/// and eliminating w.
inline Ideal saturate_vars(const Ideal& ideal, uint64_t budget = kDefaultReductionBudget) {
    const RingPtr& ring = ideal.ring();
    if (ideal.generators().empty()) return ideal;
    auto [big, fwd] = detail::extend_ring(ring, "w");
    int wv = big->nvars() - 1;
    std::vector<Polynomial> gens;
    for (const auto& f : ideal.generators()) gens.push_back(map_vars(f, big, fwd));
    Exps we(big->nvars(), 1); // w * x1 * ... * xn
    gens.push_back(Polynomial::monomial(big, std::move(we), big->field().one()) -
                   Polynomial::constant(big, big->field().one()));
    Ideal elim = eliminate(Ideal(big, std::move(gens)), {wv}, budget);
    std::vector<int> back = detail::restriction_map(big, ring);
    std::vector<Polynomial> out;
    for (const auto& f : elim.generators()) out.push_back(map_vars(f, ring, back));
    return Ideal(ring, std::move(out));
}

inline Ideal ideal_sum(const Ideal& a, const Ideal& b) {
    if (!same_ring(a.ring(), b.ring())) throw validation_error("ideal_sum: ring mismatch");
    std::vector<Polynomial> gens = a.generators();
    for (const auto& g : b.generators()) gens.push_back(g);
    return Ideal(a.ring(), std::move(gens));
}

/// I1 cap I2 via the auxiliary variable: eliminate t from t*I1 + (1-t)*I2.
inline Ideal ideal_intersect(const Ideal& a, const Ideal& b, uint64_t budget = kDefaultReductionBudget) {
    if (!same_ring(a.ring(), b.ring())) throw validation_error("ideal_intersect: ring mismatch");
    const RingPtr& ring = a.ring();
    auto [big, fwd] = detail::extend_ring(ring, "t");
    int tv = big->nvars() - 1;
    const FqField& fld = big->field();
    Polynomial t = Polynomial::variable(big, tv);
    Polynomial one_minus_t = Polynomial::constant(big, fld.one()) - t;
    std::vector<Polynomial> gens;
    for (const auto& f : a.generators()) gens.push_back(t * map_vars(f, big, fwd));
    for (const auto& f : b.generators()) gens.push_back(one_minus_t * map_vars(f, big, fwd));
    Ideal elim = eliminate(Ideal(big, std::move(gens)), {tv}, budget);
    std::vector<int> back = detail::restriction_map(big, ring);
    std::vector<Polynomial> out;
    for (const auto& f : elim.generators()) out.push_back(map_vars(f, ring, back));
    return Ideal(ring, std::move(out));
}

/// Equality via identical reduced Groebner bases.
inline bool ideal_eq(const Ideal& a, const Ideal& b, const MonomialOrder& order,
                     uint64_t budget = kDefaultReductionBudget) {
    if (!same_ring(a.ring(), b.ring())) throw validation_error("ideal_eq: ring mismatch");
    GroebnerBasis ga = buchberger(a, order, budget);
    GroebnerBasis gb = buchberger(b, order, budget);
    if (ga.elements.size() != gb.elements.size()) return false;
    for (size_t i = 0; i < ga.elements.size(); ++i)
        if (!(ga.elements[i] == gb.elements[i])) return false;
    return true;
}

inline bool ideal_eq(const Ideal& a, const Ideal& b, uint64_t budget = kDefaultReductionBudget) {
    return ideal_eq(a, b, MonomialOrder::lex(a.ring()->nvars()), budget);
}

/// Membership test: normal form zero against a Groebner basis of the ideal.
inline bool ideal_contains(const Ideal& ideal, const Polynomial& f, uint64_t budget = kDefaultReductionBudget) {
    MonomialOrder order = MonomialOrder::lex(ideal.ring()->nvars());
    GroebnerBasis gb = buchberger(ideal, order, budget);
    return normal_form(f, gb, budget).is_zero();
}

} // namespace torvan
