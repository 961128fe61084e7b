#pragma once

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "torvan/gf.hpp"
#include "torvan/intmat.hpp"

namespace torvan {

/// Exponent vector, one entry per ring variable.
using Exps = std::vector<uint32_t>;

struct MonomialOrder {
    enum class Kind { Lex, GrevLex };

    Kind kind = Kind::Lex;
    std::vector<int> priority; // priority[0] is the most significant variable

    static MonomialOrder lex(int nvars) {
        MonomialOrder o;
        o.kind = Kind::Lex;
        o.priority.resize(nvars);
        std::iota(o.priority.begin(), o.priority.end(), 0);
        return o;
    }

    static MonomialOrder grevlex(int nvars) {
        MonomialOrder o = lex(nvars);
        o.kind = Kind::GrevLex;
        return o;
    }

    /// Lex order with the given variables first (elimination block), the rest by index.
    static MonomialOrder block_lex(const std::vector<int>& first, int nvars) {
        MonomialOrder o;
        o.kind = Kind::Lex;
        std::vector<bool> used(nvars, false);
        for (int v : first) {
            o.priority.push_back(v);
            used[v] = true;
        }
        for (int v = 0; v < nvars; ++v)
            if (!used[v]) o.priority.push_back(v);
        return o;
    }

    /// -1, 0, +1 for a < b, a == b, a > b.
    int compare(const Exps& a, const Exps& b) const {
        if (kind == Kind::GrevLex) {
            uint64_t da = 0, db = 0;
            for (uint32_t e : a) da += e;
            for (uint32_t e : b) db += e;
            if (da != db) return da < db ? -1 : 1;
            for (auto it = priority.rbegin(); it != priority.rend(); ++it) {
                if (a[*it] != b[*it]) return a[*it] < b[*it] ? 1 : -1;
            }
            return 0;
        }
        for (int v : priority) {
            if (a[v] != b[v]) return a[v] > b[v] ? 1 : -1;
        }
        return 0;
    }

    bool greater(const Exps& a, const Exps& b) const { return compare(a, b) > 0; }
    bool less(const Exps& a, const Exps& b) const { return compare(a, b) < 0; }

    std::string key() const {
        std::string s = kind == Kind::Lex ? "lex:" : "grevlex:";
        for (int v : priority) s += std::to_string(v) + ",";
        return s;
    }

    friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
        return a.kind == b.kind && a.priority == b.priority;
    }
};

/// Variable-name context for polynomials: F_q plus named variables.
class PolyRing {
public:
    PolyRing(FqField field, std::vector<std::string> names)
        : field_(std::move(field)), names_(std::move(names)) {}

    const FqField& field() const { return field_; }
    int nvars() const { return static_cast<int>(names_.size()); }
    const std::string& name(int v) const { return names_[v]; }
    const std::vector<std::string>& names() const { return names_; }

    int var_index(const std::string& n) const {
        for (size_t i = 0; i < names_.size(); ++i)
            if (names_[i] == n) return static_cast<int>(i);
        return -1;
    }

    friend bool operator==(const PolyRing& a, const PolyRing& b) {
        return a.field_ == b.field_ && a.names_ == b.names_;
    }

private:
    FqField field_;
    std::vector<std::string> names_;
};

using RingPtr = std::shared_ptr<const PolyRing>;

inline RingPtr make_ring(const FqField& field, std::vector<std::string> names) {
    return std::make_shared<PolyRing>(field, std::move(names));
}

/// x1..xr [, y1..ys][, z1..zd][, w] following the fixed naming convention.
inline RingPtr make_xyz_ring(const FqField& field, int r, int s, int d, bool with_w) {
    std::vector<std::string> names;
    for (int i = 1; i <= r; ++i) names.push_back("x" + std::to_string(i));
    for (int i = 1; i <= s; ++i) names.push_back("y" + std::to_string(i));
    for (int i = 1; i <= d; ++i) names.push_back("z" + std::to_string(i));
    if (with_w) names.push_back("w");
    return make_ring(field, std::move(names));
}

inline bool same_ring(const RingPtr& a, const RingPtr& b) {
    return a == b || (a && b && *a == *b);
}

struct Term {
    Exps exps;
    FqElem coeff;
};

/// Sparse multivariate polynomial over F_q. Terms are kept strictly
/// descending under the polynomial's monomial order; no zero coefficients.
class Polynomial {
public:
    Polynomial() = default;

    static Polynomial zero(RingPtr ring, MonomialOrder order) {
        Polynomial f;
        f.ring_ = std::move(ring);
        f.order_ = std::move(order);
        return f;
    }

    static Polynomial zero(RingPtr ring) {
        MonomialOrder o = MonomialOrder::lex(ring->nvars());
        return zero(std::move(ring), std::move(o));
    }

    static Polynomial monomial(RingPtr ring, Exps exps, FqElem coeff, const MonomialOrder& order) {
        Polynomial f = zero(std::move(ring), order);
        if (coeff.code != 0) f.terms_.push_back(Term{std::move(exps), coeff});
        return f;
    }

    static Polynomial monomial(RingPtr ring, Exps exps, FqElem coeff) {
        MonomialOrder o = MonomialOrder::lex(ring->nvars());
        return monomial(std::move(ring), std::move(exps), coeff, o);
    }

    static Polynomial constant(RingPtr ring, FqElem c) {
        Exps e(ring->nvars(), 0);
        return monomial(std::move(ring), std::move(e), c);
    }

    static Polynomial variable(RingPtr ring, int v) {
        Exps e(ring->nvars(), 0);
        e[v] = 1;
        return monomial(std::move(ring), std::move(e), ring->field().one());
    }

    const RingPtr& ring() const { return ring_; }
    const MonomialOrder& order() const { return order_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t nterms() const { return terms_.size(); }

    const Term& leading_term() const {
        if (terms_.empty()) throw validation_error("Polynomial: leading term of zero");
        return terms_.front();
    }

    Polynomial with_order(const MonomialOrder& order) const {
        if (order == order_) return *this;
        Polynomial f = *this;
        f.order_ = order;
        std::sort(f.terms_.begin(), f.terms_.end(),
                  [&order](const Term& a, const Term& b) { return order.greater(a.exps, b.exps); });
        return f;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        check_compatible(a, b);
        const Polynomial& bb = b.order_ == a.order_ ? b : b.with_order(a.order_);
        Polynomial out = zero(a.ring_, a.order_);
        const FqField& fld = a.ring_->field();
        size_t i = 0, j = 0;
        while (i < a.terms_.size() && j < bb.terms_.size()) {
            int c = a.order_.compare(a.terms_[i].exps, bb.terms_[j].exps);
            if (c > 0) {
                out.terms_.push_back(a.terms_[i++]);
            } else if (c < 0) {
                out.terms_.push_back(bb.terms_[j++]);
            } else {
                FqElem s = fld.add(a.terms_[i].coeff, bb.terms_[j].coeff);
                if (s.code != 0) out.terms_.push_back(Term{a.terms_[i].exps, s});
                ++i; ++j;
            }
        }
        for (; i < a.terms_.size(); ++i) out.terms_.push_back(a.terms_[i]);
        for (; j < bb.terms_.size(); ++j) out.terms_.push_back(bb.terms_[j]);
        return out;
    }

    Polynomial operator-() const {
        Polynomial out = *this;
        const FqField& fld = ring_->field();
        for (auto& t : out.terms_) t.coeff = fld.neg(t.coeff);
        return out;
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

    /// Multiply by a single term (exponent shift plus scalar).
    Polynomial mul_term(const Exps& shift, FqElem c) const {
        Polynomial out = zero(ring_, order_);
        if (c.code == 0) return out;
        const FqField& fld = ring_->field();
        out.terms_.reserve(terms_.size());
        for (const auto& t : terms_) {
            Exps e = t.exps;
            for (size_t v = 0; v < e.size(); ++v) {
                uint64_t s = static_cast<uint64_t>(e[v]) + shift[v];
                if (s > (1u << 30)) throw std::overflow_error("Polynomial: exponent overflow");
                e[v] = static_cast<uint32_t>(s);
            }
            out.terms_.push_back(Term{std::move(e), fld.mul(t.coeff, c)});
        }
        // a term multiple preserves strict descending order
        return out;
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        check_compatible(a, b);
        const Polynomial& bb = b.order_ == a.order_ ? b : b.with_order(a.order_);
        Polynomial out = zero(a.ring_, a.order_);
        for (const auto& t : bb.terms_) out = out + a.mul_term(t.exps, t.coeff);
        return out;
    }

    Polynomial scaled(FqElem c) const { return mul_term(Exps(ring_->nvars(), 0), c); }

    Polynomial monic() const {
        if (is_zero()) return *this;
        return scaled(ring_->field().inv(leading_term().coeff));
    }

    FqElem evaluate(const std::vector<FqElem>& point) const {
        const FqField& fld = ring_->field();
        if (static_cast<int>(point.size()) != ring_->nvars())
            throw validation_error("Polynomial: evaluation point dimension mismatch");
        FqElem acc = fld.zero();
        for (const auto& t : terms_) {
            FqElem v = t.coeff;
            for (size_t j = 0; j < point.size(); ++j)
                if (t.exps[j] != 0) v = fld.mul(v, fld.pow(point[j], static_cast<long long>(t.exps[j])));
            acc = fld.add(acc, v);
        }
        return acc;
    }

    /// Order-independent structural equality (same term set).
    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        if (!same_ring(a.ring_, b.ring_) || a.terms_.size() != b.terms_.size()) return false;
        auto canon = [](const Polynomial& f) {
            std::vector<Term> t = f.terms_;
            std::sort(t.begin(), t.end(), [](const Term& x, const Term& y) { return x.exps < y.exps; });
            return t;
        };
        auto ta = canon(a), tb = canon(b);
        for (size_t i = 0; i < ta.size(); ++i)
            if (ta[i].exps != tb[i].exps || ta[i].coeff != tb[i].coeff) return false;
        return true;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        const FqField& fld = ring_->field();
        std::ostringstream os;
        bool first = true;
        for (const auto& t : terms_) {
            uint32_t c = t.coeff.code;
            bool neg = fld.is_prime_field() && c > fld.p() / 2;
            uint32_t mag = neg ? fld.p() - c : c;
            if (first) {
                if (neg) os << "-";
            } else {
                os << (neg ? " - " : " + ");
            }
            first = false;
            bool any_var = std::any_of(t.exps.begin(), t.exps.end(), [](uint32_t e) { return e != 0; });
            if (!fld.is_prime_field()) {
                os << fld.to_string(t.coeff);
                if (any_var) os << "*";
            } else if (mag != 1 || !any_var) {
                os << mag;
                if (any_var) os << "*";
            }
            bool first_var = true;
            for (size_t v = 0; v < t.exps.size(); ++v) {
                if (t.exps[v] == 0) continue;
                if (!first_var) os << "*";
                first_var = false;
                os << ring_->name(static_cast<int>(v));
                if (t.exps[v] > 1) os << "^" << t.exps[v];
            }
        }
        return os.str();
    }

private:
    static void check_compatible(const Polynomial& a, const Polynomial& b) {
        if (!same_ring(a.ring_, b.ring_)) throw validation_error("Polynomial: ring mismatch");
    }

    RingPtr ring_;
    MonomialOrder order_;
    std::vector<Term> terms_;
};

/// beta * a: the Z^d-degree of the monomial with exponent vector a.
inline std::vector<Int> mono_degree(const Exps& a, const IntMatrix& beta) {
    if (static_cast<int>(a.size()) != beta.cols()) throw validation_error("mono_degree: dimension mismatch");
    std::vector<Int> deg(beta.rows());
    for (int i = 0; i < beta.rows(); ++i)
        for (int j = 0; j < beta.cols(); ++j) deg[i] += beta.at(i, j) * static_cast<long>(a[j]);
    return deg;
}

/// x^{m+} - x^{m-} for the positive/negative part split of m.
inline Polynomial to_binomial(const RingPtr& ring, const std::vector<Int>& m, const MonomialOrder& order) {
    if (static_cast<int>(m.size()) != ring->nvars()) throw validation_error("to_binomial: dimension mismatch");
    Exps plus(m.size(), 0), minus(m.size(), 0);
    for (size_t i = 0; i < m.size(); ++i) {
        if (m[i] > 0) plus[i] = static_cast<uint32_t>(m[i].get_ui());
        else if (m[i] < 0) minus[i] = static_cast<uint32_t>(Int(-m[i]).get_ui());
    }
    const FqField& fld = ring->field();
    return Polynomial::monomial(ring, plus, fld.one(), order) -
           Polynomial::monomial(ring, minus, fld.one(), order);
}

inline Polynomial to_binomial(const RingPtr& ring, const std::vector<Int>& m) {
    return to_binomial(ring, m, MonomialOrder::lex(ring->nvars()));
}

/// True (with the common degree) iff every term of f has the same beta-degree.
/// The zero polynomial reports degree 0.
inline std::optional<std::vector<Int>> is_homogeneous_poly(const Polynomial& f, const IntMatrix& beta) {
    std::vector<Int> deg(beta.rows());
    if (f.is_zero()) return deg;
    deg = mono_degree(f.terms().front().exps, beta);
    for (size_t i = 1; i < f.terms().size(); ++i)
        if (mono_degree(f.terms()[i].exps, beta) != deg) return std::nullopt;
    return deg;
}

/// Remaps f into target, sending source variable v to var_map[v].
/// A negative map entry requires exponent zero on that variable.
inline Polynomial map_vars(const Polynomial& f, const RingPtr& target, const std::vector<int>& var_map) {
    if (!(target->field() == f.ring()->field()))
        throw validation_error("map_vars: coefficient fields differ");
    Polynomial out = Polynomial::zero(target);
    const FqField& fld = target->field();
    for (const auto& t : f.terms()) {
        Exps e(target->nvars(), 0);
        for (size_t v = 0; v < t.exps.size(); ++v) {
            if (t.exps[v] == 0) continue;
            if (var_map[v] < 0)
                throw validation_error("map_vars: polynomial involves a dropped variable");
            e[var_map[v]] = t.exps[v];
        }
        out = out + Polynomial::monomial(target, std::move(e), fld.from_code(t.coeff.code));
    }
    return out;
}

namespace detail {
struct GbCacheBlock {
    std::mutex mu;
    std::map<std::string, std::vector<Polynomial>> entries;
};
} // namespace detail

/// Ideal given by a generator list. Reduced Groebner bases are cached per
/// monomial order; the cache is shared across copies and write-once per key.
class Ideal {
public:
    Ideal() = default;

    Ideal(RingPtr ring, std::vector<Polynomial> gens)
        : ring_(std::move(ring)), gens_(std::move(gens)), cache_(std::make_shared<detail::GbCacheBlock>()) {
        for (const auto& g : gens_)
            if (!same_ring(g.ring(), ring_)) throw validation_error("Ideal: generator ring mismatch");
    }

    const RingPtr& ring() const { return ring_; }
    const std::vector<Polynomial>& generators() const { return gens_; }

    bool cache_lookup(const std::string& key, std::vector<Polynomial>& out) const {
        if (!cache_) return false;
        std::lock_guard<std::mutex> lk(cache_->mu);
        auto it = cache_->entries.find(key);
        if (it == cache_->entries.end()) return false;
        out = it->second;
        return true;
    }

    void cache_store(const std::string& key, const std::vector<Polynomial>& gb) const {
        if (!cache_) return;
        std::lock_guard<std::mutex> lk(cache_->mu);
        cache_->entries.emplace(key, gb);
    }

private:
    RingPtr ring_;
    std::vector<Polynomial> gens_;
    std::shared_ptr<detail::GbCacheBlock> cache_;
};

// ---------------------------------------------------------------------------
// Plain-text polynomial grammar: terms joined by + / -, monomials like
// x1^2*x2, integer coefficients (extension-field coefficients as (c0+c1*u)).
// ---------------------------------------------------------------------------

namespace detail {

class PolyParser {
public:
    PolyParser(RingPtr ring, std::string src) : ring_(std::move(ring)), src_(std::move(src)) {}

    Polynomial parse() {
        Polynomial acc = Polynomial::zero(ring_);
        skip_ws();
        bool neg = consume_sign();
        for (;;) {
            Polynomial t = parse_term();
            acc = neg ? acc - t : acc + t;
            skip_ws();
            if (pos_ >= src_.size()) break;
            char c = src_[pos_];
            if (c == '+') { neg = false; ++pos_; }
            else if (c == '-') { neg = true; ++pos_; }
            else throw validation_error("polynomial parse: unexpected character '" + std::string(1, c) + "'");
        }
        return acc;
    }

private:
    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }

    bool consume_sign() {
        skip_ws();
        if (pos_ < src_.size() && (src_[pos_] == '+' || src_[pos_] == '-')) {
            bool neg = src_[pos_] == '-';
            ++pos_;
            return neg;
        }
        return false;
    }

    Polynomial parse_term() {
        const FqField& fld = ring_->field();
        FqElem coeff = fld.one();
        Exps exps(ring_->nvars(), 0);
        bool saw_factor = false;
        for (;;) {
            skip_ws();
            if (pos_ >= src_.size()) break;
            char c = src_[pos_];
            if (std::isdigit(static_cast<unsigned char>(c))) {
                coeff = fld.mul(coeff, fld.from_int(parse_int()));
                saw_factor = true;
            } else if (c == '(') {
                coeff = fld.mul(coeff, parse_ext_coeff());
                saw_factor = true;
            } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                std::string name = parse_name();
                int v = ring_->var_index(name);
                if (v < 0) throw validation_error("polynomial parse: unknown variable '" + name + "'");
                long e = 1;
                skip_ws();
                if (pos_ < src_.size() && src_[pos_] == '^') {
                    ++pos_;
                    skip_ws();
                    e = parse_int();
                    if (e < 0) throw validation_error("polynomial parse: negative exponent");
                }
                exps[v] += static_cast<uint32_t>(e);
                saw_factor = true;
            } else {
                break;
            }
            skip_ws();
            if (pos_ < src_.size() && src_[pos_] == '*') { ++pos_; continue; }
            // juxtaposition without '*' ends the factor list unless next is a factor char
            if (pos_ < src_.size()) {
                char n = src_[pos_];
                if (std::isalnum(static_cast<unsigned char>(n)) || n == '(' || n == '_') continue;
            }
            break;
        }
        if (!saw_factor) throw validation_error("polynomial parse: empty term");
        return Polynomial::monomial(ring_, std::move(exps), coeff);
    }

    // (c0+c1*u+...) over the extension generator u
    FqElem parse_ext_coeff() {
        const FqField& fld = ring_->field();
        ++pos_; // '('
        FqElem acc = fld.zero();
        bool neg = consume_sign();
        for (;;) {
            skip_ws();
            long c = 1;
            bool saw_num = false;
            if (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
                c = parse_int();
                saw_num = true;
            }
            long upow = 0;
            skip_ws();
            if (pos_ < src_.size() && src_[pos_] == '*') { ++pos_; skip_ws(); }
            if (pos_ < src_.size() && src_[pos_] == 'u') {
                ++pos_;
                upow = 1;
                skip_ws();
                if (pos_ < src_.size() && src_[pos_] == '^') {
                    ++pos_;
                    upow = parse_int();
                }
            } else if (!saw_num) {
                throw validation_error("polynomial parse: bad extension coefficient");
            }
            if (upow >= static_cast<long>(fld.k()))
                throw validation_error("polynomial parse: u power exceeds field degree");
            uint32_t mul = 1;
            for (long i = 0; i < upow; ++i) mul *= fld.p();
            long cc = c % fld.p();
            if (cc < 0) cc += fld.p();
            if (neg) cc = (fld.p() - cc) % fld.p();
            acc = fld.add(acc, fld.from_code(static_cast<uint32_t>(cc) * mul));
            skip_ws();
            if (pos_ < src_.size() && (src_[pos_] == '+' || src_[pos_] == '-')) {
                neg = src_[pos_] == '-';
                ++pos_;
                continue;
            }
            if (pos_ < src_.size() && src_[pos_] == ')') { ++pos_; break; }
            throw validation_error("polynomial parse: unterminated extension coefficient");
        }
        return acc;
    }

    long parse_int() {
        size_t start = pos_;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        if (start == pos_) throw validation_error("polynomial parse: expected integer");
        return std::stol(src_.substr(start, pos_ - start));
    }

    std::string parse_name() {
        size_t start = pos_;
        ++pos_;
        while (pos_ < src_.size() &&
               (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
            ++pos_;
        return src_.substr(start, pos_ - start);
    }

    RingPtr ring_;
    std::string src_;
    size_t pos_ = 0;
};

} // namespace detail

inline Polynomial parse_polynomial(const RingPtr& ring, const std::string& text) {
    return detail::PolyParser(ring, text).parse();
}

} // namespace torvan
