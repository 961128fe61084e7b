#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "torvan/errors.hpp"
#include "torvan/intmat.hpp"

namespace torvan {

/// Element of F_q, stored as the integer code sum(c_i * p^i) of its
/// polynomial representation c_0 + c_1*u + ... + c_{k-1}*u^{k-1}.
struct FqElem {
    uint32_t code = 0;
    friend auto operator<=>(const FqElem&, const FqElem&) = default;
};

/// Arithmetic in F_q, q = p^k, desk scale (q <= 2^16). Multiplication runs on
/// precomputed exp/log tables over a deterministically chosen primitive element.
class FqField {
public:
    /// Field with the lexicographically smallest irreducible modulus and the
    /// smallest primitive element, so results reproduce across runs and languages.
    static FqField make(uint32_t q) {
        if (q < 2 || q > (1u << 16)) throw validation_error("make_field: q out of supported range [2, 2^16]");
        uint32_t p = smallest_prime_factor(q);
        uint32_t k = 0, t = q;
        while (t % p == 0) { t /= p; ++k; }
        if (t != 1) throw validation_error("make_field: q is not a prime power");
        return FqField(p, k, q);
    }

    uint32_t p() const { return p_; }
    uint32_t k() const { return k_; }
    uint32_t q() const { return q_; }
    bool is_prime_field() const { return k_ == 1; }
    const std::vector<uint32_t>& modulus() const { return modulus_; }

    FqElem zero() const { return FqElem{0}; }
    FqElem one() const { return FqElem{1}; }
    FqElem eta() const { return FqElem{eta_code_}; }

    FqElem from_code(uint32_t code) const {
        if (code >= q_) throw validation_error("FqField: element code out of range");
        return FqElem{code};
    }

    /// Embeds an integer as a constant (residue mod p).
    FqElem from_int(long v) const {
        long r = v % static_cast<long>(p_);
        if (r < 0) r += p_;
        return FqElem{static_cast<uint32_t>(r)};
    }

    FqElem from_int(const Int& v) const {
        Int r;
        mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), p_);
        return FqElem{static_cast<uint32_t>(r.get_ui())};
    }

    std::vector<uint32_t> coeffs(FqElem a) const {
        std::vector<uint32_t> c(k_);
        uint32_t v = a.code;
        for (uint32_t i = 0; i < k_; ++i) { c[i] = v % p_; v /= p_; }
        return c;
    }

    FqElem add(FqElem a, FqElem b) const {
        uint32_t out = 0, mul = 1, x = a.code, y = b.code;
        for (uint32_t i = 0; i < k_; ++i) {
            out += ((x + y) % p_) * mul;
            x /= p_; y /= p_; mul *= p_;
        }
        return FqElem{out};
    }

    FqElem neg(FqElem a) const {
        uint32_t out = 0, mul = 1, x = a.code;
        for (uint32_t i = 0; i < k_; ++i) {
            out += ((p_ - x % p_) % p_) * mul;
            x /= p_; mul *= p_;
        }
        return FqElem{out};
    }

    FqElem sub(FqElem a, FqElem b) const { return add(a, neg(b)); }

    FqElem mul(FqElem a, FqElem b) const {
        if (a.code == 0 || b.code == 0) return FqElem{0};
        return FqElem{exp_[(static_cast<uint64_t>(log_[a.code]) + log_[b.code]) % (q_ - 1)]};
    }

    FqElem inv(FqElem a) const {
        if (a.code == 0) throw validation_error("FqField: inversion of zero");
        return FqElem{exp_[(q_ - 1 - log_[a.code]) % (q_ - 1)]};
    }

    FqElem div(FqElem a, FqElem b) const { return mul(a, inv(b)); }

    FqElem pow(FqElem a, long long e) const {
        if (a.code == 0) {
            if (e > 0) return FqElem{0};
            if (e == 0) return one();
            throw validation_error("FqField: negative power of zero");
        }
        long long m = q_ - 1;
        long long r = ((static_cast<long long>(log_[a.code]) * (e % m)) % m + m) % m;
        return FqElem{exp_[static_cast<size_t>(r)]};
    }

    FqElem pow(FqElem a, const Int& e) const {
        Int r;
        mpz_fdiv_r_ui(r.get_mpz_t(), e.get_mpz_t(), q_ - 1);
        if (a.code == 0 && sgn(e) < 0) throw validation_error("FqField: negative power of zero");
        if (a.code == 0) return e == 0 ? one() : zero();
        return pow(a, static_cast<long long>(r.get_ui()));
    }

    /// Discrete log base eta, in [0, q-2].
    uint32_t dlog(FqElem a) const {
        if (a.code == 0) throw validation_error("FqField: dlog of zero");
        return log_[a.code];
    }

    FqElem eta_pow(uint64_t e) const { return FqElem{exp_[e % (q_ - 1)]}; }

    /// Multiplicative order: (q-1)/gcd(q-1, dlog).
    uint32_t order_of(FqElem a) const {
        if (a.code == 0) throw validation_error("FqField: order of zero");
        return (q_ - 1) / std::gcd(q_ - 1, dlog(a));
    }

    std::string to_string(FqElem a) const {
        if (is_prime_field()) return std::to_string(a.code);
        std::ostringstream os;
        os << "(";
        auto c = coeffs(a);
        bool first = true;
        for (uint32_t i = 0; i < k_; ++i) {
            if (c[i] == 0 && a.code != 0) continue;
            if (!first) os << "+";
            first = false;
            if (i == 0) {
                os << c[i];
            } else {
                if (c[i] != 1) os << c[i] << "*";
                os << "u";
                if (i > 1) os << "^" << i;
            }
            if (a.code == 0) break;
        }
        os << ")";
        return os.str();
    }

    friend bool operator==(const FqField& a, const FqField& b) {
        return a.q_ == b.q_ && a.modulus_ == b.modulus_;
    }

private:
    FqField(uint32_t p, uint32_t k, uint32_t q) : p_(p), k_(k), q_(q) {
        pick_modulus();
        build_tables();
    }

    static uint32_t smallest_prime_factor(uint32_t n) {
        for (uint32_t d = 2; d * d <= n; ++d)
            if (n % d == 0) return d;
        return n;
    }

    // --- polynomial helpers over F_p (coefficient vectors, little-endian) ---

    std::vector<uint32_t> poly_mul_mod(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) const {
        std::vector<uint32_t> c(a.size() + b.size() - 1, 0);
        for (size_t i = 0; i < a.size(); ++i) {
            if (a[i] == 0) continue;
            for (size_t j = 0; j < b.size(); ++j)
                c[i + j] = (c[i + j] + a[i] * b[j]) % p_;
        }
        poly_reduce(c);
        return c;
    }

    // in-place reduction mod modulus_, result degree < k
    void poly_reduce(std::vector<uint32_t>& c) const {
        for (size_t d = c.size(); d-- > k_;) {
            uint32_t lead = c[d];
            if (lead == 0) continue;
            c[d] = 0;
            // c -= lead * u^(d-k) * modulus
            for (uint32_t i = 0; i <= k_; ++i) {
                size_t idx = d - k_ + i;
                c[idx] = (c[idx] + p_ * lead - (lead * modulus_[i]) % p_) % p_;
            }
        }
        c.resize(k_);
    }

    uint32_t encode(const std::vector<uint32_t>& c) const {
        uint32_t v = 0, mul = 1;
        for (uint32_t i = 0; i < k_; ++i) { v += c[i] * mul; mul *= p_; }
        return v;
    }

    std::vector<uint32_t> decode(uint32_t v) const {
        std::vector<uint32_t> c(k_);
        for (uint32_t i = 0; i < k_; ++i) { c[i] = v % p_; v /= p_; }
        return c;
    }

    // divisibility of monic candidate by monic divisor, both little-endian, over F_p
    static bool poly_divides(const std::vector<uint32_t>& divisor, std::vector<uint32_t> cand, uint32_t p) {
        size_t dd = divisor.size() - 1;
        for (size_t d = cand.size(); d-- > dd;) {
            uint32_t lead = cand[d];
            if (lead == 0) continue;
            for (size_t i = 0; i <= dd; ++i) {
                size_t idx = d - dd + i;
                cand[idx] = (cand[idx] + p * lead - (lead * divisor[i]) % p) % p;
            }
        }
        for (size_t i = 0; i < dd; ++i)
            if (cand[i] != 0) return false;
        return true;
    }

    void pick_modulus() {
        if (k_ == 1) {
            modulus_ = {0, 1}; // the polynomial u
            return;
        }
        // Enumerate monic degree-k candidates by ascending code of the
        // non-leading coefficient vector; trial-divide by monic polys of degree <= k/2.
        for (uint32_t code = 0; code < q_; ++code) {
            std::vector<uint32_t> cand = decode(code);
            cand.push_back(1);
            bool irreducible = true;
            for (uint32_t deg = 1; deg <= k_ / 2 && irreducible; ++deg) {
                uint32_t count = 1;
                for (uint32_t i = 0; i < deg; ++i) count *= p_;
                for (uint32_t dc = 0; dc < count; ++dc) {
                    std::vector<uint32_t> div(deg + 1, 0);
                    uint32_t v = dc;
                    for (uint32_t i = 0; i < deg; ++i) { div[i] = v % p_; v /= p_; }
                    div[deg] = 1;
                    if (poly_divides(div, cand, p_)) { irreducible = false; break; }
                }
            }
            if (irreducible) {
                modulus_ = cand;
                return;
            }
        }
        throw std::logic_error("FqField: no irreducible modulus found");
    }

    void build_tables() {
        // prime factors of q-1 for the order check
        std::vector<uint32_t> pf;
        uint32_t m = q_ - 1;
        for (uint32_t d = 2; d * d <= m; ++d)
            if (m % d == 0) {
                pf.push_back(d);
                while (m % d == 0) m /= d;
            }
        if (m > 1) pf.push_back(m);

        auto mul_codes = [&](uint32_t a, uint32_t b) {
            return encode(poly_mul_mod(decode(a), decode(b)));
        };
        auto pow_code = [&](uint32_t base, uint32_t e) {
            uint32_t r = 1;
            while (e) {
                if (e & 1) r = mul_codes(r, base);
                base = mul_codes(base, base);
                e >>= 1;
            }
            return r;
        };

        eta_code_ = 0;
        for (uint32_t cand = 1; cand < q_; ++cand) {
            bool primitive = pow_code(cand, q_ - 1) == 1;
            for (uint32_t f : pf)
                if (primitive && pow_code(cand, (q_ - 1) / f) == 1) primitive = false;
            if (primitive) { eta_code_ = cand; break; }
        }
        if (eta_code_ == 0) throw std::logic_error("FqField: no primitive element found");

        exp_.assign(q_ - 1, 0);
        log_.assign(q_, 0);
        uint32_t cur = 1;
        for (uint32_t i = 0; i < q_ - 1; ++i) {
            exp_[i] = cur;
            log_[cur] = i;
            cur = mul_codes(cur, eta_code_);
        }
        if (cur != 1) throw std::logic_error("FqField: primitive element order check failed");
    }

    uint32_t p_ = 0, k_ = 0, q_ = 0;
    std::vector<uint32_t> modulus_; // k+1 coefficients, monic
    uint32_t eta_code_ = 0;
    std::vector<uint32_t> exp_;
    std::vector<uint32_t> log_;
};

inline FqField make_field(uint32_t q) { return FqField::make(q); }

} // namespace torvan
