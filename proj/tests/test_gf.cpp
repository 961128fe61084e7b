#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "torvan/gf.hpp"

using namespace torvan;

namespace {
const std::vector<uint32_t> kSmallQ{2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25};

// brute-force multiplicative order
uint32_t order_bruteforce(const FqField& f, FqElem t) {
    FqElem acc = t;
    uint32_t m = 1;
    while (acc != f.one()) {
        acc = f.mul(acc, t);
        ++m;
    }
    return m;
}
} // namespace

TEST_CASE("field construction is deterministic") {
    FqField f2 = make_field(2);
    CHECK(f2.eta() == f2.one());

    FqField f11 = make_field(11);
    CHECK(f11.eta().code == 2);
    CHECK(order_bruteforce(f11, f11.eta()) == 10);

    FqField f4 = make_field(4);
    CHECK(f4.p() == 2);
    CHECK(f4.k() == 2);
    CHECK(f4.modulus() == std::vector<uint32_t>{1, 1, 1}); // u^2 + u + 1
    CHECK(f4.eta().code == 2);                             // the class of u

    CHECK_THROWS_AS(make_field(6), validation_error);
    CHECK_THROWS_AS(make_field(12), validation_error);
    CHECK_THROWS_AS(make_field(1), validation_error);
}

TEST_CASE("basic arithmetic") {
    FqField f11 = make_field(11);
    CHECK(f11.inv(f11.from_int(3)) == f11.from_int(4));
    for (uint32_t c = 1; c < 11; ++c)
        CHECK(f11.pow(f11.from_code(c), 10) == f11.one());

    FqField f5 = make_field(5);
    CHECK(f5.pow(f5.from_int(2), -1) == f5.from_int(3));

    CHECK_THROWS_AS(f5.inv(f5.zero()), validation_error);
    CHECK_THROWS_AS(f5.pow(f5.zero(), -2), validation_error);
    CHECK(f5.pow(f5.zero(), 0) == f5.one());
    CHECK(f5.pow(f5.zero(), 3) == f5.zero());
}

TEST_CASE("field axioms hold exhaustively on small fields") {
    for (uint32_t q : kSmallQ) {
        FqField f = make_field(q);
        INFO("q = " << q);
        for (uint32_t a = 0; a < q; ++a)
            for (uint32_t b = 0; b < q; ++b) {
                FqElem x = f.from_code(a), y = f.from_code(b);
                CHECK(f.add(x, y) == f.add(y, x));
                CHECK(f.mul(x, y) == f.mul(y, x));
                CHECK(f.sub(f.add(x, y), y) == x);
                if (b != 0) CHECK(f.mul(f.div(x, y), y) == x);
            }
        // distributivity on a sample diagonal
        for (uint32_t a = 0; a < q; ++a) {
            FqElem x = f.from_code(a);
            FqElem y = f.from_code((a + 1) % q);
            FqElem z = f.from_code((a * 2 + 1) % q);
            CHECK(f.mul(x, f.add(y, z)) == f.add(f.mul(x, y), f.mul(x, z)));
        }
    }
}

TEST_CASE("Frobenius is additive") {
    for (uint32_t q : kSmallQ) {
        FqField f = make_field(q);
        for (uint32_t a = 0; a < q; ++a)
            for (uint32_t b = 0; b < q; ++b) {
                FqElem x = f.from_code(a), y = f.from_code(b);
                CHECK(f.pow(f.add(x, y), f.p()) == f.add(f.pow(x, f.p()), f.pow(y, f.p())));
            }
    }
}

TEST_CASE("eta enumerates the multiplicative group exactly once") {
    for (uint32_t q : kSmallQ) {
        FqField f = make_field(q);
        std::set<uint32_t> seen;
        for (uint32_t e = 0; e + 1 < q; ++e) seen.insert(f.eta_pow(e).code);
        CHECK(seen.size() == q - 1);
        CHECK(seen.count(0) == 0);
    }
}

TEST_CASE("orders and discrete logs") {
    FqField f11 = make_field(11);
    CHECK(f11.order_of(f11.one()) == 1);
    CHECK(f11.order_of(f11.eta_pow(4)) == 5);
    CHECK(order_bruteforce(f11, f11.eta_pow(4)) == 5);

    FqField f5 = make_field(5);
    CHECK(f5.order_of(f5.eta_pow(2)) == 2);

    CHECK(f11.dlog(f11.one()) == 0);
    CHECK(f11.dlog(f11.from_int(2)) == 1);
    CHECK(f11.dlog(f11.from_int(4)) == 2);
    CHECK_THROWS_AS(f11.dlog(f11.zero()), validation_error);
    CHECK_THROWS_AS(f11.order_of(f11.zero()), validation_error);

    for (uint32_t q : kSmallQ) {
        FqField f = make_field(q);
        for (uint32_t e = 0; e + 1 < q; ++e) {
            FqElem t = f.eta_pow(e);
            CHECK(f.order_of(t) == order_bruteforce(f, t));
            CHECK(static_cast<uint64_t>(f.order_of(t)) * std::gcd(q - 1, e) == q - 1);
            CHECK(f.dlog(t) == e);
        }
    }
}

TEST_CASE("element printing") {
    FqField f11 = make_field(11);
    CHECK(f11.to_string(f11.from_int(7)) == "7");
    FqField f4 = make_field(4);
    CHECK(f4.to_string(f4.zero()) == "(0)");
    CHECK(f4.to_string(f4.one()) == "(1)");
    CHECK(f4.to_string(f4.eta()) == "(u)");
    CHECK(f4.to_string(f4.add(f4.one(), f4.eta())) == "(1+u)");
}
