#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "torvan/poly.hpp"

using namespace torvan;

namespace {

const IntMatrix kBetaH2 = IntMatrix::from_rows(std::vector<std::vector<long>>{{1, 0, 1, 2}, {0, 1, 0, 1}});

RingPtr s_ring(uint32_t q) { return make_xyz_ring(make_field(q), 4, 0, 0, false); }

std::vector<Int> zd(std::initializer_list<long> v) { return std::vector<Int>(v.begin(), v.end()); }

Polynomial random_poly(const RingPtr& ring, std::mt19937& rng, int terms) {
    std::uniform_int_distribution<int> e(0, 4);
    std::uniform_int_distribution<int> c(0, static_cast<int>(ring->field().q()) - 1);
    Polynomial f = Polynomial::zero(ring);
    for (int t = 0; t < terms; ++t) {
        Exps ex(ring->nvars());
        for (auto& v : ex) v = e(rng);
        f = f + Polynomial::monomial(ring, ex, ring->field().from_code(c(rng)));
    }
    return f;
}

} // namespace

TEST_CASE("mono_degree matches the grading") {
    CHECK(mono_degree({0, 0, 0, 1}, kBetaH2) == zd({2, 1}));
    CHECK(mono_degree({0, 0, 0, 0}, kBetaH2) == zd({0, 0}));
    CHECK(mono_degree({2, 1, 0, 0}, kBetaH2) == zd({2, 1}));
    CHECK_THROWS_AS(mono_degree({1, 0}, kBetaH2), validation_error);
}

TEST_CASE("mono_degree is linear") {
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> e(0, 9);
    for (int it = 0; it < 50; ++it) {
        Exps a(4), b(4), sum(4);
        for (int i = 0; i < 4; ++i) {
            a[i] = e(rng);
            b[i] = e(rng);
            sum[i] = a[i] + b[i];
        }
        auto da = mono_degree(a, kBetaH2);
        auto db = mono_degree(b, kBetaH2);
        auto ds = mono_degree(sum, kBetaH2);
        for (int i = 0; i < 2; ++i) CHECK(ds[i] == da[i] + db[i]);
    }
}

TEST_CASE("to_binomial splits positive and negative parts") {
    RingPtr ring = s_ring(11);
    CHECK(to_binomial(ring, zd({2, 1, 0, -1})).to_string() == "x1^2*x2 - x4");
    CHECK(to_binomial(ring, zd({0, 0, 0, 0})).is_zero());
    CHECK(to_binomial(ring, zd({5, 0, -5, 0})).to_string() == "x1^5 - x3^5");
}

TEST_CASE("to_binomial vanishes at the all-ones point and is odd in m") {
    RingPtr ring = s_ring(7);
    std::vector<FqElem> ones(4, ring->field().one());
    std::mt19937 rng(4);
    std::uniform_int_distribution<long> e(-6, 6);
    for (int it = 0; it < 60; ++it) {
        std::vector<Int> m(4);
        for (auto& v : m) v = e(rng);
        Polynomial f = to_binomial(ring, m);
        CHECK(f.evaluate(ones) == ring->field().zero());
        std::vector<Int> neg(4);
        for (int i = 0; i < 4; ++i) neg[i] = -m[i];
        CHECK(to_binomial(ring, neg) == -f);
    }
}

TEST_CASE("homogeneity under the grading") {
    RingPtr ring = s_ring(11);
    auto f = parse_polynomial(ring, "x1^2*x2 - x4");
    auto deg = is_homogeneous_poly(f, kBetaH2);
    REQUIRE(deg.has_value());
    CHECK(*deg == zd({2, 1}));

    CHECK_FALSE(is_homogeneous_poly(parse_polynomial(ring, "x1 - x2"), kBetaH2).has_value());

    auto c = is_homogeneous_poly(parse_polynomial(ring, "5"), kBetaH2);
    REQUIRE(c.has_value());
    CHECK(*c == zd({0, 0}));
}

TEST_CASE("product of homogeneous polynomials is homogeneous of summed degree") {
    RingPtr ring = s_ring(11);
    auto f = parse_polynomial(ring, "x1^2*x2 - x4");  // degree (2,1)
    auto g = parse_polynomial(ring, "x1 + 10*x3");    // degree (1,0)
    auto dfg = is_homogeneous_poly(f * g, kBetaH2);
    REQUIRE(dfg.has_value());
    CHECK(*dfg == zd({3, 1}));
}

TEST_CASE("monomial order comparisons") {
    // lex with block priority: z > y > x
    MonomialOrder o = MonomialOrder::block_lex({2, 1}, 3); // vars: x=0, y=1, z=2
    Exps z1{0, 0, 1}, y99{0, 99, 0};
    CHECK(o.greater(z1, y99));
    CHECK(o.compare(y99, y99) == 0);

    MonomialOrder g = MonomialOrder::grevlex(3);
    // same total degree: grevlex prefers the smaller last exponent
    CHECK(g.greater({1, 1, 0}, {1, 0, 1}));
    CHECK(g.greater({0, 0, 3}, {1, 1, 0}));
}

TEST_CASE("ring axioms on random sparse polynomials") {
    RingPtr ring = s_ring(11);
    std::mt19937 rng(9);
    for (int it = 0; it < 40; ++it) {
        Polynomial f = random_poly(ring, rng, 4);
        Polynomial g = random_poly(ring, rng, 4);
        Polynomial h = random_poly(ring, rng, 3);
        CHECK((f + g) - g == f);
        CHECK(f * g == g * f);
        CHECK(f * (g + h) == f * g + f * h);
    }
}

TEST_CASE("printing and parsing round trip") {
    RingPtr ring = s_ring(11);
    std::mt19937 rng(17);
    for (int it = 0; it < 40; ++it) {
        Polynomial f = random_poly(ring, rng, 5);
        CHECK(parse_polynomial(ring, f.to_string()) == f);
    }
    CHECK(parse_polynomial(ring, "0").is_zero());
    CHECK(parse_polynomial(ring, "x1^2*x2 - x4") == to_binomial(ring, zd({2, 1, 0, -1})));
    CHECK_THROWS_AS(parse_polynomial(ring, "x9 + 1"), validation_error);
}

TEST_CASE("extension field coefficients print and parse") {
    RingPtr ring = make_xyz_ring(make_field(4), 2, 0, 0, false);
    const FqField& f4 = ring->field();
    Polynomial f = Polynomial::monomial(ring, {1, 0}, f4.eta()) +
                   Polynomial::constant(ring, f4.add(f4.one(), f4.eta()));
    std::string s = f.to_string();
    CHECK(s == "(u)*x1 + (1+u)");
    CHECK(parse_polynomial(ring, s) == f);
}

TEST_CASE("leading term follows the active order") {
    RingPtr ring = s_ring(11);
    Polynomial f = parse_polynomial(ring, "x1*x2^2 + x3^5");
    Polynomial lex = f.with_order(MonomialOrder::lex(4));
    CHECK(lex.leading_term().exps == Exps{1, 2, 0, 0});
    Polynomial grv = f.with_order(MonomialOrder::grevlex(4));
    CHECK(grv.leading_term().exps == Exps{0, 0, 5, 0});
}
