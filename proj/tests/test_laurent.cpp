#include "doctest.h"

#include <random>

#include "cfock/laurent.hpp"

using cfock::Int;
using cfock::LaurentPoly;

namespace {

LaurentPoly v(long e = 1) { return LaurentPoly::monomial(e); }

LaurentPoly random_poly(std::mt19937& rng) {
    std::uniform_int_distribution<int> n_terms(0, 4), exp(-5, 5), coef(-9, 9);
    LaurentPoly p;
    const int terms = n_terms(rng);
    for (int t = 0; t < terms; ++t)
        p += LaurentPoly::monomial(exp(rng), coef(rng));
    return p;
}

} // namespace

TEST_CASE("ring arithmetic on fixed values") {
    CHECK(v(1) + v(-1) == LaurentPoly::monomial(1) + LaurentPoly::monomial(-1));
    CHECK((v(1) - v(-1)) * (v(1) + v(-1)) == v(2) - v(-2));
    const LaurentPoly one_plus_v = LaurentPoly(1) + v();
    CHECK(one_plus_v * one_plus_v ==
          LaurentPoly(1) + LaurentPoly::monomial(1, 2) + v(2));
}

TEST_CASE("canonical form strips zeros") {
    LaurentPoly p = v(3) - v(3);
    CHECK(p.is_zero());
    CHECK(p == LaurentPoly());
    CHECK((v(2) + LaurentPoly(5) - v(2)) == LaurentPoly(5));
}

TEST_CASE("bar negates exponents") {
    CHECK(v().bar() == v(-1));
    CHECK((LaurentPoly(1) + LaurentPoly::monomial(3, 2)).bar() ==
          LaurentPoly(1) + LaurentPoly::monomial(-3, 2));
    const LaurentPoly p = v(1) - v(-1);
    CHECK(p.bar().bar() == p);
}

TEST_CASE("bar is a ring involution on random values") {
    std::mt19937 rng(20240811);
    for (int trial = 0; trial < 200; ++trial) {
        const LaurentPoly p = random_poly(rng), q = random_poly(rng);
        CHECK(p.bar().bar() == p);
        CHECK((p * q).bar() == p.bar() * q.bar());
        CHECK((p + q).bar() == p.bar() + q.bar());
    }
}

TEST_CASE("ring axioms on random values") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const LaurentPoly p = random_poly(rng), q = random_poly(rng), r = random_poly(rng);
        CHECK((p * q) * r == p * (q * r));
        CHECK(p * (q + r) == p * q + p * r);
        CHECK(p + q == q + p);
        CHECK(p * q == q * p);
    }
}

TEST_CASE("quantum integers and factorials") {
    CHECK(cfock::quantum_int(0).is_zero());
    CHECK(cfock::quantum_int(1) == LaurentPoly(1));
    CHECK(cfock::quantum_int(2) == v(1) + v(-1));
    // [3]! = [2][3], multiplied out
    CHECK(cfock::quantum_factorial(3) ==
          v(3) + LaurentPoly::monomial(1, 2) + LaurentPoly::monomial(-1, 2) + v(-3));
    CHECK(cfock::quantum_factorial(3) ==
          cfock::quantum_int(2) * cfock::quantum_int(3));
    for (long k = 0; k <= 12; ++k) {
        const LaurentPoly f = cfock::quantum_factorial(k);
        CHECK(f.bar() == f);
    }
}

TEST_CASE("symmetric completion") {
    CHECK(cfock::symmetric_completion(v()).is_zero());
    CHECK(cfock::symmetric_completion(LaurentPoly(1)) == LaurentPoly(1));
    const LaurentPoly c = LaurentPoly::monomial(-2, 3) + LaurentPoly::monomial(1, 5);
    const LaurentPoly m = cfock::symmetric_completion(c);
    CHECK(m == LaurentPoly::monomial(2, 3) + LaurentPoly::monomial(-2, 3));
    CHECK((c - m) == LaurentPoly::monomial(1, 5) - LaurentPoly::monomial(2, 3));
    CHECK((c - m).in_v_span());
}

TEST_CASE("symmetric completion properties on random values") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 300; ++trial) {
        const LaurentPoly c = random_poly(rng);
        const LaurentPoly m = cfock::symmetric_completion(c);
        CHECK(m.bar() == m);
        CHECK((c - m).in_v_span());
        if (c.bar() == c) CHECK(m == c);
    }
}

TEST_CASE("exact division") {
    const LaurentPoly q2 = v(1) + v(-1);
    CHECK(cfock::exact_div(q2, q2) == LaurentPoly(1));
    CHECK(cfock::exact_div(v(2) - v(-2), v(1) - v(-1)) == q2);
    CHECK_THROWS_AS(cfock::exact_div(LaurentPoly(1) + v(), q2), cfock::NotDivisible);
    CHECK_THROWS_AS(cfock::exact_div(v(), LaurentPoly()), cfock::NotDivisible);
}

TEST_CASE("exact division inverts multiplication") {
    std::mt19937 rng(4242);
    for (int trial = 0; trial < 200; ++trial) {
        const LaurentPoly p = random_poly(rng);
        LaurentPoly q = random_poly(rng);
        if (q.is_zero()) q = v(-2) + LaurentPoly(3);
        CHECK(cfock::exact_div(p * q, q) == p);
    }
}

TEST_CASE("string form") {
    CHECK(LaurentPoly().str() == "0");
    CHECK((v(3) + LaurentPoly::monomial(1, 2) + LaurentPoly::monomial(-1, 2) + v(-3)).str() ==
          "v^3+2v+2v^-1+v^-3");
    CHECK((v(2) - v(-2)).str() == "v^2-v^-2");
    CHECK((LaurentPoly(-7)).str() == "-7");
}

TEST_CASE("serialization pairs are sorted by exponent") {
    const LaurentPoly p = v(2) + LaurentPoly(3) + v(-1);
    const auto pairs = p.pairs();
    REQUIRE(pairs.size() == 3);
    CHECK(pairs[0] == std::pair<long, Int>{-1, 1});
    CHECK(pairs[1] == std::pair<long, Int>{0, 3});
    CHECK(pairs[2] == std::pair<long, Int>{2, 1});
}
