#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"

#include "vahlen/ring.hpp"

using namespace vahlen;

TEST_CASE("residue arithmetic reduces canonically", "[ring]") {
    Ring F3 = th::gf(3);
    CHECK(th::rel(F3, 2) + th::rel(F3, 2) == th::rel(F3, 1));
    CHECK(th::rel(F3, 2) * th::rel(F3, 2) == th::rel(F3, 1));
    CHECK(-th::rel(F3, 1) == th::rel(F3, 2));
    CHECK(RingElement::from_int(F3, -4) == th::rel(F3, 2));

    Ring Z6 = th::zn(6);
    CHECK(th::rel(Z6, 4) + th::rel(Z6, 5) == th::rel(Z6, 3));
    CHECK(RingElement::parse(Z6, "-1") == th::rel(Z6, 5));
    CHECK(RingElement::parse(Z6, "8") == th::rel(Z6, 2));
}

TEST_CASE("integer arithmetic is exact", "[ring]") {
    Ring Z = th::zz();
    CHECK(th::rel(Z, 7) * th::rel(Z, -3) == th::rel(Z, -21));
    CHECK(th::rel(Z, 1000000000) * th::rel(Z, 1000000000) ==
          RingElement::parse(Z, "1000000000000000000"));
    // no silent wraparound far past 64 bits
    RingElement big = RingElement::parse(Z, "123456789012345678901234567890");
    CHECK(big * big == RingElement::parse(Z, "15241578753238836750495351562536198787501905199875019052100"));
}

TEST_CASE("laurent arithmetic over GF(2)", "[ring]") {
    Ring L2 = th::laurent(2);
    RingElement a = RingElement::parse(L2, "1*t + 1");
    RingElement b = RingElement::parse(L2, "1*t^-1 + 1");
    // (t + 1)(t^-1 + 1) = 1 + t + t^-1 + 1 = t + t^-1 in characteristic 2;
    // every printed exponent is explicit
    CHECK((a * b).to_string() == "1*t^-1 + 1*t^1");
    CHECK(a + a == RingElement::zero(L2));
    CHECK(RingElement::parse(L2, "t^2") == RingElement::laurent_term(L2, 1, 2));
    CHECK(RingElement::parse(L2, "t") == RingElement::laurent_term(L2, 1, 1));
}

TEST_CASE("units and inversion", "[ring]") {
    Ring Z = th::zz();
    CHECK(th::rel(Z, 1).is_unit());
    CHECK(th::rel(Z, -1).is_unit());
    CHECK_FALSE(th::rel(Z, 2).is_unit());
    CHECK(th::rel(Z, -1).invert() == th::rel(Z, -1));
    CHECK_THROWS_AS(th::rel(Z, 2).invert(), NotAUnitError);

    Ring F3 = th::gf(3);
    CHECK(th::rel(F3, 2).invert() == th::rel(F3, 2));
    CHECK_FALSE(th::rel(F3, 0).is_unit());

    Ring Z6 = th::zn(6);
    CHECK(th::rel(Z6, 5).is_unit());
    CHECK(th::rel(Z6, 5).invert() == th::rel(Z6, 5));
    CHECK_FALSE(th::rel(Z6, 3).is_unit());
    CHECK_FALSE(th::rel(Z6, 2).is_unit());

    Ring L3 = th::laurent(3);
    RingElement mono = RingElement::laurent_term(L3, 2, 2);
    CHECK(mono.is_unit());
    CHECK(mono.invert() == RingElement::laurent_term(L3, 2, -2));
    CHECK(mono * mono.invert() == RingElement::one(L3));
    CHECK_FALSE(RingElement::parse(L3, "1*t + 1").is_unit());
    CHECK_FALSE(RingElement::zero(L3).is_unit());
}

TEST_CASE("ring constructors validate their parameters", "[ring]") {
    CHECK_THROWS_AS(th::zn(1), UnsupportedError);
    CHECK_THROWS_AS(th::gf(4), UnsupportedError);
    CHECK_THROWS_AS(th::gf(1), UnsupportedError);
    CHECK_THROWS_AS(RingDescriptor::laurent_over_prime_field(Int(6)), UnsupportedError);
    CHECK_NOTHROW(th::gf(2));
    CHECK_NOTHROW(th::gf(97));
}

TEST_CASE("finite enumeration is the canonical residue order", "[ring]") {
    Ring F3 = th::gf(3);
    REQUIRE(F3->size() == 3);
    for (std::uint64_t i = 0; i < 3; ++i) {
        RingElement e = RingElement::element_at(F3, i);
        CHECK(e == th::rel(F3, (long long)i));
        CHECK(e.digit() == i);
    }
    CHECK_THROWS_AS(th::zz()->size(), UnsupportedError);
    CHECK_THROWS_AS(th::laurent(2)->size(), UnsupportedError);
    CHECK_THROWS_AS(RingElement::element_at(th::zz(), 0), UnsupportedError);
}

TEST_CASE("integral domain classification is by kind", "[ring]") {
    CHECK(th::zz()->is_integral_domain());
    CHECK(th::gf(3)->is_integral_domain());
    CHECK(th::laurent(2)->is_integral_domain());
    CHECK_FALSE(th::zn(6)->is_integral_domain());
    // deliberate: Z/5 is a field, but the kind says "integers-mod-n"
    CHECK_FALSE(th::zn(5)->is_integral_domain());
}

TEST_CASE("no zero divisors in the finite fields, some in Z/6", "[ring]") {
    for (long p : {2L, 3L, 5L}) {
        Ring F = th::gf(p);
        for (std::uint64_t a = 1; a < F->size(); ++a)
            for (std::uint64_t b = 1; b < F->size(); ++b)
                CHECK_FALSE((RingElement::element_at(F, a) * RingElement::element_at(F, b))
                                .is_zero());
    }
    Ring Z6 = th::zn(6);
    CHECK((th::rel(Z6, 2) * th::rel(Z6, 3)).is_zero());
}

TEST_CASE("ring axioms hold on random samples", "[ring]") {
    std::mt19937_64 rng(12345);
    for (const Ring& R : {th::zz(), th::gf(2), th::gf(5), th::zn(6), th::laurent(3)}) {
        for (int i = 0; i < 300; ++i) {
            RingElement a = th::random_scalar(rng, R);
            RingElement b = th::random_scalar(rng, R);
            RingElement c = th::random_scalar(rng, R);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a + RingElement::zero(R) == a);
            CHECK(a * RingElement::one(R) == a);
            CHECK((a + (-a)).is_zero());
            if (a.is_unit())
                CHECK(a * a.invert() == RingElement::one(R));
        }
    }
}

TEST_CASE("mixing rings is rejected", "[ring]") {
    CHECK_THROWS_AS(th::rel(th::gf(3), 1) + th::rel(th::gf(5), 1), MismatchError);
    CHECK_THROWS_AS(th::rel(th::zz(), 1) * th::rel(th::zn(6), 1), MismatchError);
    // structurally equal descriptors are interchangeable
    CHECK(th::rel(th::gf(3), 2) + th::rel(th::gf(3), 2) == th::rel(th::gf(3), 1));
}

TEST_CASE("ring literals round-trip", "[ring]") {
    std::mt19937_64 rng(777);
    for (const Ring& R : {th::zz(), th::gf(2), th::zn(6), th::laurent(2), th::laurent(5)}) {
        for (int i = 0; i < 200; ++i) {
            RingElement a = th::random_scalar(rng, R) + th::random_scalar(rng, R);
            CHECK(RingElement::parse(R, a.to_string()) == a);
        }
    }
    Ring L2 = th::laurent(2);
    RingElement x = RingElement::parse(L2, "1*t^-1 + 1 + 1*t^2");
    CHECK(x.to_string() == "1*t^-1 + 1 + 1*t^2");
    CHECK(RingElement::parse(L2, "  1*t^-1+1   + 1*t^2 ") == x);
}

TEST_CASE("parse errors carry positions", "[ring]") {
    Ring F3 = th::gf(3);
    try {
        RingElement::parse(F3, "x");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.position() == 0);
    }
    try {
        RingElement::parse(F3, "12 junk");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.position() == 3);
    }
    CHECK_THROWS_AS(RingElement::parse(th::laurent(2), "1*x"), ParseError);
    CHECK_THROWS_AS(RingElement::parse(th::laurent(2), "t^999999999999"), ParseError);
}
