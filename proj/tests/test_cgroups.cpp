#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"

#include "vahlen/cgroups.hpp"

using namespace vahlen;

TEST_CASE("generators with unit q lie in the groups", "[cgroups]") {
    Ring F3 = th::gf(3);
    SpacePtr S = th::diag_space(F3, {2, 1});
    CliffordElement e1 = CliffordElement::generator(S, 0);
    CliffordElement e2 = CliffordElement::generator(S, 1);

    // N(e1) = -q(e1) = -2 = 1 over GF(3): a Pin member
    CHECK(e1.norm().scalar_value() == th::rel(F3, 1));
    CHECK(is_member(e1, GroupKind::NC));
    CHECK(is_member(e1, GroupKind::Pin));
    CHECK_FALSE(is_member(e1, GroupKind::NCEven));
    CHECK_FALSE(is_member(e1, GroupKind::Spin));

    // N(e2) = -1 = 2: in NC but not Pin
    CHECK(e2.norm().scalar_value() == th::rel(F3, 2));
    CHECK(is_member(e2, GroupKind::NC));
    CHECK_FALSE(is_member(e2, GroupKind::Pin));

    // N(e1 e2) = q(e1) q(e2) = 2: even, NC0 but not Spin
    CliffordElement b = e1 * e2;
    CHECK(b.norm().scalar_value() == th::rel(F3, 2));
    CHECK(is_member(b, GroupKind::NC));
    CHECK(is_member(b, GroupKind::NCEven));
    CHECK_FALSE(is_member(b, GroupKind::Spin));

    // with q = [2, 2] the norm of e1 e2 is 4 = 1: a Spin member
    SpacePtr S2 = th::diag_space(F3, {2, 2});
    CliffordElement b2 =
        CliffordElement::generator(S2, 0) * CliffordElement::generator(S2, 1);
    CHECK(b2.norm().scalar_value() == th::rel(F3, 1));
    CHECK(is_member(b2, GroupKind::Spin));

    // scalars: N(c) = c^2, so over GF(3) both units land in Spin, while over
    // GF(5) the scalar 2 has norm 4 != 1 and stays outside
    CHECK(is_member(CliffordElement::one(S), GroupKind::Spin));
    CHECK(is_member(CliffordElement::scalar(S, th::rel(F3, 2)), GroupKind::Spin));
    SpacePtr S5 = th::diag_space(th::gf(5), {1});
    CliffordElement two5 = CliffordElement::scalar(S5, th::rel(th::gf(5), 2));
    CHECK(is_member(two5, GroupKind::NCEven));
    CHECK_FALSE(is_member(two5, GroupKind::Spin));
    CHECK_FALSE(is_member(CliffordElement::zero(S), GroupKind::NC));
}

TEST_CASE("pi action on the module", "[cgroups]") {
    Ring F3 = th::gf(3);
    SpacePtr S = th::diag_space(F3, {2, 1});
    CliffordElement e1 = CliffordElement::generator(S, 0);

    // pi of a vector is the reflection in it
    std::vector<RingElement> n = th::qvec(F3, {1, 0});
    for (const auto& m : {th::qvec(F3, {1, 0}), th::qvec(F3, {0, 1}), th::qvec(F3, {1, 2})}) {
        PiResult r = pi_apply(e1, m);
        REQUIRE(r.status == PiStatus::Ok);
        CHECK(r.image == reflect(S, n, m));
    }
}

TEST_CASE("pi reports failure modes", "[cgroups]") {
    Ring F3 = th::gf(3);
    SpacePtr S = th::diag_space(F3, {1, 1});
    // N(1 + e1) = (1 + e1)(1 - e1) = 1 - 1 = 0
    CliffordElement u = CliffordElement::one(S) + CliffordElement::generator(S, 0);
    PiResult r = pi_apply(u, th::qvec(F3, {1, 0}));
    CHECK(r.status == PiStatus::NotInvertibleByNorm);

    // 1 + e1 + e2 has N = 1 - q(e1 + e2) = -1 = 2, a unit, but mixed parity
    // pushes a bivector component into the image.
    CliffordElement v = CliffordElement::one(S) + CliffordElement::generator(S, 0) +
                        CliffordElement::generator(S, 1);
    CHECK(v.norm().scalar_value() == th::rel(F3, 2));
    PiResult r2 = pi_apply(v, th::qvec(F3, {0, 1}));
    CHECK(r2.status == PiStatus::ImageNotInModule);
    CHECK_FALSE(is_member(v, GroupKind::NC));
}

TEST_CASE("reflection requires a unit length", "[cgroups]") {
    SpacePtr S = th::diag_space(th::zz(), {2, 1});
    std::vector<RingElement> n = th::qvec(th::zz(), {1, 0}); // q(n) = 2, not a unit in Z
    std::vector<RingElement> m = th::qvec(th::zz(), {0, 1});
    CHECK_THROWS_AS(reflect(S, n, m), NotAUnitError);
    // but e2 reflects fine
    std::vector<RingElement> n2 = th::qvec(th::zz(), {0, 1});
    std::vector<RingElement> r = reflect(S, n2, n2);
    CHECK(r == th::qvec(th::zz(), {0, -1}));
}

TEST_CASE("reflections preserve the form and compose like pi", "[cgroups]") {
    std::mt19937_64 rng(88);
    Ring F5 = th::gf(5);
    SpacePtr S = th::space_with(F5, {1, 2, 3}, {{0, 1, 1}});

    auto random_anisotropic = [&](std::vector<RingElement>& out) {
        for (int tries = 0; tries < 200; ++tries) {
            out = th::random_vector(rng, S);
            if (S->eval_q(out).is_unit())
                return true;
        }
        return false;
    };

    for (int trial = 0; trial < 40; ++trial) {
        std::vector<RingElement> n1, n2;
        REQUIRE(random_anisotropic(n1));
        REQUIRE(random_anisotropic(n2));
        std::vector<RingElement> m = th::random_vector(rng, S);

        // q(reflect(m)) = q(m)
        CHECK(S->eval_q(reflect(S, n1, m)) == S->eval_q(m));

        // pi(n1) is the reflection in n1
        PiResult r1 = pi_apply(CliffordElement::from_vector(S, n1), m);
        REQUIRE(r1.status == PiStatus::Ok);
        CHECK(r1.image == reflect(S, n1, m));

        // pi is multiplicative: pi(n1 n2) = pi(n1) o pi(n2)
        CliffordElement u = CliffordElement::from_vector(S, n1) *
                            CliffordElement::from_vector(S, n2);
        PiResult r12 = pi_apply(u, m);
        REQUIRE(r12.status == PiStatus::Ok);
        CHECK(r12.image == reflect(S, n1, reflect(S, n2, m)));
    }
}

TEST_CASE("NC members preserve the form", "[cgroups]") {
    Ring F3 = th::gf(3);
    SpacePtr S = th::diag_space(F3, {2, 1});
    CliffordElement e1 = CliffordElement::generator(S, 0);
    CliffordElement e2 = CliffordElement::generator(S, 1);
    CHECK(preserves_form(e1));
    CHECK(preserves_form(e1 * e2));
    CHECK(preserves_form(CliffordElement::scalar(S, th::rel(F3, 2))));
    CHECK_THROWS_AS(
        preserves_form(CliffordElement::one(S) + e1.scaled(th::rel(F3, 1)) + e2),
        MismatchError);
}

TEST_CASE("exhaustive group census in a tiny algebra", "[cgroups]") {
    // GF(3), rank 1, q = [1]: Cl has 9 elements a + b e1.
    // N(a + b e1) = (a + b e1)(a - b e1) = a^2 - b^2.
    Ring F3 = th::gf(3);
    SpacePtr S = th::diag_space(F3, {1});
    CliffordEnumeration en(S);
    unsigned nc = 0, nc0 = 0, pin = 0, spin = 0;
    for (std::uint64_t i = 0; i < en.size(); ++i) {
        CliffordElement u = en.at(i);
        nc += is_member(u, GroupKind::NC);
        nc0 += is_member(u, GroupKind::NCEven);
        pin += is_member(u, GroupKind::Pin);
        spin += is_member(u, GroupKind::Spin);
    }
    // Squares mod 3 are {0, 1, 1}, so a^2 - b^2 is a unit iff exactly one
    // of a, b is zero: the four members 1, 2, e1, 2*e1.  N = 1 picks out
    // the two scalars (1^2 = 2^2 = 1), which are even.
    CHECK(nc == 4);
    CHECK(nc0 == 2);
    CHECK(pin == 2);
    CHECK(spin == 2);
}
