#pragma once

// Clifford groups and the twisted conjugation action
// pi(u): x -> u' x u^-1 on the underlying module.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "vahlen/clifford.hpp"

namespace vahlen {

enum class GroupKind { NC, NCEven, Pin, Spin };

inline std::string group_kind_name(GroupKind k) {
    switch (k) {
    case GroupKind::NC: return "NC";
    case GroupKind::NCEven: return "NC0";
    case GroupKind::Pin: return "Pin";
    case GroupKind::Spin: return "Spin";
    }
    return "?";
}

enum class PiStatus { Ok, NotInvertibleByNorm, ImageNotInModule };

struct PiResult {
    PiStatus status;
    std::vector<RingElement> image; // coefficients when status == Ok
};

// pi(u) m = u' m u^-1, evaluated as u' m u-bar N(u)^-1.
inline PiResult pi_apply(const CliffordElement& u, std::span<const RingElement> m) {
    const SpacePtr& S = u.space();
    CliffordElement n = u.norm();
    if (!n.is_scalar() || !n.scalar_value().is_unit())
        return {PiStatus::NotInvertibleByNorm, {}};
    CliffordElement w =
        u.grade_involution() * CliffordElement::from_vector(S, m) * u.conjugate();
    w = w.scaled(n.scalar_value().invert());
    if (!w.is_vector())
        return {PiStatus::ImageNotInModule, {}};
    return {PiStatus::Ok, w.vector_coefficients()};
}

// Reflection in the hyperplane orthogonal to n (q(n) must be a unit):
// pi(n) as an element map, m -> m - ((n, m) / q(n)) n.
inline std::vector<RingElement> reflect(const SpacePtr& S, std::span<const RingElement> n,
                                        std::span<const RingElement> m) {
    RingElement qn = S->eval_q(n);
    if (!qn.is_unit())
        throw NotAUnitError("reflection requires q(n) a unit");
    RingElement c = S->eval_bilinear(n, m) * qn.invert();
    std::vector<RingElement> out;
    out.reserve(S->rank());
    for (std::size_t i = 0; i < S->rank(); ++i)
        out.push_back(m[i] - c * n[i]);
    return out;
}

// Membership in NC(M, q) (norm a scalar unit and pi-stable on M), its even
// part, Pin (norm exactly 1) and Spin (even Pin).  Checking pi-stability on
// the basis suffices by linearity.
inline bool is_member(const CliffordElement& u, GroupKind kind) {
    CliffordElement n = u.norm();
    if (!n.is_scalar())
        return false;
    RingElement r = n.scalar_value();
    if (kind == GroupKind::Pin || kind == GroupKind::Spin) {
        if (!r.is_one())
            return false;
    } else if (!r.is_unit()) {
        return false;
    }
    if ((kind == GroupKind::NCEven || kind == GroupKind::Spin) && !u.is_even())
        return false;
    const SpacePtr& S = u.space();
    CliffordElement ui = u.grade_involution();
    CliffordElement ub = u.conjugate();
    for (std::size_t i = 0; i < S->rank(); ++i) {
        if (!(ui * CliffordElement::generator(S, i) * ub).is_vector())
            return false;
    }
    return true;
}

// q(pi(u) m) = q(m) on the basis and on pairwise sums, which pins down the
// bilinear form as well.  Requires u in NC(M, q).
inline bool preserves_form(const CliffordElement& u) {
    if (!is_member(u, GroupKind::NC))
        throw MismatchError("preserves_form requires a Clifford group member with unit norm");
    const SpacePtr& S = u.space();
    std::vector<std::vector<RingElement>> probes;
    for (std::size_t i = 0; i < S->rank(); ++i) {
        std::vector<RingElement> v(S->rank(), RingElement::zero(S->ring()));
        v[i] = RingElement::one(S->ring());
        probes.push_back(v);
    }
    for (std::size_t i = 0; i < S->rank(); ++i)
        for (std::size_t j = i + 1; j < S->rank(); ++j) {
            std::vector<RingElement> v(S->rank(), RingElement::zero(S->ring()));
            v[i] = RingElement::one(S->ring());
            v[j] = RingElement::one(S->ring());
            probes.push_back(v);
        }
    for (const auto& m : probes) {
        PiResult r = pi_apply(u, m);
        if (r.status != PiStatus::Ok)
            return false;
        if (S->eval_q(r.image) != S->eval_q(m))
            return false;
    }
    return true;
}

} // namespace vahlen
