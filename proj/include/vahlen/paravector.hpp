#pragma once

// Paravectors (R + L inside Cl(L, q)), the monoid PT(L, q), and the
// paravector Vahlen definitions.

#include <cstdint>
#include <optional>

#include "vahlen/vahlen.hpp"

namespace vahlen {

// The three spaces in play around a paravector setup over the inner space
// L: the ambient M = <e,f> perp <z> perp L with q(z) = -1, and
// Z = <e,f> perp L.  In the ambient basis z sits at index 2.
struct ParavectorContext {
    SpacePtr inner;
    SpacePtr ambient;
    SpacePtr zspace;

    static ParavectorContext create(const SpacePtr& L) {
        return {L, build_split_space(SplitKind::Paravector, L),
                build_split_space(SplitKind::Ordinary, L)};
    }
};

// PT(L, q) has two readings that coincide in every case we can test but
// are not literally the same condition: Loose takes all x != 0 with N(x)
// scalar and x (R+L) x^t inside R+L; Strict additionally requires x to be
// a Clifford group member (invertible and pi-stable on L).
enum class PtMode { Loose, Strict };

// x' m x^-1 in L for every generator m, with x invertible.
inline bool is_clifford_group_member(const CliffordElement& x) {
    std::optional<CliffordElement> inv = x.try_invert();
    if (!inv) {
        const Ring& R = x.space()->ring();
        if (!R->is_finite())
            throw UnsupportedError(
                "cannot decide invertibility over an infinite ring when the norm is not a "
                "scalar unit");
        inv = invert_exhaustive(x);
        if (!inv)
            return false;
    }
    const SpacePtr& S = x.space();
    CliffordElement xi = x.grade_involution();
    for (std::size_t i = 0; i < S->rank(); ++i)
        if (!(xi * CliffordElement::generator(S, i) * *inv).is_vector())
            return false;
    return true;
}

inline bool is_in_PT(const CliffordElement& x, PtMode mode = PtMode::Loose) {
    if (x.is_zero())
        return false;
    if (mode == PtMode::Strict && !is_clifford_group_member(x))
        return false;
    if (!x.norm().is_scalar())
        return false;
    const SpacePtr& S = x.space();
    std::uint32_t full = S->full_mask();
    CliffordElement xt = x.transpose();
    if (!(x * xt).is_paravector(full)) // p = 1
        return false;
    for (std::size_t i = 0; i < S->rank(); ++i)
        if (!(x * CliffordElement::generator(S, i) * xt).is_paravector(full))
            return false;
    return true;
}

// Exhaustive: x in PT implies x^t in PT, over all of Cl(L, q).
inline bool pt_closed_under_transpose(const SpacePtr& L, PtMode mode = PtMode::Loose) {
    CliffordEnumeration en(L);
    for (std::uint64_t i = 0; i < en.size(); ++i) {
        CliffordElement x = en.at(i);
        if (is_in_PT(x, mode) && !is_in_PT(x.transpose(), mode))
            return false;
    }
    return true;
}

// Definition `which` of the paravector Vahlen group GPV(L, q) for a matrix
// over Cl(L, q); the module is R + L and the quantified x runs over
// {1} union basis(L).
inline ConditionReport check_pv_definition(const CliffordMatrix2& g, int which,
                                           PtMode mode = PtMode::Loose) {
    std::uint32_t full = g.space()->full_mask();
    return detail::check_definition_impl(
        g, which, /*paravector=*/true,
        [full](const CliffordElement& x) { return x.is_paravector(full); },
        [mode](const CliffordElement& x) { return is_in_PT(x, mode); });
}

} // namespace vahlen
