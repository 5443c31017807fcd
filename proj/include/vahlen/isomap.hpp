#pragma once

// The explicit isomorphisms: phi from the Clifford algebra of a split
// space onto 2x2 matrices over the inner algebra, psi identifying Cl(Z)
// with the even part of Cl(M) via z, and their composite theta.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "vahlen/paravector.hpp"
#include "vahlen/vahlen.hpp"

namespace vahlen {

// Cl(<e,f> perp S) ~ MAT(2, Cl(S)), determined on generators by
// phi(e) = (0,1;0,0), phi(f) = (0,0;1,0), phi(n) = (n,0;0,-n) for n in S.
class SplitIso {
  public:
    explicit SplitIso(const SpacePtr& ambient) : ambient_(ambient) {
        if (!ambient->splitting())
            throw MismatchError("phi requires a split space");
        const Splitting& s = *ambient->splitting();
        e_index_ = s.e_index;
        f_index_ = s.f_index;
        // The inner algebra sits on everything outside the hyperbolic
        // pair; for a paravector split that includes z.
        if (s.z_index)
            sub_to_ambient_.push_back(*s.z_index);
        for (std::size_t i : s.complement)
            sub_to_ambient_.push_back(i);
        std::sort(sub_to_ambient_.begin(), sub_to_ambient_.end());
        sub_ = subspace(ambient, sub_to_ambient_);

        build_blade_images();
    }

    const SpacePtr& ambient() const { return ambient_; }
    const SpacePtr& sub() const { return sub_; }

    CliffordMatrix2 phi(const CliffordElement& x) const {
        require_same_space(x.space(), ambient_);
        CliffordMatrix2 acc = CliffordMatrix2::zero(sub_);
        for (const auto& [m, c] : x.terms())
            acc = acc + blade_image_[m].scaled(c);
        return acc;
    }

    // phi^-1(a b; c d) = ef i(a) + e i(b') + f i(c) + fe i(d'), where i is
    // the inclusion of the inner algebra.
    CliffordElement phi_inverse(const CliffordMatrix2& g) const {
        require_same_space(g.space(), sub_);
        CliffordElement e = CliffordElement::generator(ambient_, e_index_);
        CliffordElement f = CliffordElement::generator(ambient_, f_index_);
        return e * f * embed(g.alpha()) + e * embed(g.beta().grade_involution()) +
               f * embed(g.gamma()) + f * e * embed(g.delta().grade_involution());
    }

    CliffordElement embed(const CliffordElement& x) const {
        return map_blades(x, ambient_, sub_to_ambient_);
    }

    // phi intertwines the involutions with their matrix versions.
    bool translate_check(const CliffordElement& x) const {
        CliffordMatrix2 gx = phi(x);
        return phi(x.grade_involution()) == mat_grade(gx) &&
               phi(x.transpose()) == mat_transpose(gx) &&
               phi(x.conjugate()) == mat_conjugate(gx);
    }

  private:
    void build_blade_images() {
        std::size_t rank = ambient_->rank();
        std::vector<CliffordMatrix2> gen;
        gen.reserve(rank);
        CliffordElement zero = CliffordElement::zero(sub_);
        CliffordElement one = CliffordElement::one(sub_);
        std::vector<std::size_t> ambient_to_sub(rank, SIZE_MAX);
        for (std::size_t j = 0; j < sub_to_ambient_.size(); ++j)
            ambient_to_sub[sub_to_ambient_[j]] = j;
        for (std::size_t i = 0; i < rank; ++i) {
            if (i == e_index_) {
                gen.emplace_back(zero, one, zero, zero);
            } else if (i == f_index_) {
                gen.emplace_back(zero, zero, one, zero);
            } else {
                CliffordElement n = CliffordElement::generator(sub_, ambient_to_sub[i]);
                gen.emplace_back(n, zero, zero, -n);
            }
        }
        std::size_t dim = std::size_t(1) << rank;
        blade_image_.reserve(dim);
        blade_image_.push_back(CliffordMatrix2::identity(sub_));
        for (std::uint32_t m = 1; m < dim; ++m) {
            unsigned low = unsigned(std::countr_zero(m));
            blade_image_.push_back(gen[low] * blade_image_[m & (m - 1)]);
        }
    }

    SpacePtr ambient_, sub_;
    std::size_t e_index_ = 0, f_index_ = 1;
    std::vector<std::size_t> sub_to_ambient_;
    std::vector<CliffordMatrix2> blade_image_;
};

// The paravector composite: psi identifies Cl(Z) with the even part of
// Cl(M) by y -> even(y) + z odd(y), and theta = phi_Z o psi^-1 maps the
// even part of Cl(M) onto MAT(2, Cl(L)).
class ParavectorIso {
  public:
    explicit ParavectorIso(const SpacePtr& L)
        : ctx_(ParavectorContext::create(L)), phi_z_(ctx_.zspace) {
        std::size_t zrank = ctx_.zspace->rank();
        for (std::size_t j = 0; j < zrank; ++j)
            z_to_m_.push_back(j < 2 ? j : j + 1);
        for (std::size_t i = 0; i < ctx_.ambient->rank(); ++i)
            m_to_z_.push_back(i < 2 ? i : i - 1); // slot 2 is z, asserted away
    }

    const ParavectorContext& context() const { return ctx_; }
    const SpacePtr& ambient() const { return ctx_.ambient; }
    const SpacePtr& zspace() const { return ctx_.zspace; }
    const SpacePtr& inner() const { return phi_z_.sub(); }
    const SplitIso& phi_z() const { return phi_z_; }

    CliffordElement psi(const CliffordElement& y) const {
        require_same_space(y.space(), ctx_.zspace);
        CliffordElement even = map_blades(y.even_part(), ctx_.ambient, z_to_m_);
        CliffordElement odd = map_blades(y.odd_part(), ctx_.ambient, z_to_m_);
        CliffordElement z = CliffordElement::generator(ctx_.ambient, 2);
        return even + z * odd;
    }

    CliffordElement psi_inverse(const CliffordElement& u) const {
        require_same_space(u.space(), ctx_.ambient);
        if (!u.is_even())
            throw MismatchError("psi_inverse requires an even element");
        CliffordElement zfree = CliffordElement::zero(ctx_.ambient);
        CliffordElement zpart = CliffordElement::zero(ctx_.ambient);
        for (const auto& [m, c] : u.terms()) {
            CliffordElement t = CliffordElement::blade(ctx_.ambient, m, c);
            if (m & 4u)
                zpart = zpart + t;
            else
                zfree = zfree + t;
        }
        // z^-1 = -z since q(z) = -1.
        CliffordElement z = CliffordElement::generator(ctx_.ambient, 2);
        CliffordElement r = (-z) * zpart;
        for (const auto& [m, c] : r.terms())
            if (m & 4u)
                throw MismatchError("psi_inverse: z failed to cancel");
        return map_blades(zfree, ctx_.zspace, m_to_z_) + map_blades(r, ctx_.zspace, m_to_z_);
    }

    CliffordMatrix2 theta(const CliffordElement& u) const { return phi_z_.phi(psi_inverse(u)); }

    CliffordElement theta_inverse(const CliffordMatrix2& g) const {
        return psi(phi_z_.phi_inverse(g));
    }

  private:
    ParavectorContext ctx_;
    SplitIso phi_z_;
    std::vector<std::size_t> z_to_m_, m_to_z_;
};

} // namespace vahlen
