#pragma once

// Elements of the Clifford algebra Cl(M, q) of a quadratic space, stored
// as canonical blade-coefficient maps (blade bitmask -> nonzero scalar).
// The defining relations are m^2 = q(m) and mn + nm = (m, n) for vectors.

#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "vahlen/qspace.hpp"

namespace vahlen {

class CliffordElement {
  public:
    using Terms = std::map<std::uint32_t, RingElement>;

    static CliffordElement zero(const SpacePtr& space) { return CliffordElement(space); }

    static CliffordElement scalar(const SpacePtr& space, const RingElement& c) {
        CliffordElement x(space);
        x.add_term(0, c);
        return x;
    }

    static CliffordElement one(const SpacePtr& space) {
        return scalar(space, RingElement::one(space->ring()));
    }

    static CliffordElement generator(const SpacePtr& space, std::size_t i) {
        if (i >= space->rank())
            throw MismatchError("generator index out of range");
        CliffordElement x(space);
        x.add_term(1u << i, RingElement::one(space->ring()));
        return x;
    }

    static CliffordElement blade(const SpacePtr& space, std::uint32_t mask, const RingElement& c) {
        if (mask & ~space->full_mask())
            throw MismatchError("blade mask out of range");
        CliffordElement x(space);
        x.add_term(mask, c);
        return x;
    }

    static CliffordElement from_vector(const SpacePtr& space, std::span<const RingElement> coeffs) {
        if (coeffs.size() != space->rank())
            throw MismatchError("coefficient vector length does not match rank");
        CliffordElement x(space);
        for (std::size_t i = 0; i < coeffs.size(); ++i)
            x.add_term(1u << i, coeffs[i]);
        return x;
    }

    const SpacePtr& space() const { return space_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    RingElement coeff(std::uint32_t mask) const {
        auto it = terms_.find(mask);
        return it == terms_.end() ? RingElement::zero(space_->ring()) : it->second;
    }

    friend CliffordElement operator+(const CliffordElement& a, const CliffordElement& b) {
        require_same_space(a.space_, b.space_);
        CliffordElement out = a;
        for (const auto& [m, c] : b.terms_)
            out.add_term(m, c);
        return out;
    }

    friend CliffordElement operator-(const CliffordElement& a, const CliffordElement& b) {
        return a + (-b);
    }

    CliffordElement operator-() const {
        CliffordElement out(space_);
        for (const auto& [m, c] : terms_)
            out.terms_.emplace(m, -c);
        return out;
    }

    friend CliffordElement operator*(const CliffordElement& a, const CliffordElement& b) {
        require_same_space(a.space_, b.space_);
        CliffordElement out(a.space_);
        const QuadraticSpace& S = *a.space_;
        for (const auto& [ma, ca] : a.terms_) {
            for (const auto& [mb, cb] : b.terms_) {
                RingElement c = ca * cb;
                if (c.is_zero())
                    continue;
                if (S.has_tables()) {
                    for (const auto& t : S.blade_product_cached(ma, mb))
                        out.add_term(t.mask, c * t.coeff);
                } else {
                    for (const auto& t : S.blade_product_compute(ma, mb))
                        out.add_term(t.mask, c * t.coeff);
                }
            }
        }
        return out;
    }

    CliffordElement scaled(const RingElement& c) const {
        CliffordElement out(space_);
        for (const auto& [m, v] : terms_)
            out.add_term(m, v * c);
        return out;
    }

    friend bool operator==(const CliffordElement& a, const CliffordElement& b) {
        if (a.space_ != b.space_ && !(*a.space_ == *b.space_))
            return false;
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const CliffordElement& a, const CliffordElement& b) { return !(a == b); }

    // --- involutions -----------------------------------------------------

    // x' : negates odd-grade components.
    CliffordElement grade_involution() const {
        CliffordElement out(space_);
        for (const auto& [m, c] : terms_)
            out.terms_.emplace(m, (std::popcount(m) % 2) ? -c : c);
        return out;
    }

    // x^t : anti-automorphism reversing generator products.  Computed by
    // re-multiplying each blade's generators in reverse order, which is
    // what the definition says; the textbook sign rule only applies to
    // orthogonal bases.
    CliffordElement transpose() const {
        CliffordElement out(space_);
        const QuadraticSpace& S = *space_;
        for (const auto& [m, c] : terms_) {
            if (S.has_tables()) {
                for (const auto& t : S.blade_transpose_cached(m))
                    out.add_term(t.mask, c * t.coeff);
            } else {
                for (const auto& t : S.blade_transpose_compute(m))
                    out.add_term(t.mask, c * t.coeff);
            }
        }
        return out;
    }

    // x-bar = (x^t)' = (x')^t.
    CliffordElement conjugate() const { return transpose().grade_involution(); }

    CliffordElement grade_part(unsigned k) const {
        CliffordElement out(space_);
        for (const auto& [m, c] : terms_)
            if (unsigned(std::popcount(m)) == k)
                out.terms_.emplace(m, c);
        return out;
    }

    CliffordElement even_part() const {
        CliffordElement out(space_);
        for (const auto& [m, c] : terms_)
            if (std::popcount(m) % 2 == 0)
                out.terms_.emplace(m, c);
        return out;
    }

    CliffordElement odd_part() const {
        CliffordElement out(space_);
        for (const auto& [m, c] : terms_)
            if (std::popcount(m) % 2 == 1)
                out.terms_.emplace(m, c);
        return out;
    }

    bool is_even() const {
        for (const auto& [m, c] : terms_)
            if (std::popcount(m) % 2 != 0)
                return false;
        return true;
    }

    bool is_odd() const {
        for (const auto& [m, c] : terms_)
            if (std::popcount(m) % 2 != 1)
                return false;
        return true;
    }

    // --- predicates --------------------------------------------------------

    bool is_scalar() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
    }

    RingElement scalar_value() const {
        if (!is_scalar())
            throw MismatchError("element is not a scalar");
        return coeff(0);
    }

    // Member of the submodule spanned by the generators with bits in `sub`
    // (zero counts).  With the default, of M itself.
    bool is_vector(std::uint32_t sub) const {
        for (const auto& [m, c] : terms_)
            if (std::popcount(m) != 1 || (m & ~sub))
                return false;
        return true;
    }
    bool is_vector() const { return is_vector(space_->full_mask()); }

    // Member of R + span(sub).
    bool is_paravector(std::uint32_t sub) const {
        for (const auto& [m, c] : terms_)
            if (m != 0 && (std::popcount(m) != 1 || (m & ~sub)))
                return false;
        return true;
    }
    bool is_paravector() const { return is_paravector(space_->full_mask()); }

    std::vector<RingElement> vector_coefficients() const {
        if (!is_vector())
            throw MismatchError("element is not a vector");
        std::vector<RingElement> out(space_->rank(), RingElement::zero(space_->ring()));
        for (const auto& [m, c] : terms_)
            out[std::size_t(std::countr_zero(m))] = c;
        return out;
    }

    // x m = m x' for every generator m.
    bool in_twisted_centre() const {
        for (std::size_t i = 0; i < space_->rank(); ++i) {
            CliffordElement g = generator(space_, i);
            if (*this * g != g * grade_involution())
                return false;
        }
        return true;
    }

    // N(x) = x x-bar.
    CliffordElement norm() const { return *this * conjugate(); }

    // Inverse via the norm: defined when N(x) is a scalar unit.  A nullopt
    // answer means "not invertible by this method", not a proof of
    // non-invertibility.
    std::optional<CliffordElement> try_invert() const {
        CliffordElement n = norm();
        if (!n.is_scalar())
            return std::nullopt;
        RingElement r = n.scalar_value();
        if (!r.is_unit())
            return std::nullopt;
        CliffordElement inv = conjugate().scaled(r.invert());
        CliffordElement id = one(space_);
        if (*this * inv != id || inv * *this != id)
            throw MismatchError("norm-based inverse failed to verify");
        return inv;
    }

    // --- literal emission ----------------------------------------------

    // e.g. "2*e1e3 + 1*e2 + 2"; indices displayed 1-based; blades ascend
    // by bitmask; Laurent coefficients are parenthesised unless constant.
    std::string to_string() const {
        if (terms_.empty())
            return "0";
        std::string out;
        for (const auto& [m, c] : terms_) {
            if (!out.empty())
                out += " + ";
            std::string cs = c.to_string();
            if (c.needs_parens())
                cs = "(" + cs + ")";
            if (m == 0)
                out += cs;
            else
                out += cs + "*" + blade_name(m);
        }
        return out;
    }

    static std::string blade_name(std::uint32_t mask) {
        std::string out;
        for (unsigned i = 0; i < 32; ++i)
            if (mask & (1u << i))
                out += "e" + std::to_string(i + 1);
        return out;
    }

  private:
    explicit CliffordElement(SpacePtr space) : space_(std::move(space)) {
        if (!space_)
            throw MismatchError("null space");
    }

    void add_term(std::uint32_t mask, const RingElement& c) {
        if (c.is_zero())
            return;
        auto [it, inserted] = terms_.try_emplace(mask, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero())
                terms_.erase(it);
        }
    }

    SpacePtr space_;
    Terms terms_;
};

// Rebuild x over `target`, renaming generator i to index_map[i].  The two
// spaces must agree on the form where it matters; this is a plain relabel
// of blades, used for the canonical inclusions between split spaces.
inline CliffordElement map_blades(const CliffordElement& x, const SpacePtr& target,
                                  const std::vector<std::size_t>& index_map) {
    require_same_ring(x.space()->ring(), target->ring());
    CliffordElement out = CliffordElement::zero(target);
    for (const auto& [m, c] : x.terms()) {
        std::uint32_t mapped = 0;
        for (unsigned i = 0; i < 32; ++i)
            if (m & (1u << i))
                mapped |= (1u << index_map.at(i));
        out = out + CliffordElement::blade(target, mapped, c);
    }
    return out;
}

enum class GradeFilter { All, Even, Odd };

// Deterministic enumeration of Cl(M, q) over a finite ring: lexicographic
// over coefficient vectors with the lowest blade bitmask as the most
// significant digit.
class CliffordEnumeration {
  public:
    explicit CliffordEnumeration(SpacePtr space, GradeFilter filter = GradeFilter::All)
        : space_(std::move(space)) {
        ring_size_ = space_->ring()->size();
        std::uint32_t dim = 1u << space_->rank();
        for (std::uint32_t m = 0; m < dim; ++m) {
            bool even = std::popcount(m) % 2 == 0;
            if (filter == GradeFilter::All || (filter == GradeFilter::Even) == even)
                blades_.push_back(m);
        }
        total_ = 1;
        for (std::size_t i = 0; i < blades_.size(); ++i) {
            if (total_ > (std::uint64_t(1) << 62) / ring_size_)
                throw UnsupportedError("enumeration too large");
            total_ *= ring_size_;
        }
    }

    std::uint64_t size() const { return total_; }
    const SpacePtr& space() const { return space_; }
    const std::vector<std::uint32_t>& blades() const { return blades_; }

    CliffordElement at(std::uint64_t idx) const {
        CliffordElement x = CliffordElement::zero(space_);
        std::uint64_t rest = idx;
        for (std::size_t j = blades_.size(); j-- > 0;) {
            std::uint64_t digit = rest % ring_size_;
            rest /= ring_size_;
            if (digit != 0)
                x = x + CliffordElement::blade(space_, blades_[j],
                                               RingElement::element_at(space_->ring(), digit));
        }
        return x;
    }

  private:
    SpacePtr space_;
    std::vector<std::uint32_t> blades_;
    std::uint64_t ring_size_ = 0;
    std::uint64_t total_ = 0;
};

// Compact identity key for elements over a small finite ring; falls back
// to the literal otherwise.  Equal keys <=> equal elements.
inline std::string element_key(const CliffordElement& x) {
    const Ring& R = x.space()->ring();
    if (R->is_finite() && R->size() <= 250) {
        std::uint32_t dim = 1u << x.space()->rank();
        std::string key(dim, char(0));
        for (const auto& [m, c] : x.terms())
            key[m] = char(c.digit() + 1);
        return key;
    }
    return x.to_string();
}

// Brute-force two-sided inverse over a small finite ring.
inline std::optional<CliffordElement> invert_exhaustive(const CliffordElement& x,
                                                        std::uint64_t cap = (1u << 20)) {
    CliffordEnumeration en(x.space());
    if (en.size() > cap)
        throw UnsupportedError("space too large for exhaustive inversion");
    CliffordElement id = CliffordElement::one(x.space());
    for (std::uint64_t i = 0; i < en.size(); ++i) {
        CliffordElement v = en.at(i);
        if (x * v == id && v * x == id)
            return v;
    }
    return std::nullopt;
}

} // namespace vahlen
