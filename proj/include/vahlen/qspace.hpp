#pragma once

// Quadratic spaces: a free module R^rank carrying a quadratic form q given
// by diagonal values q(e_i) and off-diagonal polarisation values (e_i, e_j).
// The space also owns the blade-arithmetic tables used by Clifford elements,
// and an optional annotation marking it as a split extension e,f[,z] of an
// inner space.

#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "vahlen/errors.hpp"
#include "vahlen/ring.hpp"

namespace vahlen {

class QuadraticSpace;
using SpacePtr = std::shared_ptr<const QuadraticSpace>;

enum class SplitKind { Ordinary, Paravector };

// Annotation on a split space: basis order is e, f, [z,] inner basis.
struct Splitting {
    SplitKind kind;
    std::size_t e_index = 0;
    std::size_t f_index = 1;
    std::optional<std::size_t> z_index;      // paravector splits only
    std::vector<std::size_t> complement;     // indices of the inner basis
};

struct BladeTerm {
    std::uint32_t mask;
    RingElement coeff;
};
using BladeSum = std::vector<BladeTerm>;

class QuadraticSpace {
  public:
    static constexpr std::size_t kMaxRank = 20;
    static constexpr std::size_t kTableRank = 8; // eager blade tables up to here

    static SpacePtr create(const Ring& ring, std::vector<RingElement> q_diag,
                           const std::vector<std::tuple<std::size_t, std::size_t, RingElement>>&
                               bilinear_offdiag = {},
                           std::optional<Splitting> splitting = std::nullopt) {
        return SpacePtr(new QuadraticSpace(ring, std::move(q_diag), bilinear_offdiag,
                                           std::move(splitting)));
    }

    const Ring& ring() const { return ring_; }
    std::size_t rank() const { return rank_; }
    std::uint32_t full_mask() const {
        return rank_ == 0 ? 0u : (rank_ >= 32 ? ~0u : ((1u << rank_) - 1u));
    }

    const RingElement& q(std::size_t i) const { return q_diag_.at(i); }

    // Polarisation (e_i, e_j); on the diagonal this is 2 q(e_i).
    const RingElement& bilinear(std::size_t i, std::size_t j) const {
        return bilin_.at(i * rank_ + j);
    }

    const std::optional<Splitting>& splitting() const { return splitting_; }

    // q(sum x_i e_i) = sum q(e_i) x_i^2 + sum_{i<j} (e_i,e_j) x_i x_j.
    RingElement eval_q(std::span<const RingElement> coeffs) const {
        if (coeffs.size() != rank_)
            throw MismatchError("coefficient vector length does not match rank");
        RingElement acc = RingElement::zero(ring_);
        for (std::size_t i = 0; i < rank_; ++i) {
            acc += q_diag_[i] * coeffs[i] * coeffs[i];
            for (std::size_t j = i + 1; j < rank_; ++j)
                acc += bilinear(i, j) * coeffs[i] * coeffs[j];
        }
        return acc;
    }

    // (a, b) = q(a+b) - q(a) - q(b).
    RingElement eval_bilinear(std::span<const RingElement> a, std::span<const RingElement> b) const {
        if (a.size() != rank_ || b.size() != rank_)
            throw MismatchError("coefficient vector length does not match rank");
        std::vector<RingElement> sum;
        sum.reserve(rank_);
        for (std::size_t i = 0; i < rank_; ++i)
            sum.push_back(a[i] + b[i]);
        return eval_q(sum) - eval_q(a) - eval_q(b);
    }

    // det of the Gram matrix ((e_i, e_j)) is a unit.
    bool is_nondegenerate() const {
        return gram_determinant().is_unit();
    }

    RingElement gram_determinant() const {
        if (rank_ == 0)
            return RingElement::one(ring_);
        if (rank_ > 16)
            throw UnsupportedError("determinant unsupported beyond rank 16");
        // Expansion along rows with memoisation over column subsets.
        std::uint32_t full = (rank_ >= 32) ? ~0u : ((1u << rank_) - 1u);
        std::vector<std::optional<RingElement>> memo(std::size_t(full) + 1);
        return det_minor(full, memo);
    }

    // --- compatibility -------------------------------------------------

    // Same ring, rank and form; the splitting annotation is metadata and
    // does not affect element compatibility.
    friend bool operator==(const QuadraticSpace& a, const QuadraticSpace& b) {
        if (&a == &b)
            return true;
        return same_ring(a.ring_, b.ring_) && a.rank_ == b.rank_ && a.q_diag_ == b.q_diag_ &&
               a.bilin_ == b.bilin_;
    }
    friend bool operator!=(const QuadraticSpace& a, const QuadraticSpace& b) { return !(a == b); }

    // --- blade arithmetic ----------------------------------------------
    // Blades are bitmasks over the basis; blade(mask) is the ordered
    // product of the generators with set bits, ascending.

    bool has_tables() const { return has_tables_; }

    const BladeSum& blade_product_cached(std::uint32_t a, std::uint32_t b) const {
        return mul_table_[std::size_t(a) * dim_ + b];
    }

    const BladeSum& blade_transpose_cached(std::uint32_t m) const { return transpose_table_[m]; }

    // blade(a) * blade(b), without relying on the tables.
    BladeSum blade_product_compute(std::uint32_t a, std::uint32_t b) const {
        BladeSum acc{{a, RingElement::one(ring_)}};
        while (b != 0) {
            unsigned k = std::countr_zero(b);
            b &= b - 1;
            BladeSum next;
            for (const auto& t : acc) {
                BladeSum part = blade_times_generator(t.mask, k);
                for (const auto& u : part)
                    accumulate(next, u.mask, t.coeff * u.coeff);
            }
            acc = std::move(next);
        }
        return acc;
    }

    // blade(m)^t: the product of the generators taken in reverse order.
    BladeSum blade_transpose_compute(std::uint32_t m) const {
        BladeSum acc{{0u, RingElement::one(ring_)}};
        // multiply by generators descending
        for (int k = 31; k >= 0; --k) {
            if (!(m & (1u << k)))
                continue;
            BladeSum next;
            for (const auto& t : acc) {
                BladeSum part = blade_times_generator(t.mask, unsigned(k));
                for (const auto& u : part)
                    accumulate(next, u.mask, t.coeff * u.coeff);
            }
            acc = std::move(next);
        }
        return acc;
    }

  private:
    QuadraticSpace(const Ring& ring, std::vector<RingElement> q_diag,
                   const std::vector<std::tuple<std::size_t, std::size_t, RingElement>>& offdiag,
                   std::optional<Splitting> splitting)
        : ring_(ring), rank_(q_diag.size()), q_diag_(std::move(q_diag)),
          splitting_(std::move(splitting)) {
        if (rank_ > kMaxRank)
            throw UnsupportedError("rank exceeds supported maximum");
        for (const auto& v : q_diag_)
            require_same_ring(v.ring(), ring_);

        RingElement two = RingElement::from_int(ring_, 2);
        bilin_.assign(rank_ * rank_, RingElement::zero(ring_));
        for (std::size_t i = 0; i < rank_; ++i)
            bilin_[i * rank_ + i] = two * q_diag_[i];
        for (const auto& [i, j, v] : offdiag) {
            if (i >= rank_ || j >= rank_ || i == j)
                throw MismatchError("bilinear entry indices out of range");
            require_same_ring(v.ring(), ring_);
            bilin_[i * rank_ + j] = v;
            bilin_[j * rank_ + i] = v;
        }

        if (splitting_)
            validate_splitting();

        dim_ = std::size_t(1) << rank_;
        if (rank_ <= kTableRank) {
            mul_table_.reserve(dim_ * dim_);
            for (std::uint32_t a = 0; a < dim_; ++a)
                for (std::uint32_t b = 0; b < dim_; ++b)
                    mul_table_.push_back(blade_product_compute(a, b));
            transpose_table_.reserve(dim_);
            for (std::uint32_t m = 0; m < dim_; ++m)
                transpose_table_.push_back(blade_transpose_compute(m));
            has_tables_ = true;
        }
    }

    void validate_splitting() {
        const Splitting& s = *splitting_;
        auto zero = RingElement::zero(ring_);
        auto one = RingElement::one(ring_);
        auto check = [&](bool ok, const char* what) {
            if (!ok)
                throw MismatchError(std::string("invalid splitting: ") + what);
        };
        check(s.e_index < rank_ && s.f_index < rank_ && s.e_index != s.f_index,
              "hyperbolic pair indices");
        check(q(s.e_index) == zero && q(s.f_index) == zero, "q(e) = q(f) = 0");
        check(bilinear(s.e_index, s.f_index) == one, "(e, f) = 1");
        std::vector<bool> used(rank_, false);
        used[s.e_index] = used[s.f_index] = true;
        if (s.kind == SplitKind::Paravector) {
            check(s.z_index.has_value() && *s.z_index < rank_ && !used[*s.z_index],
                  "z index");
            check(q(*s.z_index) == -one, "q(z) = -1");
            used[*s.z_index] = true;
        } else {
            check(!s.z_index.has_value(), "unexpected z index");
        }
        std::size_t expected = rank_ - (s.kind == SplitKind::Paravector ? 3 : 2);
        check(s.complement.size() == expected, "complement size");
        for (std::size_t i : s.complement) {
            check(i < rank_ && !used[i], "complement indices");
            used[i] = true;
        }
        // e, f (and z) are orthogonal to each other's complement and to
        // the inner part.
        std::vector<std::size_t> special{s.e_index, s.f_index};
        if (s.z_index)
            special.push_back(*s.z_index);
        for (std::size_t a : special)
            for (std::size_t b = 0; b < rank_; ++b) {
                if (b == a)
                    continue;
                bool pair = (a == s.e_index && b == s.f_index) ||
                            (a == s.f_index && b == s.e_index);
                if (!pair)
                    check(bilinear(a, b) == zero, "orthogonality of e, f, z");
            }
    }

    RingElement det_minor(std::uint32_t cols, std::vector<std::optional<RingElement>>& memo) const {
        if (cols == 0)
            return RingElement::one(ring_);
        if (memo[cols])
            return *memo[cols];
        std::size_t row = rank_ - std::size_t(std::popcount(cols));
        RingElement acc = RingElement::zero(ring_);
        bool plus = true;
        for (std::size_t j = 0; j < rank_; ++j) {
            if (!(cols & (1u << j)))
                continue;
            const RingElement& a = bilin_[row * rank_ + j];
            if (!a.is_zero()) {
                RingElement sub = det_minor(cols & ~(1u << j), memo);
                acc += plus ? a * sub : -(a * sub);
            }
            plus = !plus;
        }
        memo[cols] = acc;
        return acc;
    }

    // blade(beta) * e_k as a sum of blades.  Peel the highest generator
    // e_j of beta: for j < k just append; for j = k contract with q(e_k);
    // for j > k use e_j e_k = (e_j, e_k) - e_k e_j.
    BladeSum blade_times_generator(std::uint32_t beta, unsigned k) const {
        if (beta == 0)
            return {{1u << k, RingElement::one(ring_)}};
        unsigned j = 31u - unsigned(std::countl_zero(beta));
        std::uint32_t rest = beta & ~(1u << j);
        if (j < k)
            return {{beta | (1u << k), RingElement::one(ring_)}};
        if (j == k)
            return {{rest, q(k)}};
        BladeSum out;
        const RingElement& c = bilinear(j, k);
        if (!c.is_zero())
            out.push_back({rest, c});
        for (const auto& t : blade_times_generator(rest, k))
            out.push_back({t.mask | (1u << j), -t.coeff});
        return out;
    }

    static void accumulate(BladeSum& sum, std::uint32_t mask, const RingElement& coeff) {
        if (coeff.is_zero())
            return;
        for (auto& t : sum) {
            if (t.mask == mask) {
                t.coeff += coeff;
                if (t.coeff.is_zero()) {
                    t.mask = sum.back().mask;
                    t.coeff = sum.back().coeff;
                    sum.pop_back();
                }
                return;
            }
        }
        sum.push_back({mask, coeff});
    }

    Ring ring_;
    std::size_t rank_;
    std::vector<RingElement> q_diag_;
    std::vector<RingElement> bilin_; // full symmetric matrix, row-major
    std::optional<Splitting> splitting_;
    std::size_t dim_ = 1;
    bool has_tables_ = false;
    std::vector<BladeSum> mul_table_;       // dim x dim
    std::vector<BladeSum> transpose_table_; // dim
};

inline void require_same_space(const SpacePtr& a, const SpacePtr& b) {
    if (a == b)
        return;
    if (!a || !b || !(*a == *b))
        throw MismatchError("quadratic space mismatch");
}

// The split space M = <e,f> (+ <z>) perp inner, with basis e, f, [z,]
// then the inner basis; q(e) = q(f) = 0, (e, f) = 1, q(z) = -1.
inline SpacePtr build_split_space(SplitKind kind, const SpacePtr& inner) {
    const Ring& R = inner->ring();
    std::size_t shift = (kind == SplitKind::Paravector) ? 3 : 2;
    std::size_t rank = inner->rank() + shift;

    std::vector<RingElement> q_diag;
    q_diag.reserve(rank);
    q_diag.push_back(RingElement::zero(R));
    q_diag.push_back(RingElement::zero(R));
    if (kind == SplitKind::Paravector)
        q_diag.push_back(-RingElement::one(R));
    for (std::size_t i = 0; i < inner->rank(); ++i)
        q_diag.push_back(inner->q(i));

    std::vector<std::tuple<std::size_t, std::size_t, RingElement>> offdiag;
    offdiag.emplace_back(0, 1, RingElement::one(R));
    for (std::size_t i = 0; i < inner->rank(); ++i)
        for (std::size_t j = i + 1; j < inner->rank(); ++j) {
            const RingElement& v = inner->bilinear(i, j);
            if (!v.is_zero())
                offdiag.emplace_back(i + shift, j + shift, v);
        }

    Splitting s;
    s.kind = kind;
    s.e_index = 0;
    s.f_index = 1;
    if (kind == SplitKind::Paravector)
        s.z_index = 2;
    for (std::size_t i = 0; i < inner->rank(); ++i)
        s.complement.push_back(i + shift);

    return QuadraticSpace::create(R, std::move(q_diag), offdiag, std::move(s));
}

// Restriction of the form to a subset of the basis, as its own space.
inline SpacePtr subspace(const SpacePtr& parent, const std::vector<std::size_t>& indices) {
    std::vector<RingElement> q_diag;
    q_diag.reserve(indices.size());
    for (std::size_t i : indices)
        q_diag.push_back(parent->q(i));
    std::vector<std::tuple<std::size_t, std::size_t, RingElement>> offdiag;
    for (std::size_t a = 0; a < indices.size(); ++a)
        for (std::size_t b = a + 1; b < indices.size(); ++b) {
            const RingElement& v = parent->bilinear(indices[a], indices[b]);
            if (!v.is_zero())
                offdiag.emplace_back(a, b, v);
        }
    return QuadraticSpace::create(parent->ring(), std::move(q_diag), offdiag);
}

} // namespace vahlen
