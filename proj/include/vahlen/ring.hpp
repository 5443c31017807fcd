#pragma once

// Exact arithmetic in the base rings: the integers, integers mod n,
// prime fields, and Laurent polynomial rings over prime fields.
// Elements are canonical so that operator== is structural equality.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <utility>

#include "vahlen/errors.hpp"
#include "vahlen/scan.hpp"

namespace vahlen {

using Int = boost::multiprecision::cpp_int;

enum class RingKind { Integers, IntegersModN, PrimeField, LaurentOverPrimeField };

class RingDescriptor;
using Ring = std::shared_ptr<const RingDescriptor>;

namespace detail {

inline bool is_prime(const Int& p) {
    if (p < 2)
        return false;
    for (Int d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

// gcd(a, n) together with an x such that a*x = gcd (mod n); a, n >= 0.
inline std::pair<Int, Int> egcd_mod(const Int& a, const Int& n) {
    Int r0 = n, r1 = a, s0 = 0, s1 = 1;
    while (r1 != 0) {
        Int q = r0 / r1;
        Int r2 = r0 - q * r1;
        Int s2 = s0 - q * s1;
        r0 = r1;
        r1 = r2;
        s0 = s1;
        s1 = s2;
    }
    return {r0, s0};
}

} // namespace detail

class RingDescriptor {
  public:
    static Ring integers() { return Ring(new RingDescriptor(RingKind::Integers, 0)); }

    static Ring integers_mod(const Int& n) {
        if (n < 2)
            throw UnsupportedError("integers-mod-n requires n >= 2");
        return Ring(new RingDescriptor(RingKind::IntegersModN, n));
    }

    static Ring prime_field(const Int& p) {
        if (!detail::is_prime(p))
            throw UnsupportedError("prime-field-p requires p prime");
        return Ring(new RingDescriptor(RingKind::PrimeField, p));
    }

    static Ring laurent_over_prime_field(const Int& p) {
        if (!detail::is_prime(p))
            throw UnsupportedError("laurent coefficient field requires p prime");
        return Ring(new RingDescriptor(RingKind::LaurentOverPrimeField, p));
    }

    RingKind kind() const { return kind_; }

    // n for Z/n, p for GF(p) and GF(p)[t,t^-1]; 0 for the integers.
    const Int& modulus() const { return modulus_; }

    bool is_integral_domain() const {
        // By kind: Z/n is rejected even when n happens to be prime; use
        // prime-field-p to get the domain structure recognised.
        return kind_ != RingKind::IntegersModN;
    }

    bool is_finite() const {
        return kind_ == RingKind::IntegersModN || kind_ == RingKind::PrimeField;
    }

    std::uint64_t size() const {
        if (!is_finite())
            throw UnsupportedError("ring is infinite: " + name());
        if (modulus_ > std::numeric_limits<std::uint64_t>::max())
            throw UnsupportedError("ring too large to enumerate");
        return static_cast<std::uint64_t>(modulus_);
    }

    std::string name() const {
        switch (kind_) {
        case RingKind::Integers: return "Z";
        case RingKind::IntegersModN: return "Z/" + modulus_.str();
        case RingKind::PrimeField: return "GF(" + modulus_.str() + ")";
        case RingKind::LaurentOverPrimeField: return "GF(" + modulus_.str() + ")[t,t^-1]";
        }
        return "?";
    }

    friend bool operator==(const RingDescriptor& a, const RingDescriptor& b) {
        return a.kind_ == b.kind_ && a.modulus_ == b.modulus_;
    }
    friend bool operator!=(const RingDescriptor& a, const RingDescriptor& b) { return !(a == b); }

  private:
    RingDescriptor(RingKind k, Int m) : kind_(k), modulus_(std::move(m)) {}

    RingKind kind_;
    Int modulus_;
};

inline bool same_ring(const Ring& a, const Ring& b) { return a == b || *a == *b; }

inline void require_same_ring(const Ring& a, const Ring& b) {
    if (!same_ring(a, b))
        throw MismatchError("ring mismatch: " + a->name() + " vs " + b->name());
}

class RingElement {
  public:
    static RingElement zero(const Ring& ring) { return from_integer(ring, 0); }
    static RingElement one(const Ring& ring) { return from_integer(ring, 1); }

    // Image of an integer under the canonical map Z -> R.
    static RingElement from_integer(const Ring& ring, const Int& v) {
        RingElement e(ring);
        switch (ring->kind()) {
        case RingKind::Integers:
            e.value_ = v;
            break;
        case RingKind::IntegersModN:
        case RingKind::PrimeField:
            e.value_ = detail_reduce(v, ring->modulus());
            break;
        case RingKind::LaurentOverPrimeField: {
            Int c = detail_reduce(v, ring->modulus());
            if (c != 0)
                e.poly_[0] = c;
            break;
        }
        }
        return e;
    }

    static RingElement from_int(const Ring& ring, long long v) { return from_integer(ring, Int(v)); }

    // c * t^k over a Laurent ring.
    static RingElement laurent_term(const Ring& ring, const Int& c, long k) {
        if (ring->kind() != RingKind::LaurentOverPrimeField)
            throw MismatchError("laurent_term requires a Laurent ring");
        RingElement e(ring);
        Int r = detail_reduce(c, ring->modulus());
        if (r != 0)
            e.poly_[k] = r;
        return e;
    }

    const Ring& ring() const { return ring_; }

    bool is_zero() const {
        return ring_->kind() == RingKind::LaurentOverPrimeField ? poly_.empty() : value_ == 0;
    }

    bool is_one() const { return *this == one(ring_); }

    RingElement operator-() const {
        RingElement r(ring_);
        if (ring_->kind() == RingKind::LaurentOverPrimeField) {
            for (const auto& [k, c] : poly_)
                r.poly_[k] = ring_->modulus() - c;
        } else {
            r.value_ = detail_reduce(-value_, ring_->modulus());
        }
        return r;
    }

    friend RingElement operator+(const RingElement& a, const RingElement& b) {
        require_same_ring(a.ring_, b.ring_);
        RingElement r(a.ring_);
        if (a.ring_->kind() == RingKind::LaurentOverPrimeField) {
            r.poly_ = a.poly_;
            for (const auto& [k, c] : b.poly_)
                detail_add_term(r.poly_, k, c, a.ring_->modulus());
        } else {
            r.value_ = detail_reduce(a.value_ + b.value_, a.ring_->modulus());
        }
        return r;
    }

    friend RingElement operator-(const RingElement& a, const RingElement& b) { return a + (-b); }

    friend RingElement operator*(const RingElement& a, const RingElement& b) {
        require_same_ring(a.ring_, b.ring_);
        RingElement r(a.ring_);
        if (a.ring_->kind() == RingKind::LaurentOverPrimeField) {
            for (const auto& [ka, ca] : a.poly_)
                for (const auto& [kb, cb] : b.poly_)
                    detail_add_term(r.poly_, ka + kb, ca * cb, a.ring_->modulus());
        } else {
            r.value_ = detail_reduce(a.value_ * b.value_, a.ring_->modulus());
        }
        return r;
    }

    RingElement& operator+=(const RingElement& b) { return *this = *this + b; }
    RingElement& operator*=(const RingElement& b) { return *this = *this * b; }

    bool is_unit() const {
        switch (ring_->kind()) {
        case RingKind::Integers:
            return value_ == 1 || value_ == -1;
        case RingKind::IntegersModN:
        case RingKind::PrimeField:
            return detail::egcd_mod(value_, ring_->modulus()).first == 1;
        case RingKind::LaurentOverPrimeField:
            return poly_.size() == 1; // nonzero monomials exactly
        }
        return false;
    }

    RingElement invert() const {
        RingElement r(ring_);
        switch (ring_->kind()) {
        case RingKind::Integers:
            if (value_ != 1 && value_ != -1)
                throw NotAUnitError("not a unit in Z: " + to_string());
            r.value_ = value_;
            return r;
        case RingKind::IntegersModN:
        case RingKind::PrimeField: {
            auto [g, x] = detail::egcd_mod(value_, ring_->modulus());
            if (g != 1)
                throw NotAUnitError("not a unit in " + ring_->name() + ": " + to_string());
            r.value_ = detail_reduce(x, ring_->modulus());
            return r;
        }
        case RingKind::LaurentOverPrimeField: {
            if (poly_.size() != 1)
                throw NotAUnitError("not a unit in " + ring_->name() + ": " + to_string());
            const auto& [k, c] = *poly_.begin();
            auto [g, x] = detail::egcd_mod(c, ring_->modulus());
            (void)g; // c is a nonzero residue mod a prime
            r.poly_[-k] = detail_reduce(x, ring_->modulus());
            return r;
        }
        }
        throw NotAUnitError("not a unit");
    }

    friend bool operator==(const RingElement& a, const RingElement& b) {
        return same_ring(a.ring_, b.ring_) && a.value_ == b.value_ && a.poly_ == b.poly_;
    }
    friend bool operator!=(const RingElement& a, const RingElement& b) { return !(a == b); }

    // --- finite-ring enumeration -------------------------------------

    // idx-th element in the canonical order (the residue idx).
    static RingElement element_at(const Ring& ring, std::uint64_t idx) {
        if (!ring->is_finite())
            throw UnsupportedError("cannot enumerate infinite ring " + ring->name());
        return from_integer(ring, Int(idx));
    }

    // Position of this element in the canonical enumeration.
    std::uint64_t digit() const {
        if (!ring_->is_finite())
            throw UnsupportedError("cannot enumerate infinite ring " + ring_->name());
        return static_cast<std::uint64_t>(value_);
    }

    // --- literals ------------------------------------------------------

    // integers / residues: optionally signed decimal.  Laurent: terms
    // `c`, `t^k`, or `c*t^k` joined by `+`, e.g. "1*t^-1 + 1 + 1*t^2".
    static RingElement parse(const Ring& ring, Scanner& sc) {
        if (ring->kind() == RingKind::LaurentOverPrimeField)
            return parse_laurent(ring, sc);
        bool neg = false;
        if (sc.try_consume('-'))
            neg = true;
        else
            sc.try_consume('+');
        Int v(sc.take_digits());
        return from_integer(ring, neg ? -v : v);
    }

    static RingElement parse(const Ring& ring, std::string_view text) {
        Scanner sc(text);
        RingElement e = parse(ring, sc);
        sc.expect_eof();
        return e;
    }

    std::string to_string() const {
        if (ring_->kind() != RingKind::LaurentOverPrimeField)
            return value_.str();
        if (poly_.empty())
            return "0";
        std::string out;
        for (const auto& [k, c] : poly_) {
            if (!out.empty())
                out += " + ";
            if (k == 0) {
                out += c.str();
            } else {
                out += c.str() + "*t^" + std::to_string(k);
            }
        }
        return out;
    }

    // A Laurent element whose literal needs parentheses when embedded in
    // a larger literal (anything but a plain constant).
    bool needs_parens() const {
        if (ring_->kind() != RingKind::LaurentOverPrimeField)
            return false;
        return !(poly_.empty() || (poly_.size() == 1 && poly_.begin()->first == 0));
    }

  private:
    explicit RingElement(Ring ring) : ring_(std::move(ring)) {}

    static Int detail_reduce(const Int& v, const Int& n) {
        if (n == 0)
            return v; // the integers
        Int r = v % n;
        if (r < 0)
            r += n;
        return r;
    }

    static void detail_add_term(std::map<long, Int>& poly, long k, const Int& c, const Int& p) {
        auto it = poly.find(k);
        Int sum = detail_reduce((it == poly.end() ? Int(0) : it->second) + c, p);
        if (sum == 0) {
            if (it != poly.end())
                poly.erase(it);
        } else if (it == poly.end()) {
            poly.emplace(k, sum);
        } else {
            it->second = sum;
        }
    }

    static RingElement parse_laurent(const Ring& ring, Scanner& sc) {
        RingElement acc = zero(ring);
        while (true) {
            Int coeff = 1;
            long expo = 0;
            if (sc.at_digit()) {
                coeff = Int(sc.take_digits());
                if (sc.try_consume('*')) {
                    if (!sc.try_consume('t'))
                        sc.fail("expected 't' after '*' in Laurent term");
                    expo = parse_exponent(sc);
                }
            } else if (sc.try_consume('t')) {
                expo = parse_exponent(sc);
            } else {
                sc.fail("expected a Laurent term");
            }
            acc += laurent_term(ring, coeff, expo);
            if (!sc.try_consume('+'))
                break;
        }
        return acc;
    }

    static long parse_exponent(Scanner& sc) {
        if (!sc.try_consume('^'))
            return 1;
        bool neg = sc.try_consume('-');
        if (!neg)
            sc.try_consume('+');
        std::string digits = sc.take_digits();
        if (digits.size() > 9)
            sc.fail("exponent out of range");
        long k = std::stol(digits);
        return neg ? -k : k;
    }

    Ring ring_;
    Int value_;               // all kinds except Laurent
    std::map<long, Int> poly_; // Laurent: exponent -> nonzero residue
};

} // namespace vahlen
