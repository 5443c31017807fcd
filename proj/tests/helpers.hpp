#pragma once

// Shared fixtures for the test suite: ring/space shorthands and seeded
// random element generators.

#include <random>
#include <vector>

#include "vahlen/clifford.hpp"
#include "vahlen/qspace.hpp"
#include "vahlen/ring.hpp"

namespace th {

using namespace vahlen;

inline Ring gf(long p) { return RingDescriptor::prime_field(Int(p)); }
inline Ring zn(long n) { return RingDescriptor::integers_mod(Int(n)); }
inline Ring zz() { return RingDescriptor::integers(); }
inline Ring laurent(long p) { return RingDescriptor::laurent_over_prime_field(Int(p)); }

inline RingElement rel(const Ring& R, long long v) { return RingElement::from_int(R, v); }

inline std::vector<RingElement> qvec(const Ring& R, const std::vector<long long>& vals) {
    std::vector<RingElement> out;
    out.reserve(vals.size());
    for (long long v : vals)
        out.push_back(rel(R, v));
    return out;
}

// Orthogonal space with the given diagonal values.
inline SpacePtr diag_space(const Ring& R, const std::vector<long long>& q) {
    return QuadraticSpace::create(R, qvec(R, q));
}

inline SpacePtr space_with(const Ring& R, const std::vector<long long>& q,
                           const std::vector<std::tuple<std::size_t, std::size_t, long long>>& off) {
    std::vector<std::tuple<std::size_t, std::size_t, RingElement>> entries;
    for (const auto& [i, j, v] : off)
        entries.emplace_back(i, j, rel(R, v));
    return QuadraticSpace::create(R, qvec(R, q), entries);
}

inline RingElement random_scalar(std::mt19937_64& rng, const Ring& R) {
    switch (R->kind()) {
    case RingKind::Integers:
        return RingElement::from_int(R, (long long)(rng() % 19) - 9);
    case RingKind::IntegersModN:
    case RingKind::PrimeField:
        return RingElement::element_at(R, rng() % R->size());
    case RingKind::LaurentOverPrimeField: {
        std::uint64_t p = std::uint64_t(R->modulus());
        return RingElement::laurent_term(R, Int(rng() % p), (long)(rng() % 5) - 2);
    }
    }
    return RingElement::zero(R);
}

// Sparse random element: at most max_terms blade terms.
inline CliffordElement random_element(std::mt19937_64& rng, const SpacePtr& S,
                                      unsigned max_terms = 5) {
    CliffordElement x = CliffordElement::zero(S);
    std::uint32_t dim = 1u << S->rank();
    for (unsigned t = 0; t < max_terms; ++t) {
        std::uint32_t mask = std::uint32_t(rng() % dim);
        RingElement c = random_scalar(rng, S->ring());
        x = x + CliffordElement::blade(S, mask, c);
    }
    return x;
}

inline std::vector<RingElement> random_vector(std::mt19937_64& rng, const SpacePtr& S) {
    std::vector<RingElement> v;
    v.reserve(S->rank());
    for (std::size_t i = 0; i < S->rank(); ++i)
        v.push_back(random_scalar(rng, S->ring()));
    return v;
}

} // namespace th
