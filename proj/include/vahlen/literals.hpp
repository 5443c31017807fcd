#pragma once

// Parsers for element and matrix literals; emission lives on the classes
// themselves.  Grammar for an element:
//
//   element := term ('+' term)*
//   term    := '(' ring-literal ')' [ '*' blade ]
//            | signed-digits        [ '*' blade ]
//            | blade
//   blade   := ('e' digits)+        1-based, strictly increasing
//
// e.g. "2*e1e3 + 1*e2 + 2"; a matrix is four elements joined by ';',
// row-major.  Whitespace is insignificant.

#include <string_view>

#include "vahlen/clifford.hpp"
#include "vahlen/scan.hpp"
#include "vahlen/vahlen.hpp"

namespace vahlen {

namespace detail {

inline std::uint32_t parse_blade(Scanner& sc, const SpacePtr& S) {
    std::uint32_t mask = 0;
    long last = -1;
    while (sc.peek() == 'e') {
        sc.expect('e');
        std::string digits = sc.take_digits();
        if (digits.size() > 6)
            sc.fail("generator index out of range");
        long idx = std::stol(digits) - 1; // displayed 1-based
        if (idx < 0 || std::size_t(idx) >= S->rank())
            sc.fail("generator index out of range for rank " + std::to_string(S->rank()));
        if (idx <= last)
            sc.fail("blade indices must be strictly increasing");
        mask |= 1u << idx;
        last = idx;
    }
    if (mask == 0)
        sc.fail("expected a blade");
    return mask;
}

inline void parse_term(Scanner& sc, const SpacePtr& S, CliffordElement& acc) {
    const Ring& R = S->ring();
    RingElement c = RingElement::one(R);
    bool have_coeff = false;
    if (sc.peek() == '(') {
        sc.expect('(');
        c = RingElement::parse(R, sc);
        sc.expect(')');
        have_coeff = true;
    } else if (sc.at_digit() || sc.peek() == '-' || sc.peek() == '+') {
        bool neg = sc.try_consume('-');
        if (!neg)
            sc.try_consume('+');
        if (sc.at_digit()) {
            Int v(sc.take_digits());
            c = RingElement::from_integer(R, neg ? -v : v);
            have_coeff = true;
        } else if (sc.peek() == 'e') {
            // "-e1" reads as -1 * e1
            if (neg)
                c = -c;
        } else {
            sc.fail("expected a coefficient or a blade");
        }
    }
    if (have_coeff) {
        if (!sc.try_consume('*')) {
            acc = acc + CliffordElement::scalar(S, c);
            return;
        }
        // fall through to the blade
    } else if (sc.peek() != 'e') {
        sc.fail("expected a coefficient or a blade");
    }
    std::uint32_t mask = parse_blade(sc, S);
    acc = acc + CliffordElement::blade(S, mask, c);
}

} // namespace detail

inline CliffordElement parse_element(const SpacePtr& S, Scanner& sc) {
    CliffordElement acc = CliffordElement::zero(S);
    do {
        detail::parse_term(sc, S, acc);
    } while (sc.try_consume('+') || sc.peek() == '-');
    return acc;
}

inline CliffordElement parse_element(const SpacePtr& S, std::string_view text) {
    Scanner sc(text);
    CliffordElement x = parse_element(S, sc);
    sc.expect_eof();
    return x;
}

// "alpha; beta; gamma; delta"
inline CliffordMatrix2 parse_matrix(const SpacePtr& S, std::string_view text) {
    Scanner sc(text);
    CliffordElement a = parse_element(S, sc);
    sc.expect(';');
    CliffordElement b = parse_element(S, sc);
    sc.expect(';');
    CliffordElement c = parse_element(S, sc);
    sc.expect(';');
    CliffordElement d = parse_element(S, sc);
    sc.expect_eof();
    return {std::move(a), std::move(b), std::move(c), std::move(d)};
}

} // namespace vahlen
