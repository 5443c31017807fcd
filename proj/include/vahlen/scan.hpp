#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include "vahlen/errors.hpp"

namespace vahlen {

// Cursor over a literal being parsed.  Whitespace is insignificant
// everywhere, so every lookahead skips it first.
struct Scanner {
    std::string_view src;
    std::size_t pos = 0;

    explicit Scanner(std::string_view s) : src(s) {}

    void skip_ws() {
        while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos])))
            ++pos;
    }

    bool eof() {
        skip_ws();
        return pos >= src.size();
    }

    char peek() {
        skip_ws();
        return pos < src.size() ? src[pos] : '\0';
    }

    bool try_consume(char c) {
        if (peek() != c)
            return false;
        ++pos;
        return true;
    }

    void expect(char c) {
        if (!try_consume(c))
            fail(std::string("expected '") + c + "'");
    }

    bool at_digit() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }

    // One or more decimal digits.
    std::string take_digits() {
        if (!at_digit())
            fail("expected a digit");
        std::string out;
        while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos])))
            out += src[pos++];
        return out;
    }

    void expect_eof() {
        if (!eof())
            fail("unexpected trailing input");
    }

    [[noreturn]] void fail(const std::string& message) {
        skip_ws();
        throw ParseError(pos, message);
    }
};

} // namespace vahlen
