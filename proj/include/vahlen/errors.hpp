#pragma once

#include <stdexcept>
#include <string>

namespace vahlen {

// Mixing elements of different rings or spaces, or calling an operation
// whose precondition on the operands fails.
struct MismatchError : std::domain_error {
    using std::domain_error::domain_error;
};

// invert() on a non-unit.
struct NotAUnitError : std::domain_error {
    using std::domain_error::domain_error;
};

// Operation not available for this ring/space (e.g. enumerating an
// infinite ring, or a rank too large to represent).
struct UnsupportedError : std::domain_error {
    using std::domain_error::domain_error;
};

// Literal / config parse failure; carries the source position.
class ParseError : public std::runtime_error {
  public:
    ParseError(std::size_t position, const std::string& message)
        : std::runtime_error("parse error at position " + std::to_string(position) + ": " + message),
          position_(position) {}

    std::size_t position() const { return position_; }

  private:
    std::size_t position_;
};

} // namespace vahlen
