#ifndef TORSOR_ERRORS_HPP
#define TORSOR_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace torsor {

/// Base class for all library errors.
class Error : public std::runtime_error {
   public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed input text; carries the byte offset of the offending token.
class ParseError : public Error {
   public:
    ParseError(const std::string& msg, std::size_t pos)
        : Error(msg + " (at position " + std::to_string(pos) + ")"), pos_(pos) {}
    std::size_t position() const noexcept { return pos_; }

   private:
    std::size_t pos_;
};

/// Structurally invalid operands: mismatched fields, lengths, variants, bad parameters.
class DomainError : public Error {
   public:
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

/// A truncated-series computation cannot certify the requested coefficient.
class PrecisionError : public Error {
   public:
    explicit PrecisionError(const std::string& msg) : Error(msg) {}
};

/// An exact integer division required by a ghost-inversion recursion failed.
class DivisibilityError : public Error {
   public:
    explicit DivisibilityError(const std::string& msg) : Error(msg) {}
};

/// A critical point (zero or pole of the data) is not rational over the working field.
class NonRationalPointError : public Error {
   public:
    explicit NonRationalPointError(const std::string& msg) : Error(msg) {}
};

}  // namespace torsor

#endif
