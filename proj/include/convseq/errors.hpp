#ifndef CONVSEQ_ERRORS_HPP
#define CONVSEQ_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace convseq {

// Base class for every error the library throws on purpose.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A value violates a precondition of the requested operation
// (zero denominator, negative index, a_0 != 1, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

// Malformed textual input. position() is the byte offset of the
// offending character within the text being parsed.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

// The requested enumeration or computation would exceed a configured
// resource cap (e.g. the 2^(n-1) compositions of a large n).
class ResourceLimitError : public Error {
public:
    using Error::Error;
};

} // namespace convseq

#endif
