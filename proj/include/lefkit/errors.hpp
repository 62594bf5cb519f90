#ifndef LEFKIT_ERRORS_HPP
#define LEFKIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lefkit {

// Base class for all errors thrown by the library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input text (polynomial grammar, point/ideal files).
class ParseError : public Error {
public:
  ParseError(const std::string& msg, std::size_t position)
      : Error(msg + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

// A randomized genericity requirement could not be met within the retry
// budget (field too small, or an unlucky seed).
class GenericityError : public Error {
public:
  explicit GenericityError(const std::string& msg) : Error(msg) {}
};

// A verification harness found a violated assertion.  This signals an
// implementation bug; the message carries the witness.
class VerificationError : public Error {
public:
  explicit VerificationError(const std::string& msg) : Error(msg) {}
};

} // namespace lefkit

#endif
