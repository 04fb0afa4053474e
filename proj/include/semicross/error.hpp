#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace semicross {

  // Bad input from the caller: rank mismatch, malformed partition, ...
  class UsageError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
  };

  // A configured size limit would be exceeded.
  class ResourceError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // A construction produced an object that failed its own verification.
  // Raised only if a mathematical claim checked by the library is false.
  class VerificationError : public std::logic_error {
   public:
    using std::logic_error::logic_error;
  };

  class ParseError : public UsageError {
   public:
    ParseError(std::string const& msg, std::size_t pos)
        : UsageError(msg + " at position " + std::to_string(pos)),
          _pos(pos) {}

    std::size_t position() const noexcept {
      return _pos;
    }

   private:
    std::size_t _pos;
  };

}  // namespace semicross
