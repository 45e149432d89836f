//
// igwp - regularity and the word problem for free idempotent generated
// semigroups over finite biordered sets.
//

#ifndef IGWP_ERROR_HPP_
#define IGWP_ERROR_HPP_

#include <stdexcept>  // for runtime_error
#include <string>     // for string

namespace igwp {

  //! Machine-readable category carried by every igwp::Error.
  enum class ErrorCode {
    malformed_input,  // bad file, out of range index, unknown name
    precondition,     // an operation was called outside its domain
    domain,           // e.g. the action hits 0, a word leaves a D-class
    capability,       // an oracle cannot answer this question
    overflow,         // an enumeration exceeded its cap
    internal          // consistency check failed; indicates a bug or bad biorder
  };

  inline char const* error_code_name(ErrorCode c) noexcept {
    switch (c) {
      case ErrorCode::malformed_input:
        return "malformed-input";
      case ErrorCode::precondition:
        return "precondition";
      case ErrorCode::domain:
        return "domain";
      case ErrorCode::capability:
        return "capability";
      case ErrorCode::overflow:
        return "overflow";
      case ErrorCode::internal:
        return "internal";
    }
    return "unknown";
  }

  class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, std::string const& msg)
        : std::runtime_error(msg), _code(code) {}

    ErrorCode code() const noexcept {
      return _code;
    }

   private:
    ErrorCode _code;
  };

  [[noreturn]] inline void fail(ErrorCode code, std::string const& msg) {
    throw Error(code, msg);
  }

}  // namespace igwp

#endif  // IGWP_ERROR_HPP_
