#pragma once

#include <stdexcept>
#include <string>

namespace frob {

// Typed failure conditions surfaced by the toolkit. Each carries a
// human-readable detail string acting as the witness (offending triple,
// failing tuple, singular matrix, ...).
enum class ErrorCode {
    ParseError,
    BadInput,
    NonAssociative, // algebra structure constants
    NotAssociative, // group multiplication table
    BadUnit,
    NotTracial,
    Degenerate,
    NotSurjective,
    NoIdentity,
    NoInverse,
    NotLatin,
    OrderTooLarge,
    UnknownPoint,
    NotAnNHomomorphism,
    BadCharacterTable,
    MalformedData,
    Inconsistent,
    WeightZeroIndex,
    NotMultiSymmetric,
    NoSolution,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& detail)
        : std::runtime_error(std::string(to_string(code)) + ": " + detail),
          code_(code),
          detail_(detail) {}

    ErrorCode code() const { return code_; }
    const std::string& detail() const { return detail_; }

  private:
    ErrorCode code_;
    std::string detail_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& detail) {
    throw Error(code, detail);
}

} // namespace frob
