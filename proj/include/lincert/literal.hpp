#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "lincert/system.hpp"

namespace lincert {

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t offset, const std::string& message)
      : Error(Errc::SyntaxError, "syntax error at offset " + std::to_string(offset) + ": " + message),
        offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

// Grammar (whitespace ignored):
//   LITERAL := ['L'] ['_'] INT '(' [TERM (',' TERM)*] ')'
//   TERM    := INT ['^' INT]
// Exponents must be >= 1. The result is normalized.
LinearSystem parse_system(std::string_view text);

// Canonical form, e.g. "6(2^8,1^4)"; runs of length 1 print without exponent.
std::string format_system(const LinearSystem& system);

}  // namespace lincert
