#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "cleangraph/error.hpp"
#include "cleangraph/ring.hpp"

namespace cleangraph::cli {

enum class SpecErrorCode {
  kSyntax,
  kNumberTooLarge,    // a literal above kMaxLiteral
  kZeroModulus,       // Z0
  kNonPrimeModulus,   // M2(Z_n) or Z_n[x]/(f) with n not prime
  kDegreeTooLow,      // constant modulus polynomial
  kNotMonic,
};

const char* to_string(SpecErrorCode code);

inline constexpr std::uint64_t kMaxLiteral = 1'000'000;

// A ring-spec parse failure. kind() is always kInvalidSpec; offset() is the
// byte position where the problem was detected.
class SpecError : public Error {
 public:
  SpecError(SpecErrorCode code, std::size_t offset, const std::string& what);

  SpecErrorCode code() const noexcept { return code_; }
  std::size_t offset() const noexcept { return offset_; }

 private:
  SpecErrorCode code_;
  std::size_t offset_;
};

// Grammar (whitespace between tokens is ignored):
//   spec     := term { "x" term }            left-associative product
//   term     := "Z" UINT
//             | "M2(" "Z" UINT ")"
//             | "Z" UINT "[x]/(" poly ")"
//             | "(" spec ")"
//   poly     := monomial { ("+" | "-") monomial }
//   monomial := [UINT] [ "x" [ "^" UINT ] ]   (not both empty)
// Coefficients are reduced mod p; the polynomial must be monic of degree >= 1.
RingSpec parse_ring_spec(std::string_view text);

}  // namespace cleangraph::cli
