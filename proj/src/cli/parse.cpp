#include "cleangraph/cli/parse.hpp"

#include <cctype>
#include <map>
#include <vector>

namespace cleangraph::cli {

const char* to_string(SpecErrorCode code) {
  switch (code) {
    case SpecErrorCode::kSyntax: return "syntax";
    case SpecErrorCode::kNumberTooLarge: return "number-too-large";
    case SpecErrorCode::kZeroModulus: return "zero-modulus";
    case SpecErrorCode::kNonPrimeModulus: return "non-prime-modulus";
    case SpecErrorCode::kDegreeTooLow: return "degree-too-low";
    case SpecErrorCode::kNotMonic: return "not-monic";
  }
  return "unknown";
}

SpecError::SpecError(SpecErrorCode code, std::size_t offset,
                     const std::string& what)
    : Error(ErrorKind::kInvalidSpec,
            std::string(to_string(code)) + " error at byte " +
                std::to_string(offset) + ": " + what),
      code_(code),
      offset_(offset) {}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  RingSpec parse() {
    RingSpec out = spec();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw SpecError(SpecErrorCode::kSyntax, pos_, what);
  }

  void skip_ws() {
    while (pos_ < s_.size() &&
           std::isspace(static_cast<unsigned char>(s_[pos_]))) {
      ++pos_;
    }
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) {
      fail(std::string("expected '") + c + "'" +
           (pos_ < s_.size() ? "" : " before end of input"));
    }
  }

  bool peek_digit() {
    skip_ws();
    return pos_ < s_.size() &&
           std::isdigit(static_cast<unsigned char>(s_[pos_]));
  }

  std::uint64_t uint() {
    if (!peek_digit()) fail("expected a number");
    const std::size_t start = pos_;
    std::uint64_t v = 0;
    while (pos_ < s_.size() &&
           std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + static_cast<std::uint64_t>(s_[pos_] - '0');
      if (v > kMaxLiteral) {
        throw SpecError(SpecErrorCode::kNumberTooLarge, start,
                        "number exceeds " + std::to_string(kMaxLiteral));
      }
      ++pos_;
    }
    return v;
  }

  RingSpec spec() {
    RingSpec out = term();
    while (accept('x')) out = RingSpec::product(std::move(out), term());
    return out;
  }

  std::uint64_t prime_modulus(std::size_t at, const char* what) {
    const std::uint64_t p = uint();
    if (!is_prime(p)) {
      throw SpecError(SpecErrorCode::kNonPrimeModulus, at,
                      std::string(what) + " needs a prime modulus, got " +
                          std::to_string(p));
    }
    return p;
  }

  RingSpec term() {
    skip_ws();
    const std::size_t start = pos_;
    if (accept('(')) {
      RingSpec inner = spec();
      expect(')');
      return inner;
    }
    if (accept('M')) {
      if (!accept('2')) fail("expected 'M2('");
      expect('(');
      expect('Z');
      const std::uint64_t p = prime_modulus(start, "M2");
      expect(')');
      return RingSpec::m2(p);
    }
    if (!accept('Z')) fail("expected a ring ('Z', 'M2(' or '(')");
    const std::size_t number_at = pos_;
    if (peek('[') || !peek_digit()) fail("expected a number after 'Z'");
    const std::uint64_t n = uint();
    if (!peek('[')) {
      if (n == 0) {
        throw SpecError(SpecErrorCode::kZeroModulus, number_at,
                        "Z0 has no identity");
      }
      return RingSpec::zn(n);
    }
    if (!is_prime(n)) {
      throw SpecError(SpecErrorCode::kNonPrimeModulus, start,
                      "polynomial quotient needs a prime modulus, got " +
                          std::to_string(n));
    }
    expect('[');
    expect('x');
    expect(']');
    expect('/');
    expect('(');
    const std::size_t poly_at = pos_;
    std::vector<std::uint64_t> coeffs = poly(n);
    expect(')');
    if (coeffs.size() < 2) {
      throw SpecError(SpecErrorCode::kDegreeTooLow, poly_at,
                      "modulus polynomial must have degree >= 1");
    }
    if (coeffs.back() != 1) {
      throw SpecError(SpecErrorCode::kNotMonic, poly_at,
                      "modulus polynomial must be monic");
    }
    return RingSpec::quot_poly(n, std::move(coeffs));
  }

  // Ascending coefficients mod p, trailing zeros removed.
  std::vector<std::uint64_t> poly(std::uint64_t p) {
    std::map<std::uint64_t, std::uint64_t> acc;  // exponent -> coeff mod p
    bool negative = false;
    for (;;) {
      skip_ws();
      const std::size_t mono_at = pos_;
      std::uint64_t coeff = 1, exp = 0;
      bool any = false;
      if (peek_digit()) {
        coeff = uint();
        any = true;
      }
      if (accept('x')) {
        any = true;
        exp = 1;
        if (accept('^')) exp = uint();
      }
      if (!any) {
        pos_ = mono_at;
        fail("expected a monomial");
      }
      coeff %= p;
      if (negative) coeff = (p - coeff) % p;
      acc[exp] = (acc[exp] + coeff) % p;
      if (accept('+')) {
        negative = false;
      } else if (accept('-')) {
        negative = true;
      } else {
        break;
      }
    }
    std::uint64_t degree = 0;
    for (const auto& [e, c] : acc) {
      if (c != 0) degree = std::max(degree, e);
    }
    std::vector<std::uint64_t> out(degree + 1, 0);
    for (const auto& [e, c] : acc) {
      if (e <= degree) out[e] = c;
    }
    return out;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

RingSpec parse_ring_spec(std::string_view text) {
  return Parser(text).parse();
}

}  // namespace cleangraph::cli
