#pragma once

#include <stdexcept>
#include <string>

namespace cleangraph {

enum class ErrorKind {
  kInvalidSpec,   // malformed or semantically invalid ring/graph parameters
  kBudget,        // a size cap or search budget was exceeded
  kDomain,        // an argument outside the operation's domain
  kInconclusive,  // isomorphism search gave up before deciding
  kOutOfScope,    // a request the toolkit deliberately does not handle
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline Error invalid_spec(const std::string& what) {
  return {ErrorKind::kInvalidSpec, what};
}
inline Error budget_exceeded(const std::string& what) {
  return {ErrorKind::kBudget, what};
}
inline Error domain_error(const std::string& what) {
  return {ErrorKind::kDomain, what};
}

}  // namespace cleangraph
