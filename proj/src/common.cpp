#include <cstdlib>

#include "cleangraph/caps.hpp"
#include "cleangraph/error.hpp"

namespace cleangraph {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidSpec: return "invalid-spec";
    case ErrorKind::kBudget: return "budget";
    case ErrorKind::kDomain: return "domain";
    case ErrorKind::kInconclusive: return "inconclusive";
    case ErrorKind::kOutOfScope: return "out-of-scope";
  }
  return "unknown";
}

Caps Caps::from_env() {
  Caps caps;
  if (const char* raw = std::getenv("CLEANGRAPH_CAP")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(raw, &end, 10);
    if (end != raw && *end == '\0' && v > 0) {
      caps.max_ring_order = static_cast<std::size_t>(v);
      caps.max_vertices = static_cast<std::size_t>(v);
    }
  }
  return caps;
}

}  // namespace cleangraph
