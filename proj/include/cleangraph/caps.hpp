#pragma once

#include <cstddef>
#include <cstdint>

namespace cleangraph {

// Size limits shared by the exhaustive scans and the graph builders.
struct Caps {
  std::size_t max_ring_order = 5000;
  std::size_t max_vertices = 5000;
  std::uint64_t search_budget = 10'000'000;

  // Defaults, with both size caps replaced by CLEANGRAPH_CAP when it is set
  // to a positive integer.
  static Caps from_env();
};

}  // namespace cleangraph
