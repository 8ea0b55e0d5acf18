#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cleangraph/graph.hpp"

namespace cleangraph {

// Cheap isomorphism invariants. Equal fingerprints are necessary, not
// sufficient, for isomorphism.
struct Fingerprint {
  struct Component {
    std::size_t order = 0;
    std::size_t size = 0;
    std::vector<std::size_t> degrees;  // sorted descending
    auto operator<=>(const Component&) const = default;
  };

  std::size_t order = 0;
  std::size_t size = 0;
  std::vector<std::size_t> degrees;     // sorted descending
  std::vector<Component> components;    // sorted

  bool operator==(const Fingerprint&) const = default;
};

Fingerprint fingerprint(const Graph& g);

// Name of the first invariant on which a and b differ ("order", "size",
// "degree sequence", "components"), or nullopt when they agree.
std::optional<std::string> first_difference(const Fingerprint& a,
                                            const Fingerprint& b);

// Connected components as vertex lists, each sorted, ordered by least vertex.
std::vector<std::vector<Vertex>> connected_components(const Graph& g);

enum class IsoVerdict { kIsomorphic, kNotIsomorphic };

struct IsoResult {
  IsoVerdict verdict = IsoVerdict::kNotIsomorphic;
  std::optional<std::vector<Vertex>> witness;  // g1 vertex -> g2 vertex
  std::uint64_t search_nodes = 0;
  std::optional<std::string> screened_by;

  bool isomorphic() const { return verdict == IsoVerdict::kIsomorphic; }
};

inline constexpr std::uint64_t kDefaultSearchBudget = 10'000'000;

// Decides g1 ~= g2. Screens by fingerprint, matches components, and within
// each pair of components runs colour refinement with individualisation and
// backtracking. A yes verdict always carries a verified witness. Throws
// Error(kInconclusive) when more than `budget` search nodes are needed.
IsoResult is_isomorphic(const Graph& g1, const Graph& g2,
                        std::uint64_t budget = kDefaultSearchBudget);

struct IsoEnumeration {
  std::vector<std::vector<Vertex>> maps;
  bool truncated = false;
  std::uint64_t search_nodes = 0;
};

inline constexpr std::size_t kMaxEnumerationOrder = 64;

// Every isomorphism g1 -> g2, stopping after `cap` of them (truncated is
// then set). Refuses graphs above kMaxEnumerationOrder vertices (kBudget).
IsoEnumeration all_isomorphisms(const Graph& g1, const Graph& g2,
                                std::size_t cap,
                                std::uint64_t budget = kDefaultSearchBudget);

struct BijectionCheck {
  bool ok = true;
  std::optional<std::pair<Vertex, Vertex>> violation;  // first bad g1 pair
};

// Checks that u ~ v in g1 iff map[u] ~ map[v] in g2 for every pair. Throws
// kDomain if map is not a bijection V(g1) -> V(g2).
BijectionCheck verify_bijection(const Graph& g1, const Graph& g2,
                                std::span<const Vertex> map);

}  // namespace cleangraph
