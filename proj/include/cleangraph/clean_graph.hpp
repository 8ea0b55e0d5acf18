#pragma once

#include <cstddef>
#include <unordered_map>
#include <vector>

#include "cleangraph/caps.hpp"
#include "cleangraph/graph.hpp"
#include "cleangraph/ring_analysis.hpp"

namespace cleangraph {

// Vertex label of the clean graph: an idempotent e and a unit u.
struct CleanVertex {
  ElemIndex e = 0;
  ElemIndex u = 0;
  bool operator==(const CleanVertex&) const = default;
};

// A clean graph (or induced subgraph of one) with its vertex labels.
// Vertices are ordered idempotent-major, then by unit-table position.
struct CleanGraph {
  Graph graph;
  std::vector<CleanVertex> vertices;

  // Index of the vertex (e, u). Throws kDomain if absent.
  Vertex vertex_of(CleanVertex v) const;

  std::unordered_map<std::uint64_t, Vertex> index;  // (e << 32 | u) -> vertex
};

// Cl(R): all pairs (e, u); (e, u) ~ (f, v) iff ef = fe = 0 or uv = vu = 1.
CleanGraph clean_graph(const RingTables& tables, const Caps& caps = {});
// Induced on e = 0; always complete.
CleanGraph cl1(const RingTables& tables, const Caps& caps = {});
// Induced on e != 0.
CleanGraph cl2(const RingTables& tables, const Caps& caps = {});

// I(R): nontrivial idempotents, adjacent iff two-sided orthogonal. Vertices
// follow IdempotentTable::nontrivial.
Graph idempotent_graph(const RingTables& tables);

// Degree of (e, u) in Cl2(R) by the closed form
//   (m - 1) + O_e (k - 1)   if u^2 = 1
//    m      + O_e (k - 1)   otherwise
// with m = |Id(R) \ {0}| and k = |U(R)|. Throws kDomain for e = 0 or when
// e, u are not an idempotent and a unit.
std::size_t cl2_degree_formula(const RingTables& tables, ElemIndex e,
                               ElemIndex u);

// Cl2(R) rebuilt as Shu^t_k(I(R)) with t = |U'(R)|, k = |U(R)|, together with
// the candidate isomorphism: copy i <-> unit at table position i, apex of
// copy i <-> (1, u_i), base vertex e in copy i <-> (e, u_i).
struct ShurikenRoute {
  ShurikenGraph shuriken;
  CleanGraph cl2;
  std::vector<Vertex> to_cl2;  // shuriken vertex -> cl2 vertex
};

ShurikenRoute cl2_via_shuriken(const RingTables& tables, const Caps& caps = {});

}  // namespace cleangraph
