#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace cleangraph {

using Vertex = std::uint32_t;

// Finite simple undirected graph. Vertices are 0..order()-1 in construction
// order and carry display labels. Neighbor lists are sorted; a dense bit
// matrix backs O(1) adjacency queries.
class Graph {
 public:
  Graph() = default;

  std::size_t order() const { return labels_.size(); }
  std::size_t size() const { return edge_count_; }

  bool adjacent(Vertex u, Vertex v) const {
    return (bits_[u * words_ + (v >> 6)] >> (v & 63)) & 1U;
  }
  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  std::size_t degree(Vertex v) const { return adj_[v].size(); }
  const std::string& label(Vertex v) const { return labels_[v]; }
  const std::vector<std::string>& labels() const { return labels_; }

  // Edges (u, v) with u < v, sorted lexicographically.
  std::vector<std::pair<Vertex, Vertex>> edges() const;
  std::vector<std::size_t> degree_sequence() const;  // sorted descending

  // Subgraph induced on `keep`, in the given order.
  Graph induced(std::span<const Vertex> keep) const;
  // The graph with vertex v renamed perm[v]; labels travel with vertices.
  Graph relabeled(std::span<const Vertex> perm) const;

  // Same order and identical adjacency (labels ignored).
  bool same_adjacency(const Graph& other) const;

 private:
  friend class GraphBuilder;

  std::vector<std::string> labels_;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<std::uint64_t> bits_;
  std::size_t words_ = 0;
  std::size_t edge_count_ = 0;
};

class GraphBuilder {
 public:
  GraphBuilder() = default;
  explicit GraphBuilder(std::vector<std::string> labels);

  Vertex add_vertex(std::string label);
  // Duplicate edges are ignored; self-loops are rejected with kDomain.
  void add_edge(Vertex u, Vertex v);
  std::size_t order() const { return labels_.size(); }

  Graph build() &&;

 private:
  std::vector<std::string> labels_;
  std::vector<std::pair<Vertex, Vertex>> edges_;
};

Graph empty_graph(std::size_t n);
Graph complete_graph(std::size_t n);
// Vertex-disjoint union; labels become "copy:label" with copy 1 or 2.
Graph disjoint_union(const Graph& g1, const Graph& g2);
// m vertex-disjoint copies of g; labels carry the 1-based copy index.
Graph copies(std::size_t m, const Graph& g);
// Disjoint union plus every edge between the two sides.
Graph graph_join(const Graph& g1, const Graph& g2);

struct ShurikenParams {
  std::size_t t = 0;
  std::size_t n = 1;
  Graph base;
};

// Position of a shuriken vertex: copy in 1..n, and a base vertex or the apex.
struct ShurikenVertex {
  std::size_t copy = 1;
  bool apex = false;
  Vertex base = 0;
};

struct ShurikenGraph {
  Graph graph;
  std::vector<ShurikenVertex> vertices;  // copy-major; base vertices, then apex

  Vertex index_of(std::size_t copy, bool apex, Vertex base) const;
  std::size_t copy_size() const;
};

// The (t, n)-shuriken of params.base. Requires t <= n and n - t even;
// throws kInvalidSpec otherwise.
ShurikenGraph shuriken(const ShurikenParams& params);

}  // namespace cleangraph
