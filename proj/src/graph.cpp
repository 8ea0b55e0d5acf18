#include "cleangraph/graph.hpp"

#include <algorithm>

#include "cleangraph/error.hpp"

namespace cleangraph {

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::vector<std::size_t> Graph::degree_sequence() const {
  std::vector<std::size_t> d;
  d.reserve(order());
  for (const auto& nb : adj_) d.push_back(nb.size());
  std::sort(d.rbegin(), d.rend());
  return d;
}

Graph Graph::induced(std::span<const Vertex> keep) const {
  std::vector<std::int64_t> new_index(order(), -1);
  GraphBuilder b;
  for (Vertex v : keep) {
    if (v >= order() || new_index[v] >= 0) {
      throw domain_error("induced: vertex list must be distinct and in range");
    }
    new_index[v] = b.add_vertex(labels_[v]);
  }
  for (Vertex v : keep) {
    for (Vertex w : adj_[v]) {
      if (new_index[w] >= 0 && v < w) {
        b.add_edge(static_cast<Vertex>(new_index[v]),
                   static_cast<Vertex>(new_index[w]));
      }
    }
  }
  return std::move(b).build();
}

Graph Graph::relabeled(std::span<const Vertex> perm) const {
  if (perm.size() != order()) throw domain_error("relabel: size mismatch");
  std::vector<std::string> labels(order());
  std::vector<bool> seen(order(), false);
  for (Vertex v = 0; v < order(); ++v) {
    if (perm[v] >= order() || seen[perm[v]]) {
      throw domain_error("relabel: not a permutation");
    }
    seen[perm[v]] = true;
    labels[perm[v]] = labels_[v];
  }
  GraphBuilder b(std::move(labels));
  for (const auto& [u, v] : edges()) b.add_edge(perm[u], perm[v]);
  return std::move(b).build();
}

bool Graph::same_adjacency(const Graph& other) const {
  return order() == other.order() && adj_ == other.adj_;
}

GraphBuilder::GraphBuilder(std::vector<std::string> labels)
    : labels_(std::move(labels)) {}

Vertex GraphBuilder::add_vertex(std::string label) {
  labels_.push_back(std::move(label));
  return static_cast<Vertex>(labels_.size() - 1);
}

void GraphBuilder::add_edge(Vertex u, Vertex v) {
  if (u == v) throw domain_error("self-loop at vertex " + std::to_string(u));
  if (u >= labels_.size() || v >= labels_.size()) {
    throw domain_error("edge endpoint out of range");
  }
  edges_.emplace_back(std::min(u, v), std::max(u, v));
}

Graph GraphBuilder::build() && {
  Graph g;
  const std::size_t n = labels_.size();
  g.labels_ = std::move(labels_);
  g.adj_.assign(n, {});
  g.words_ = (n + 63) / 64;
  g.bits_.assign(n * g.words_, 0);
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  for (const auto& [u, v] : edges_) {
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
    g.bits_[u * g.words_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
    g.bits_[v * g.words_ + (u >> 6)] |= std::uint64_t{1} << (u & 63);
  }
  for (auto& nb : g.adj_) std::sort(nb.begin(), nb.end());
  g.edge_count_ = edges_.size();
  return g;
}

Graph empty_graph(std::size_t n) {
  GraphBuilder b;
  for (std::size_t i = 0; i < n; ++i) b.add_vertex(std::to_string(i));
  return std::move(b).build();
}

Graph complete_graph(std::size_t n) {
  GraphBuilder b;
  for (std::size_t i = 0; i < n; ++i) b.add_vertex(std::to_string(i));
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) b.add_edge(u, v);
  }
  return std::move(b).build();
}

namespace {

// Appends g to b with labels prefixed by `tag:`; returns the offset.
Vertex append(GraphBuilder& b, const Graph& g, const std::string& tag) {
  const auto offset = static_cast<Vertex>(b.order());
  for (Vertex v = 0; v < g.order(); ++v) b.add_vertex(tag + ":" + g.label(v));
  for (const auto& [u, v] : g.edges()) b.add_edge(offset + u, offset + v);
  return offset;
}

}  // namespace

Graph disjoint_union(const Graph& g1, const Graph& g2) {
  GraphBuilder b;
  append(b, g1, "1");
  append(b, g2, "2");
  return std::move(b).build();
}

Graph copies(std::size_t m, const Graph& g) {
  GraphBuilder b;
  for (std::size_t i = 1; i <= m; ++i) append(b, g, std::to_string(i));
  return std::move(b).build();
}

Graph graph_join(const Graph& g1, const Graph& g2) {
  GraphBuilder b;
  append(b, g1, "1");
  const Vertex offset = append(b, g2, "2");
  for (Vertex u = 0; u < g1.order(); ++u) {
    for (Vertex v = 0; v < g2.order(); ++v) b.add_edge(u, offset + v);
  }
  return std::move(b).build();
}

std::size_t ShurikenGraph::copy_size() const {
  return vertices.empty() ? 0 : graph.order() / vertices.back().copy;
}

Vertex ShurikenGraph::index_of(std::size_t copy, bool apex,
                               Vertex base) const {
  const std::size_t per_copy = copy_size();
  return static_cast<Vertex>((copy - 1) * per_copy +
                             (apex ? per_copy - 1 : base));
}

ShurikenGraph shuriken(const ShurikenParams& params) {
  const std::size_t t = params.t, n = params.n;
  if (n == 0 || t > n || (n - t) % 2 != 0) {
    throw invalid_spec("shuriken needs n >= 1, t <= n and n - t even (t=" +
                       std::to_string(t) + ", n=" + std::to_string(n) + ")");
  }
  const Graph& base = params.base;
  const std::size_t per_copy = base.order() + 1;

  ShurikenGraph out;
  GraphBuilder b;
  for (std::size_t i = 1; i <= n; ++i) {
    for (Vertex v = 0; v < base.order(); ++v) {
      b.add_vertex("(" + std::to_string(i) + "," + base.label(v) + ")");
      out.vertices.push_back({i, false, v});
    }
    b.add_vertex("(" + std::to_string(i) + ",z)");
    out.vertices.push_back({i, true, 0});
  }
  auto at = [per_copy](std::size_t copy, std::size_t slot) {
    return static_cast<Vertex>((copy - 1) * per_copy + slot);
  };

  // Base edges between every ordered pair of copies, including i = j.
  for (const auto& [u, v] : base.edges()) {
    for (std::size_t i = 1; i <= n; ++i) {
      for (std::size_t j = 1; j <= n; ++j) b.add_edge(at(i, u), at(j, v));
    }
  }
  // The first t copies are cliques on V(G) and the apex.
  for (std::size_t i = 1; i <= t; ++i) {
    for (std::size_t x = 0; x < per_copy; ++x) {
      for (std::size_t y = x + 1; y < per_copy; ++y) {
        b.add_edge(at(i, x), at(i, y));
      }
    }
  }
  // Copy i is completely joined to copy n + t + 1 - i.
  for (std::size_t i = t + 1; i <= (n + t) / 2; ++i) {
    const std::size_t j = n + t + 1 - i;
    for (std::size_t x = 0; x < per_copy; ++x) {
      for (std::size_t y = 0; y < per_copy; ++y) b.add_edge(at(i, x), at(j, y));
    }
  }
  out.graph = std::move(b).build();
  return out;
}

}  // namespace cleangraph
